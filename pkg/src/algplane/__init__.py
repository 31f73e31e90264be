"""Projective planes over the complex, double and dual numbers, seen as line
families of RP^5: arithmetic, embedding, focal analysis and the ruled 3-folds
swept by smooth algebra-lines."""

from .algebra2d import A2, AlgebraKind, Mat2, KINDS
from .errors import (
    ContractError,
    DegenerateInput,
    DegenerateSample,
    DivisorError,
    InconsistentFoci,
    RepresentationError,
)

__all__ = [
    "A2",
    "AlgebraKind",
    "Mat2",
    "KINDS",
    "ContractError",
    "DegenerateInput",
    "DegenerateSample",
    "DivisorError",
    "InconsistentFoci",
    "RepresentationError",
]
