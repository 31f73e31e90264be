"""Points, lines and frames of the projective plane over an algebra.

A point is a column ``(X0, X1, X2)`` of algebra elements, defined up to right
multiplication by an invertible element. Its real 6x2 matrix stacks the 2x2
representations of the three coordinates; the two columns of that matrix are
the vectors ``x0, x1`` used by :mod:`algplane.grassmann`.

Points are never normalized implicitly: over the double and dual numbers a
coordinate may be a zero divisor, so normalization is an explicit call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import exactlin
from .algebra2d import A2, AlgebraKind, inverse, is_zero_divisor, mul, to_matrix
from .errors import ContractError, DivisorError

INCIDENCE_TOL = 1e-10


def _same_kind(kind: AlgebraKind, values: Sequence[A2]) -> None:
    for v in values:
        if v.kind is not kind:
            raise ContractError(f"mixed algebra kinds: {v.kind.value} in a {kind.value} object")


def stack_matrix(coords: Sequence[A2]) -> list[list]:
    """Stack the 2x2 representations of ``coords`` into a (2n)x2 real matrix."""
    rows: list[list] = []
    for c in coords:
        m = to_matrix(c)
        rows.append([m.a00, m.a01])
        rows.append([m.a10, m.a11])
    return rows


def column_vectors(coords: Sequence[A2]) -> tuple[tuple, tuple]:
    """The two real columns ``(x0, x1)`` of the stacked coordinate matrix."""
    rows = stack_matrix(coords)
    return tuple(r[0] for r in rows), tuple(r[1] for r in rows)


def unit_action(kind: AlgebraKind, v: Sequence) -> tuple:
    """Right multiplication by ``u`` seen on a first column: ``x0 -> x1``."""
    s = kind.unit_square
    out = []
    for k in range(0, len(v), 2):
        out.extend((s * v[k + 1], v[k]))
    return tuple(out)


@dataclass(frozen=True)
class PointA:
    kind: AlgebraKind
    coords: tuple[A2, A2, A2]

    def __post_init__(self):
        if len(self.coords) != 3:
            raise ContractError("a point needs three coordinates")
        object.__setattr__(self, "coords", tuple(self.coords))
        _same_kind(self.kind, self.coords)
        if exactlin.rank(stack_matrix(self.coords)) != 2:
            raise ContractError("point coordinates have dependent columns")

    @classmethod
    def of(cls, kind: AlgebraKind, *coords: A2) -> "PointA":
        return cls(kind, tuple(coords))

    @property
    def is_exact(self) -> bool:
        return all(c.is_exact for c in self.coords)

    def matrix(self) -> list[list]:
        return stack_matrix(self.coords)

    def columns(self) -> tuple[tuple, tuple]:
        return column_vectors(self.coords)

    def rmul(self, p: A2) -> "PointA":
        """Right multiplication of every coordinate by ``p`` (same projective point)."""
        if is_zero_divisor(p):
            raise DivisorError(f"{p} is a zero divisor")
        return PointA(self.kind, tuple(mul(c, p) for c in self.coords))

    def to_float(self) -> "PointA":
        return PointA(self.kind, tuple(c.to_float() for c in self.coords))


def basis_point(kind: AlgebraKind, index: int, exact: bool = True) -> PointA:
    """``E_0, E_1, E_2``."""
    coords = [A2.zero(kind, exact)] * 3
    coords[index] = A2.one(kind, exact)
    return PointA(kind, tuple(coords))


@dataclass(frozen=True)
class LineA:
    """The line ``U0 X0 + U1 X1 + U2 X2 = 0``."""

    kind: AlgebraKind
    coeffs: tuple[A2, A2, A2]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        _same_kind(self.kind, self.coeffs)
        rows = stack_matrix(self.coeffs)
        if exactlin.rank(exactlin.transpose(rows)) != 2:
            raise ContractError("line coefficients are degenerate")

    def value(self, p: PointA) -> A2:
        if p.kind is not self.kind:
            raise ContractError("line and point over different algebras")
        total = A2.zero(self.kind, exact=p.is_exact)
        for u, x in zip(self.coeffs, p.coords):
            total = total + mul(u, x)
        return total

    def lmul(self, p: A2) -> "LineA":
        if is_zero_divisor(p):
            raise DivisorError(f"{p} is a zero divisor")
        return LineA(self.kind, tuple(mul(p, c) for c in self.coeffs))


def incident(u: LineA, p: PointA, tol: float = INCIDENCE_TOL) -> bool:
    v = u.value(p)
    if v.is_exact:
        return v.is_zero()
    return abs(v.x) <= tol and abs(v.y) <= tol


def normalize(p: PointA, by: int = 0) -> PointA:
    pivot = p.coords[by]
    if is_zero_divisor(pivot):
        raise DivisorError(f"coordinate {by} ({pivot}) is a zero divisor")
    return p.rmul(inverse(pivot))


def adjacent(p: PointA, q: PointA, tol: float = exactlin.RANK_TOL) -> bool:
    """Adjacent points: the 6x4 matrix of both coordinate stacks has rank < 4."""
    if p.kind is not q.kind:
        raise ContractError("points over different algebras")
    stacked = [a + b for a, b in zip(p.matrix(), q.matrix())]
    return exactlin.rank(stacked, tol) < 4


@dataclass(frozen=True)
class MatrixCoordinate:
    x1: A2
    x2: A2


def matrix_coordinate(p: PointA) -> MatrixCoordinate:
    x0 = p.coords[0]
    if is_zero_divisor(x0):
        raise DivisorError(f"X0 = {x0} is a zero divisor; the point meets E1 ^ E2 non-generically")
    inv = inverse(x0)
    return MatrixCoordinate(mul(p.coords[1], inv), mul(p.coords[2], inv))


def _realify(values: Sequence[A2]) -> list:
    out = []
    for v in values:
        out.extend((v.x, v.y))
    return out


def line_through(p: PointA, q: PointA) -> LineA:
    """The unique line through two non-adjacent points (exact nullspace)."""
    if adjacent(p, q):
        raise ContractError("adjacent points do not determine a unique line")
    kind = p.kind
    exact = p.is_exact and q.is_exact
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    columns = []
    for k in range(6):
        e = [zero] * 6
        e[k] = one
        coeffs = tuple(A2(kind, e[2 * i], e[2 * i + 1]) for i in range(3))
        values = []
        for pt in (p, q):
            total = A2.zero(kind, exact)
            for u, x in zip(coeffs, pt.coords):
                total = total + mul(u, x)
            values.append(total)
        columns.append(_realify(values))
    system = exactlin.transpose(columns)
    null = exactlin.nullspace(system)
    candidates = list(null)
    if len(null) >= 2:
        candidates.append([a + b for a, b in zip(null[0], null[1])])
    for v in candidates:
        coeffs = tuple(A2(kind, v[2 * i], v[2 * i + 1]) for i in range(3))
        try:
            return LineA(kind, coeffs)
        except ContractError:
            continue
    raise ContractError("could not find a non-degenerate line through the points")


@dataclass(frozen=True)
class FrameA:
    """Three mutually non-adjacent points."""

    points: tuple[PointA, PointA, PointA]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        a, b, c = self.points
        if adjacent(a, b) or adjacent(a, c) or adjacent(b, c):
            raise ContractError("frame points must be pairwise non-adjacent")

    @property
    def kind(self) -> AlgebraKind:
        return self.points[0].kind

    def real_frame(self) -> list[tuple]:
        """The six vectors ``a_0..a_5`` of R^6 (pairs of columns of each vertex)."""
        out = []
        for pt in self.points:
            out.extend(pt.columns())
        return out

    def combine(self, coords: Sequence[A2]) -> PointA:
        """The point ``A0 X0 + A1 X1 + A2 X2``."""
        kind = self.kind
        exact = all(c.is_exact for c in coords) and all(p.is_exact for p in self.points)
        out = [A2.zero(kind, exact)] * 3
        for pt, x in zip(self.points, coords):
            out = [o + mul(c, x) for o, c in zip(out, pt.coords)]
        return PointA(kind, tuple(out))


def standard_frame(kind: AlgebraKind, exact: bool = True) -> FrameA:
    return FrameA(tuple(basis_point(kind, i, exact) for i in range(3)))


# ------------------------------------------------------------------ sampling


def random_scalar(rng: np.random.Generator, bound: int = 10) -> Fraction:
    num = int(rng.integers(-bound, bound + 1))
    den = int(rng.integers(1, bound + 1))
    return Fraction(num, den)


def random_a2(kind: AlgebraKind, rng: np.random.Generator, bound: int = 10) -> A2:
    return A2(kind, random_scalar(rng, bound), random_scalar(rng, bound))


def random_invertible(kind: AlgebraKind, rng: np.random.Generator, bound: int = 10) -> A2:
    while True:
        a = random_a2(kind, rng, bound)
        if not is_zero_divisor(a):
            return a


def random_point(kind: AlgebraKind, rng: np.random.Generator, bound: int = 10) -> PointA:
    """Rejection-sampled point with rational coordinates."""
    while True:
        coords = tuple(random_a2(kind, rng, bound) for _ in range(3))
        if exactlin.rank(stack_matrix(coords)) == 2:
            return PointA(kind, coords)


def random_frame(kind: AlgebraKind, rng: np.random.Generator, bound: int = 10) -> FrameA:
    while True:
        pts = tuple(random_point(kind, rng, bound) for _ in range(3))
        a, b, c = pts
        if not (adjacent(a, b) or adjacent(a, c) or adjacent(b, c)):
            return FrameA(pts)
