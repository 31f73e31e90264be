"""Complex, double (split-complex) and dual numbers.

Every element is stored as ``x + u*y`` with ``u*u`` equal to -1, +1 or 0
depending on the :class:`AlgebraKind`. Scalars are either
:class:`fractions.Fraction` (exact mode) or ``float``; the arithmetic below is
written once and works for both.

The 2x2 representation used throughout is::

    x + u*y  ->  [[x, s*y],
                  [y,   x]]        s = u*u

which reproduces the usual matrices for the three algebras.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import ContractError, DegenerateInput, DivisorError, RepresentationError

Scalar = Union[Fraction, float, int]

FLOAT_ZD_TOL = 1e-12
FLOAT_MAT_TOL = 1e-10


class AlgebraKind(enum.Enum):
    COMPLEX = "complex"
    DOUBLE = "double"
    DUAL = "dual"

    @property
    def unit_square(self) -> int:
        """Value of ``u*u``."""
        return _UNIT_SQUARE[self]

    @property
    def order(self) -> int:
        return _ORDER[self]

    def __lt__(self, other: "AlgebraKind") -> bool:
        if not isinstance(other, AlgebraKind):
            return NotImplemented
        return self.order < other.order

    @classmethod
    def parse(cls, text: str) -> "AlgebraKind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ContractError(f"unknown algebra kind {text!r}") from None


_UNIT_SQUARE = {AlgebraKind.COMPLEX: -1, AlgebraKind.DOUBLE: 1, AlgebraKind.DUAL: 0}
_ORDER = {AlgebraKind.COMPLEX: 0, AlgebraKind.DOUBLE: 1, AlgebraKind.DUAL: 2}
KINDS = (AlgebraKind.COMPLEX, AlgebraKind.DOUBLE, AlgebraKind.DUAL)


def is_exact(value) -> bool:
    return isinstance(value, Rational) and not isinstance(value, bool)


def to_fraction(value) -> Fraction:
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True)
class A2:
    """An element ``x + u*y`` of a two-dimensional algebra."""

    kind: AlgebraKind
    x: Scalar
    y: Scalar

    @classmethod
    def exact(cls, kind: AlgebraKind, x, y=0) -> "A2":
        return cls(kind, to_fraction(x), to_fraction(y))

    @classmethod
    def one(cls, kind: AlgebraKind, exact: bool = True) -> "A2":
        return cls(kind, Fraction(1), Fraction(0)) if exact else cls(kind, 1.0, 0.0)

    @classmethod
    def zero(cls, kind: AlgebraKind, exact: bool = True) -> "A2":
        return cls(kind, Fraction(0), Fraction(0)) if exact else cls(kind, 0.0, 0.0)

    @classmethod
    def unit(cls, kind: AlgebraKind, exact: bool = True) -> "A2":
        """The imaginary unit ``u`` itself."""
        return cls(kind, Fraction(0), Fraction(1)) if exact else cls(kind, 0.0, 1.0)

    @property
    def is_exact(self) -> bool:
        return is_exact(self.x) and is_exact(self.y)

    def to_float(self) -> "A2":
        return A2(self.kind, float(self.x), float(self.y))

    def _check(self, other: "A2") -> None:
        if not isinstance(other, A2):
            raise ContractError(f"expected A2, got {type(other).__name__}")
        if other.kind is not self.kind:
            raise ContractError(f"cannot mix {self.kind.value} and {other.kind.value} numbers")

    def __add__(self, other: "A2") -> "A2":
        self._check(other)
        return A2(self.kind, self.x + other.x, self.y + other.y)

    def __sub__(self, other: "A2") -> "A2":
        self._check(other)
        return A2(self.kind, self.x - other.x, self.y - other.y)

    def __neg__(self) -> "A2":
        return A2(self.kind, -self.x, -self.y)

    def __mul__(self, other):
        if isinstance(other, A2):
            return mul(self, other)
        if isinstance(other, (int, float, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, r: Scalar) -> "A2":
        return A2(self.kind, r * self.x, r * self.y)

    def conjugate(self) -> "A2":
        return A2(self.kind, self.x, -self.y)

    def norm(self) -> Scalar:
        """``x^2 - s*y^2``; equals the determinant of the matrix representation."""
        return self.x * self.x - self.kind.unit_square * self.y * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __str__(self) -> str:
        sym = {AlgebraKind.COMPLEX: "i", AlgebraKind.DOUBLE: "e", AlgebraKind.DUAL: "eps"}[self.kind]
        return f"{self.x} + {self.y}{sym}"


def mul(a: A2, b: A2) -> A2:
    a._check(b)
    s = a.kind.unit_square
    return A2(a.kind, a.x * b.x + s * a.y * b.y, a.x * b.y + a.y * b.x)


def is_zero_divisor(a: A2, tol: float | None = None) -> bool:
    """True when ``a`` has no inverse. Zero itself counts as a zero divisor.

    In float mode the norm is compared against ``tol * (x^2 + y^2)``.
    """
    n = a.norm()
    if a.is_exact and tol is None:
        return n == 0
    tol = FLOAT_ZD_TOL if tol is None else tol
    scale = a.x * a.x + a.y * a.y
    return scale == 0 or abs(n) <= tol * scale


def inverse(a: A2) -> A2:
    if is_zero_divisor(a):
        raise DivisorError(f"{a} is a zero divisor of the {a.kind.value} numbers")
    n = a.norm()
    return A2(a.kind, a.x / n, -a.y / n)


def divide(a: A2, b: A2) -> A2:
    return mul(a, inverse(b))


def power(a: A2, n: int) -> A2:
    if n < 0:
        raise ContractError("negative powers are not supported")
    out = A2(a.kind, a.x * 0 + 1, a.y * 0)
    for _ in range(n):
        out = mul(out, a)
    return out


@dataclass(frozen=True)
class Mat2:
    """A real 2x2 matrix ``[[a00, a01], [a10, a11]]``.

    In the notation of the full matrix algebra the entries are
    ``a00 = x_0^0, a01 = x_1^0, a10 = x_0^1, a11 = x_1^1``.
    """

    a00: Scalar
    a01: Scalar
    a10: Scalar
    a11: Scalar

    @classmethod
    def from_rows(cls, rows) -> "Mat2":
        (a00, a01), (a10, a11) = rows
        return cls(a00, a01, a10, a11)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    def rows(self) -> tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]:
        return ((self.a00, self.a01), (self.a10, self.a11))

    def entries(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a00, self.a01, self.a10, self.a11)

    @property
    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self.entries())

    def det(self) -> Scalar:
        return self.a00 * self.a11 - self.a01 * self.a10

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a00 * other.a00 + self.a01 * other.a10,
            self.a00 * other.a01 + self.a01 * other.a11,
            self.a10 * other.a00 + self.a11 * other.a10,
            self.a10 * other.a01 + self.a11 * other.a11,
        )

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries())


def to_matrix(a: A2) -> Mat2:
    return Mat2(a.x, a.kind.unit_square * a.y, a.y, a.x)


def from_matrix(m: Mat2, kind: AlgebraKind) -> A2:
    if m.a11 != m.a00 or m.a01 != kind.unit_square * m.a10:
        raise RepresentationError(f"{m.rows()} does not represent a {kind.value} number")
    return A2(kind, m.a00, m.a10)


def mat_is_zero_divisor(m: Mat2, tol: float = FLOAT_MAT_TOL) -> bool:
    d = m.det()
    if m.is_exact:
        return d == 0
    norm2 = sum(v * v for v in m.entries())
    return abs(d) <= tol * norm2


class _Infinity:
    """Point at infinity of the real projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def _ratio(p: Scalar, q: Scalar):
    return INFINITY if q == 0 else p / q


@dataclass(frozen=True)
class ConeRuling:
    """Parameters of the two plane generators of the cone ``det = 0`` through ``m``.

    ``lam`` is the common ratio of the columns' entries (``a00/a10 = a01/a11``)
    and ``mu`` the common ratio of the rows' entries (``a00/a01 = a10/a11``).
    """

    lam: object
    mu: object

    def reconstruct(self, entry: tuple[int, int], value: Scalar) -> Mat2:
        """Rebuild the rank-one matrix whose ``entry`` equals ``value``."""
        col = (Fraction(1), Fraction(0)) if self.lam is INFINITY else (self.lam, Fraction(1))
        row = (Fraction(1), Fraction(0)) if self.mu is INFINITY else (self.mu, Fraction(1))
        base = [[col[i] * row[j] for j in range(2)] for i in range(2)]
        i, j = entry
        if base[i][j] == 0:
            raise ContractError(f"entry {entry} vanishes on this generator")
        k = value / base[i][j]
        return Mat2(*(k * base[r][c] for r in range(2) for c in range(2)))


def cone_ruling(m: Mat2) -> ConeRuling:
    if m.is_zero():
        raise DegenerateInput("the zero matrix lies on every generator")
    if not mat_is_zero_divisor(m):
        raise ContractError(f"{m.rows()} is not a zero divisor (det = {m.det()})")
    # rank one: m = c r^T; lam = c0:c1, mu = r0:r1
    col = (m.a00, m.a10) if (m.a00 != 0 or m.a10 != 0) else (m.a01, m.a11)
    row = (m.a00, m.a01) if (m.a00 != 0 or m.a01 != 0) else (m.a10, m.a11)
    lam = _ratio(col[0], col[1])
    mu = _ratio(row[0], row[1])
    # both defining fractions must agree, as cross products
    if m.is_exact:
        ok = m.a00 * m.a11 == m.a01 * m.a10
    else:
        ok = mat_is_zero_divisor(m)
    if not ok:
        raise ContractError("inconsistent cone ratios")
    return ConeRuling(lam, mu)


def cone_quadratic_form() -> list[list[Fraction]]:
    """Symmetric matrix of ``x_0^0 x_1^1 - x_0^1 x_1^0`` in the order (a00, a01, a10, a11)."""
    h = Fraction(1, 2)
    z = Fraction(0)
    return [
        [z, z, z, h],
        [z, z, -h, z],
        [z, -h, z, z],
        [h, z, z, z],
    ]
