"""Lines of RP^5 coming from points of the algebra planes, and their focal theory.

A point of the plane maps to the line ``x0 ^ x1`` spanned by the two real
columns of its 6x2 coordinate matrix. The image is a 4-parameter family of
lines (a line congruence). On each line the foci ``x1 + lam*x0`` are the
roots of a quartic that depends only on the algebra:

    double -> (1 - lam^2)^2   two real double foci, hyperbolic
    dual   -> lam^4           one real quadruple focus, parabolic
    complex-> (1 + lam^2)^2   complex-conjugate foci, elliptic

:func:`congruence_focal_polynomial` re-derives that quartic at any point from
the derivatives of the embedding, independently of the table above.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import exactlin
from .algebra2d import AlgebraKind, is_exact
from .errors import ContractError
from .exactlin import RootSet, Subspace
from .proj_plane import PointA, unit_action

MEMBERSHIP_TOL = 1e-10
PAIRS = tuple(itertools.combinations(range(6), 2))


def wedge(p: Sequence, q: Sequence) -> tuple:
    """The 15 Plücker coordinates ``p^ij = p_i q_j - p_j q_i`` for ``i < j``."""
    return tuple(p[i] * q[j] - p[j] * q[i] for i, j in PAIRS)


def plucker_relations(pl: Sequence) -> list:
    """Values of all Grassmann quadratic relations (one per 4-subset of indices)."""
    idx = {pair: k for k, pair in enumerate(PAIRS)}
    out = []
    for i, j, k, l in itertools.combinations(range(6), 4):
        out.append(
            pl[idx[i, j]] * pl[idx[k, l]]
            - pl[idx[i, k]] * pl[idx[j, l]]
            + pl[idx[i, l]] * pl[idx[j, k]]
        )
    return out


def proportional(u: Sequence, v: Sequence, tol: float = 1e-8) -> bool:
    """Whether two nonzero vectors agree up to a nonzero scale."""
    if all(is_exact(a) for a in u) and all(is_exact(b) for b in v):
        return exactlin.rank([list(u), list(v)]) == 1
    return exactlin.rank([list(u), list(v)], tol) == 1


@dataclass(frozen=True)
class Line5:
    """A line of RP^5 given by two spanning vectors."""

    p: tuple
    q: tuple
    plucker: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "q", tuple(self.q))
        if len(self.p) != 6 or len(self.q) != 6:
            raise ContractError("RP^5 vectors have six coordinates")
        if exactlin.rank([list(self.p), list(self.q)]) != 2:
            raise ContractError("spanning vectors are dependent")
        object.__setattr__(self, "plucker", wedge(self.p, self.q))

    def span(self) -> Subspace:
        return exactlin.subspace_span([self.p, self.q])

    def same_as(self, other: "Line5", tol: float = 1e-8) -> bool:
        return proportional(self.plucker, other.plucker, tol)

    def point(self, lam) -> tuple:
        """``q + lam * p``."""
        return tuple(b + lam * a for a, b in zip(self.p, self.q))


def embed(p: PointA) -> Line5:
    x0, x1 = p.columns()
    if exactlin.rank([list(x0), list(x1)]) != 2:
        raise AssertionError("valid points always embed to a line")
    return Line5(x0, x1)


def lines_intersect(l1: Line5, l2: Line5, tol: float = exactlin.RANK_TOL) -> bool:
    return exactlin.rank([list(l1.p), list(l1.q), list(l2.p), list(l2.q)], tol) < 4


@dataclass(frozen=True)
class Plane5:
    """A projective plane of RP^5 (a 3-dimensional linear subspace)."""

    vectors: tuple[tuple, tuple, tuple]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vectors", tuple(tuple(v) for v in self.vectors))
        if exactlin.rank([list(v) for v in self.vectors]) != 3:
            raise ContractError("plane spanning vectors are dependent")

    def subspace(self) -> Subspace:
        return exactlin.subspace_span(self.vectors)

    def contains(self, v: Sequence, tol: float = MEMBERSHIP_TOL) -> bool:
        return exactlin.subspace_contains(self.subspace(), v, tol)

    def residual(self, v: Sequence):
        """Exact 0/1 indicator for rational data, else relative distance."""
        s = self.subspace()
        if s.exact and all(is_exact(x) for x in v):
            return Fraction(0) if s.contains(v) else Fraction(1)
        return s.residual(v)


@dataclass(frozen=True)
class ComplexPlane5:
    """A complex plane of CP^5, each spanning vector stored as (real, imag) parts."""

    vectors: tuple[tuple[tuple, tuple], ...]
    name: str = ""

    def realified(self) -> list[list]:
        """Spanning set of the underlying real 6-dim subspace of R^12."""
        rows = []
        for re, im in self.vectors:
            rows.append(list(re) + list(im))
            rows.append([-x for x in im] + list(re))
        return rows

    def contains(self, re: Sequence, im: Sequence, tol: float = MEMBERSHIP_TOL) -> bool:
        s = exactlin.subspace_span(self.realified())
        return exactlin.subspace_contains(s, list(re) + list(im), tol)

    def conjugate(self, name: str = "") -> "ComplexPlane5":
        return ComplexPlane5(
            tuple((re, tuple(-x for x in im)) for re, im in self.vectors), name or self.name
        )


class CongruenceClass(enum.Enum):
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"


EXPECTED_CLASS = {
    AlgebraKind.COMPLEX: CongruenceClass.ELLIPTIC,
    AlgebraKind.DOUBLE: CongruenceClass.HYPERBOLIC,
    AlgebraKind.DUAL: CongruenceClass.PARABOLIC,
}


def focal_polynomial(kind: AlgebraKind) -> tuple[Fraction, ...]:
    """Consistency determinant of the focal system, as coefficients in ``lam``.

    The 2x2 block ``[[lam, 1], [s, lam]]`` (``s = u*u``) appears twice, so the
    polynomial is ``(lam^2 - s)^2``.
    """
    s = Fraction(kind.unit_square)
    block = (-s, Fraction(0), Fraction(1))
    return exactlin.poly_mul(block, block)


def _standard_basis(exact: bool = True) -> list[tuple]:
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    return [tuple(one if i == k else zero for i in range(6)) for k in range(6)]


def congruence_focal_polynomial(p: PointA) -> tuple:
    """Focal quartic of the congruence line through ``p``, derived from derivatives.

    The point is moved along four real directions transverse to its fibre;
    for each one the derivative of ``x1 + lam*x0`` is taken modulo the line.
    The 4x4 determinant of these quotient vectors, interpolated in ``lam``,
    is returned monic (it is defined only up to a constant factor).
    """
    kind = p.kind
    x0, x1 = p.columns()
    exact = p.is_exact
    # four real directions transverse to the fibre span{x0, x1} of right multiples
    dirs = []
    for v in exactlin.complete_basis([x0, x1])[2:]:
        dirs.append((tuple(v), unit_action(kind, v)))
    dx0 = [d[0] for d in dirs]
    dx1 = [d[1] for d in dirs]
    q0 = exactlin.quotient_coords([x0, x1], dx0)
    q1 = exactlin.quotient_coords([x0, x1], dx1)
    samples = []
    for lam in range(5):
        lam = Fraction(lam) if exact else float(lam)
        cols = [[a + lam * b for a, b in zip(c1, c0)] for c0, c1 in zip(q0, q1)]
        samples.append((lam, exactlin.det(exactlin.transpose(cols))))
    return exactlin.poly_monic(_interpolate(samples)) if exact else _monic_float(_interpolate(samples))


def _interpolate(samples) -> tuple:
    """Lagrange interpolation through ``(x, y)`` samples."""
    out: tuple = ()
    for i, (xi, yi) in enumerate(samples):
        basis: tuple = (1,)
        denom = 1
        for j, (xj, _) in enumerate(samples):
            if j != i:
                basis = exactlin.poly_mul(basis, (-xj, 1))
                denom *= xi - xj
        out = exactlin.poly_add(out, exactlin.poly_scale(basis, yi / denom))
    return out


def _monic_float(p: tuple) -> tuple:
    p = list(p)
    scale = max(abs(c) for c in p)
    while p and abs(p[-1]) <= 1e-12 * scale:
        p.pop()
    return tuple(c / p[-1] for c in p)


def focal_planes(kind: AlgebraKind, frame: Sequence[Sequence] | None = None) -> list[Plane5]:
    """Real focal planes of the congruence, built on the frame ``a_0..a_5``."""
    a = [tuple(v) for v in (frame if frame is not None else _standard_basis())]
    if len(a) != 6 or exactlin.rank([list(v) for v in a]) != 6:
        raise ContractError("frame vectors must be six independent vectors")

    def comb(i, j, sign):
        return tuple(x + sign * y for x, y in zip(a[i], a[j]))

    if kind is AlgebraKind.DOUBLE:
        return [
            Plane5((comb(0, 1, 1), comb(2, 3, 1), comb(4, 5, 1)), "pi1"),
            Plane5((comb(0, 1, -1), comb(2, 3, -1), comb(4, 5, -1)), "pi2"),
        ]
    if kind is AlgebraKind.DUAL:
        return [Plane5((a[1], a[3], a[5]), "pi")]
    return []


def complex_focal_planes(
    kind: AlgebraKind, frame: Sequence[Sequence] | None = None
) -> list[ComplexPlane5]:
    """The conjugate pair of complex focal planes of the elliptic congruence.

    ``pi1`` is spanned by ``a_1 + i a_0, a_3 + i a_2, a_5 + i a_4``; it carries
    the focus ``x1 + i x0``. Empty for the other algebras.
    """
    if kind is not AlgebraKind.COMPLEX:
        return []
    a = [tuple(v) for v in (frame if frame is not None else _standard_basis())]
    pi1 = ComplexPlane5(tuple((a[2 * k + 1], a[2 * k]) for k in range(3)), "pi1")
    return [pi1, pi1.conjugate("pi2")]


def closed_form_congruence_roots(kind: AlgebraKind) -> RootSet:
    return exactlin.real_roots_with_multiplicity(focal_polynomial(kind))


@dataclass(frozen=True)
class CongruenceAnalysis:
    kind: AlgebraKind
    cls: CongruenceClass
    roots: RootSet
    planes: tuple[Plane5, ...]
    complex_planes: tuple[ComplexPlane5, ...]

    @property
    def real_foci(self) -> int:
        return self.roots.real_count


def classify_roots(roots: RootSet) -> CongruenceClass:
    n = roots.real_count
    if n >= 2:
        return CongruenceClass.HYPERBOLIC
    if n == 1:
        return CongruenceClass.PARABOLIC
    return CongruenceClass.ELLIPTIC


def classify_congruence(kind: AlgebraKind, frame=None) -> CongruenceAnalysis:
    roots = exactlin.real_roots_with_multiplicity(focal_polynomial(kind))
    return CongruenceAnalysis(
        kind,
        classify_roots(roots),
        roots,
        tuple(focal_planes(kind, frame)),
        tuple(complex_focal_planes(kind, frame)),
    )


@dataclass
class MembershipFailure:
    point: PointA
    focus: tuple
    plane: str
    residual: object


@dataclass
class MembershipReport:
    kind: AlgebraKind
    samples: int
    cls: CongruenceClass
    failures: list[MembershipFailure]
    checks: int = 0

    @property
    def passed(self) -> int:
        return self.samples - len({id(f.point) for f in self.failures})

    @property
    def ok(self) -> bool:
        return not self.failures


def line_foci(kind: AlgebraKind, line: Line5) -> list[tuple[str, tuple, tuple]]:
    """The foci of ``x0 ^ x1`` with the plane they belong to.

    Returns ``(plane name, real part, imaginary part)``; the imaginary part is
    all-zero except for the complex algebra.
    """
    x0, x1 = line.p, line.q
    zero = tuple(v * 0 for v in x0)
    if kind is AlgebraKind.DOUBLE:
        return [
            ("pi1", tuple(b + a for a, b in zip(x0, x1)), zero),
            ("pi2", tuple(b - a for a, b in zip(x0, x1)), zero),
        ]
    if kind is AlgebraKind.DUAL:
        return [("pi", tuple(x1), zero)]
    return [("pi1", tuple(x1), tuple(x0)), ("pi2", tuple(x1), tuple(-a for a in x0))]


def verify_congruence_membership(
    kind: AlgebraKind,
    points: Sequence[PointA],
    frame=None,
    tol: float = MEMBERSHIP_TOL,
) -> MembershipReport:
    """Check that the foci of every embedded line lie on the fixed focal planes.

    ``frame`` (six vectors) must be the real frame the points are expressed in;
    the default is the standard basis.
    """
    analysis = classify_congruence(kind, frame)
    real_planes = {pl.name: pl for pl in analysis.planes}
    cplx_planes = {pl.name: pl for pl in analysis.complex_planes}
    failures = []
    checks = 0
    for pt in points:
        if pt.kind is not kind:
            raise ContractError("sample point over a different algebra")
        line = embed(pt)
        for name, re, im in line_foci(kind, line):
            checks += 1
            if kind is AlgebraKind.COMPLEX:
                plane = cplx_planes[name]
                if not plane.contains(re, im, tol):
                    failures.append(MembershipFailure(pt, re + im, name, 1))
            else:
                plane = real_planes[name]
                if not plane.contains(re, tol):
                    failures.append(MembershipFailure(pt, re, name, plane.residual(re)))
    return MembershipReport(kind, len(points), analysis.cls, failures, checks)
