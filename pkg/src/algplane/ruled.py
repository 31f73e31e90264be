"""Smooth algebra-lines and the ruled 3-folds they sweep in RP^5.

A curve ``z -> (F0(z), F1(z), F2(z))`` with polynomial components over one of
the algebras is analytic in ``z = t1 + u*t2``, hence a smooth line of the
algebra plane. Every point embeds as a line ``a0 ^ a1`` of RP^5, so the curve
sweeps a ruled submanifold ``S`` of dimension 3. Along a generator

    d/dt1 (a0, a1) = (a2, J a2),   d/dt2 = u * d/dt1

where ``J`` is right multiplication by ``u`` on first columns. The tangent
space of ``S`` is therefore the fixed 4-space ``span(a0, a1, a2, J a2)`` and
the foci ``a1 + lam*a0`` solve ``lam^2 = u*u``.

Derivatives are exact (formal polynomial derivative) by default; central
finite differences are available for validation and for maps that are not
polynomial curves.
"""

from __future__ import annotations

import enum
import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import exactlin
from .algebra2d import A2, AlgebraKind, is_exact, mul
from .errors import ContractError, DegenerateSample, InconsistentFoci
from .exactlin import RootSet, Subspace
from .grassmann import Line5, Plane5, focal_planes, proportional
from .proj_plane import PointA, column_vectors, random_a2, unit_action

FD_STEP = 1e-5
FOCUS_TOL = 1e-6


def _poly_eval_a2(coeffs: Sequence[A2], z: A2) -> A2:
    acc = A2(z.kind, z.x * 0, z.y * 0)
    for c in reversed(coeffs):
        acc = mul(acc, z) + c
    return acc


@dataclass(frozen=True)
class CurveA:
    """Polynomial map ``z -> (F0, F1, F2)``; coefficients lowest degree first."""

    kind: AlgebraKind
    f0: tuple[A2, ...]
    f1: tuple[A2, ...]
    f2: tuple[A2, ...]

    def __post_init__(self):
        for name in ("f0", "f1", "f2"):
            coeffs = tuple(getattr(self, name))
            object.__setattr__(self, name, coeffs)
            for c in coeffs:
                if c.kind is not self.kind:
                    raise ContractError(f"{name} has a {c.kind.value} coefficient")

    @classmethod
    def affine(cls, kind: AlgebraKind, f1: Sequence[A2], f2: Sequence[A2]) -> "CurveA":
        """The curve ``(1, F1, F2)`` in the affine chart."""
        return cls(kind, (A2.one(kind),), tuple(f1), tuple(f2))

    @property
    def degree(self) -> int:
        return max(len(self.f0), len(self.f1), len(self.f2)) - 1

    @property
    def is_exact(self) -> bool:
        return all(c.is_exact for c in self.f0 + self.f1 + self.f2)

    def values(self, z: A2) -> tuple[A2, A2, A2]:
        if z.kind is not self.kind:
            raise ContractError("parameter over a different algebra")
        zero = A2(self.kind, z.x * 0, z.y * 0)
        return tuple(
            _poly_eval_a2(f, z) if f else zero for f in (self.f0, self.f1, self.f2)
        )

    def point(self, z: A2) -> PointA:
        return PointA(self.kind, self.values(z))

    def derivative(self) -> "CurveA":
        return curve_derivative(self)

    def to_float(self) -> "CurveA":
        conv = lambda f: tuple(c.to_float() for c in f)  # noqa: E731
        return CurveA(self.kind, conv(self.f0), conv(self.f1), conv(self.f2))


def eval_curve(c: CurveA, z: A2) -> PointA:
    return c.point(z)


def _deriv_coeffs(coeffs: Sequence[A2]) -> tuple[A2, ...]:
    return tuple(c.scale(k) for k, c in enumerate(coeffs) if k > 0)


def curve_derivative(c: CurveA) -> CurveA:
    """Formal derivative in ``z``; its values need not form a valid point."""
    return CurveA(c.kind, _deriv_coeffs(c.f0), _deriv_coeffs(c.f1), _deriv_coeffs(c.f2))


@dataclass(frozen=True)
class PointMap:
    """An arbitrary map ``z -> (X0, X1, X2)``; derivatives by finite differences.

    Used for maps that are not analytic (e.g. depending on the conjugate of z).
    """

    kind: AlgebraKind
    fn: Callable[[A2], tuple[A2, A2, A2]]

    def values(self, z: A2) -> tuple[A2, A2, A2]:
        return tuple(self.fn(z))

    def point(self, z: A2) -> PointA:
        return PointA(self.kind, self.values(z))


def param(kind: AlgebraKind, t1, t2) -> A2:
    return A2(kind, t1, t2)


# ------------------------------------------------------------------ jets


@dataclass(frozen=True)
class Jet:
    """The generator ``a0 ^ a1`` with the first derivatives of both points."""

    a0: tuple
    a1: tuple
    d1a0: tuple
    d2a0: tuple
    d1a1: tuple
    d2a1: tuple

    def vectors(self) -> list[list]:
        return [list(v) for v in (self.a0, self.a1, self.d1a0, self.d2a0, self.d1a1, self.d2a1)]


def _times_unit(values: Sequence[A2]) -> tuple[A2, ...]:
    u = A2.unit(values[0].kind, exact=all(v.is_exact for v in values))
    return tuple(mul(v, u) for v in values)


def _default_method(c) -> str:
    return "analytic" if isinstance(c, CurveA) else "fd"


def first_jet(c, z: A2, method: str | None = None, h: float = FD_STEP) -> Jet:
    method = method or _default_method(c)
    if method == "analytic":
        if not isinstance(c, CurveA):
            raise ContractError("analytic derivatives need a polynomial CurveA")
        p = c.values(z)
        dp = c.derivative().values(z)
        a0, a1 = column_vectors(p)
        d1a0, d1a1 = column_vectors(dp)
        d2a0, d2a1 = column_vectors(_times_unit(dp))
        return Jet(a0, a1, d1a0, d2a0, d1a1, d2a1)
    if method != "fd":
        raise ContractError(f"unknown derivative method {method!r}")
    kind = c.kind
    x, y = float(z.x), float(z.y)
    a0, a1 = column_vectors(tuple(v.to_float() for v in c.values(A2(kind, x, y))))

    def cols(t1, t2):
        return column_vectors(tuple(v.to_float() for v in c.values(A2(kind, t1, t2))))

    p1, m1 = cols(x + h, y), cols(x - h, y)
    p2, m2 = cols(x, y + h), cols(x, y - h)

    def diff(a, b):
        return tuple((u - v) / (2 * h) for u, v in zip(a, b))

    return Jet(a0, a1, diff(p1[0], m1[0]), diff(p2[0], m2[0]), diff(p1[1], m1[1]), diff(p2[1], m2[1]))


def check_smoothness(c, z: A2, method: str | None = None, tol: float = exactlin.RANK_TOL) -> bool:
    """Whether all derivatives of ``a0, a1`` stay in a 4-space (the ω_0^4 = ω_0^5 = 0 test)."""
    jet = first_jet(c, z, method)
    vecs = jet.vectors()
    if exactlin.rank(vecs, tol) < 4:
        raise DegenerateSample(f"adapted frame is not determined at z = {z}")
    return exactlin.rank(vecs, tol) <= 4


@dataclass(frozen=True)
class SurfaceSample:
    """A generator of ``S`` with an adapted frame ``a0..a3``."""

    z: A2
    generator: Line5
    a0: tuple
    a1: tuple
    a2: tuple
    a3: tuple

    def tangent_space(self) -> Subspace:
        return exactlin.subspace_span([self.a0, self.a1, self.a2, self.a3])


def adapted_frame(c, z: A2, method: str | None = None) -> SurfaceSample:
    """``a0, a1`` from the embedding, ``a2, a3`` the first two independent derivatives."""
    jet = first_jet(c, z, method)
    chosen = [list(jet.a0), list(jet.a1)]
    for v in (jet.d1a0, jet.d2a0, jet.d1a1, jet.d2a1):
        if len(chosen) == 4:
            break
        if exactlin.rank(chosen + [list(v)]) == len(chosen) + 1:
            chosen.append(list(v))
    if len(chosen) < 4:
        raise DegenerateSample(f"derivatives do not leave the generator at z = {z}")
    return SurfaceSample(z, Line5(jet.a0, jet.a1), jet.a0, jet.a1, tuple(chosen[2]), tuple(chosen[3]))


def tangent_rank(c, z: A2, method: str | None = None) -> int:
    """Rank of ``span(a0, a1, d a0, d a1)``: 4 at a generic point of a smooth line."""
    r = exactlin.rank(first_jet(c, z, method).vectors())
    if r < 4:
        raise DegenerateSample(f"tangent rank {r} < 4 at z = {z}")
    return r


def tangent_subspace(c, z: A2, lam, method: str | None = None) -> Subspace:
    """Tangent space of ``S`` at the point ``a1 + lam*a0`` of the generator.

    At a focus the pointwise span drops to dimension 3; there the limit of the
    tangent spaces along the generator is returned. It is computed from the
    Plücker coordinates of the image of ``d(a1 + t*a0)`` in
    ``R^6 / span(a0, a1)``, which are quadratic in ``t``: the factor vanishing
    at ``lam`` is divided out before evaluating.
    """
    j = first_jet(c, z, method)
    base = [list(j.a0), list(j.a1)]
    q = exactlin.quotient_coords(base, [j.d1a0, j.d1a1, j.d2a0, j.d2a1])
    q1 = [(b, a) for a, b in zip(q[0], q[1])]
    q2 = [(b, a) for a, b in zip(q[2], q[3])]
    exact = all(is_exact(x) for x in j.a0) and is_exact(lam)
    pl = {}
    for i, k in itertools.combinations(range(4), 2):
        pl[i, k] = exactlin.poly_sub(
            exactlin.poly_mul(q1[i], q2[k]), exactlin.poly_mul(q1[k], q2[i])
        )
    mag = max((abs(x) for v in pl.values() for x in v), default=0)
    if mag == 0:
        raise DegenerateSample(f"derivatives do not leave the generator at z = {z}")
    tol = 1e-10 * float(mag)
    root = (-lam, 1)
    while all(_small([exactlin.poly_eval(v, lam)], tol) for v in pl.values()):
        pl = {key: exactlin.poly_divmod(v, root)[0] for key, v in pl.items()}
    val = {key: exactlin.poly_eval(v, lam) for key, v in pl.items()}
    zero = 0 if exact else 0.0
    rows = []
    for i in range(4):
        row = []
        for k in range(4):
            if i == k:
                row.append(zero)
            else:
                row.append(val[i, k] if i < k else -val[k, i])
        rows.append(row)
    trans = exactlin.complete_basis(base)[2:]
    lifted = [[sum(r[m] * trans[m][n] for m in range(4)) for n in range(6)] for r in rows]
    return exactlin.subspace_span(base + lifted)


def _small(values, tol: float) -> bool:
    return all(v == 0 if is_exact(v) else abs(v) <= tol for v in values)


def gauss_map_rank(c: CurveA, z: A2) -> int:
    """Rank of the Gauss map of ``S`` at the generator over ``z``.

    The tangent space ``T = span(a0, a1, w0, w1)`` with ``w0, w1`` the first
    columns of ``F'`` and ``F' u`` moves with ``z``; its differential is read
    off the second derivatives modulo ``T``. A straight line gives 0, a
    generic curve 2.
    """
    if not isinstance(c, CurveA):
        raise ContractError("the Gauss map rank needs a polynomial CurveA")
    jet = first_jet(c, z, "analytic")
    basis = [jet.a0, jet.a1, jet.d1a0, jet.d2a0]
    if exactlin.rank([list(v) for v in basis]) != 4:
        raise DegenerateSample(f"tangent space is not 4-dimensional at z = {z}")
    ddp = c.derivative().derivative().values(z)
    powers = [ddp]
    for _ in range(2):
        powers.append(_times_unit(powers[-1]))
    cols = [column_vectors(v)[0] for v in powers]
    rows = []
    for k in (0, 1):
        q0, q1 = exactlin.quotient_coords(basis, [cols[k], cols[k + 1]])
        rows.append(list(q0) + list(q1))
    return exactlin.rank(rows)


# ------------------------------------------------------------ moving frame


@dataclass(frozen=True)
class FrameDerivative:
    """Directional derivatives of a moving frame ``a0..a5`` along ``t1, t2``.

    ``omega[k][j][i]`` is the coefficient of ``a_j`` in the derivative of
    ``a_i`` along ``t_(k+1)``, i.e. the form ω_i^j evaluated on that direction.
    """

    frame: tuple[tuple, ...]
    omega: tuple[list[list], list[list]]
    completion: int


def _unit_vector(k: int, exact: bool) -> tuple:
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    return tuple(one if i == k else zero for i in range(6))


def moving_frame(c: CurveA, z: A2, completion: int | None = None) -> tuple[list[tuple], int]:
    """Frame ``(a0, J a0, a2, J a2, e_k, J e_k)`` with ``a2 = d a0 / dt1``.

    Pairs related by ``J`` make every ω block an element of the algebra.
    ``completion`` fixes the unit vector ``e_k``; by default the first one that
    gives a basis.
    """
    kind = c.kind
    jet = first_jet(c, z, "analytic")
    exact = all(is_exact(v) for v in jet.a0)
    base = [jet.a0, jet.a1, jet.d1a0, jet.d2a0]
    ks = [completion] if completion is not None else range(6)
    for k in ks:
        e = _unit_vector(k, exact)
        frame = base + [e, unit_action(kind, e)]
        if exactlin.rank([list(v) for v in frame]) == 6:
            return frame, k
    raise DegenerateSample(f"no moving frame at z = {z}")


def frame_derivative(c: CurveA, z: A2, completion: int | None = None) -> FrameDerivative:
    frame, k = moving_frame(c, z, completion)
    kind = c.kind
    dp = c.derivative()
    ddp = dp.derivative().values(z)
    p1 = dp.values(z)
    zero = tuple(v * 0 for v in frame[0])
    mat = exactlin.transpose([list(v) for v in frame])
    omegas = []
    for step in range(2):
        dval = p1 if step == 0 else _times_unit(p1)
        d2val = ddp if step == 0 else _times_unit(ddp)
        da0 = column_vectors(dval)[0]
        da2 = column_vectors(d2val)[0]
        derivs = [da0, unit_action(kind, da0), da2, unit_action(kind, da2), zero, zero]
        cols = [exactlin.solve(mat, list(d)) for d in derivs]
        omegas.append(exactlin.transpose(cols))
    return FrameDerivative(tuple(frame), (omegas[0], omegas[1]), k)


def form_relation_residual(fd: FrameDerivative, kind: AlgebraKind):
    """Largest violation of the algebra relations between the real forms ω_i^j.

    ``ω_(2a)^(2b) = ω_(2a+1)^(2b+1)`` and ``ω_(2a+1)^(2b) = s * ω_(2a)^(2b+1)``
    with ``s = u*u`` (this is the complex, double and dual form of the same
    statement), plus the smoothness equations ``ω_0^4 = ω_0^5 = 0``.
    """
    s = kind.unit_square
    worst = 0
    for m in fd.omega:
        for a in range(3):
            for b in range(3):
                worst = max(worst, abs(m[2 * b][2 * a] - m[2 * b + 1][2 * a + 1]))
                worst = max(worst, abs(m[2 * b][2 * a + 1] - s * m[2 * b + 1][2 * a]))
        worst = max(worst, abs(m[4][0]), abs(m[5][0]))
    return worst


def structure_residual(c: CurveA, z: A2, h: float = FD_STEP) -> float:
    """Mixed-partial defect ``d1 W2 - d2 W1 + [W1, W2]`` of the frame forms.

    Central differences of the exact forms. The truncation error is
    ``O(h^2 |d^3 W|)`` and ``d^3 W`` scales like ``|W|^4``, so the defect is
    returned divided by ``(1 + max|W|)^4``; compare it with ``10 h^2``.
    """
    cf = c.to_float()
    zf = z.to_float()
    completion = frame_derivative(c, z).completion

    def omega(t1, t2):
        fd = frame_derivative(cf, A2(c.kind, t1, t2), completion)
        return [np.asarray(m, dtype=float) for m in fd.omega]

    w1, w2 = omega(zf.x, zf.y)
    d1w2 = (omega(zf.x + h, zf.y)[1] - omega(zf.x - h, zf.y)[1]) / (2 * h)
    d2w1 = (omega(zf.x, zf.y + h)[0] - omega(zf.x, zf.y - h)[0]) / (2 * h)
    defect = d1w2 - d2w1 + w1 @ w2 - w2 @ w1
    scale = (1.0 + max(np.abs(w1).max(), np.abs(w2).max())) ** 4
    return float(np.abs(defect).max() / scale)


# -------------------------------------------------------------------- foci


def closed_form_foci(kind: AlgebraKind) -> RootSet:
    """Foci ``a1 + lam*a0`` of a generator of ``S``: ``lam^2 = u*u``."""
    one = Fraction(1)
    if kind is AlgebraKind.DOUBLE:
        return RootSet(((-one, 1), (one, 1)))
    if kind is AlgebraKind.DUAL:
        return RootSet(((Fraction(0), 2),))
    return RootSet((), ((Fraction(0), one, 1),))


@dataclass(frozen=True)
class GeneratorFoci:
    z: A2
    polynomial: tuple
    roots: RootSet
    closed_form: RootSet
    discriminant: object
    foci: tuple[tuple, ...]
    minors: tuple[tuple, ...] = field(repr=False, default=())

    @property
    def agree(self) -> bool:
        return self.roots.matches(self.closed_form, FOCUS_TOL)


def _minor_polys(cols) -> list[tuple]:
    (c1, l1), (c2, l2) = cols
    out = []
    for r in range(4):
        for s in range(r + 1, 4):
            out.append(
                exactlin.poly_trim(
                    (
                        c1[r] * c2[s] - c1[s] * c2[r],
                        c1[r] * l2[s] + l1[r] * c2[s] - c1[s] * l2[r] - l1[s] * c2[r],
                        l1[r] * l2[s] - l1[s] * l2[r],
                    )
                )
            )
    return out


def _float_common(minors: list[tuple]) -> tuple:
    """Approximate common factor of the minors: the roots of the largest minor
    that are (numerically) roots of every minor, as a monic polynomial."""
    norms = [max(abs(float(x)) for x in m) if m else 0.0 for m in minors]
    top = max(norms)
    if top == 0:
        return ()
    best = [float(x) / top for x in minors[norms.index(top)]]
    while best and abs(best[-1]) <= 1e-12:
        best.pop()
    if len(best) <= 1:
        return (1.0,)
    kept = []
    for r in np.roots(best[::-1]):
        scale = max(1.0, abs(r)) ** 2
        if all(
            abs(np.polyval([float(x) for x in m[::-1]], r)) <= FOCUS_TOL * n * scale
            for m, n in zip(minors, norms)
            if m
        ):
            kept.append(r)
    poly = np.real_if_close(np.poly(kept), tol=1e6) if kept else np.array([1.0])
    return tuple(float(np.real(x)) for x in poly[::-1])


def generator_foci(c, z: A2, method: str | None = None, check: bool = True) -> GeneratorFoci:
    """Foci of the generator over ``z`` from the 2x2 minors of the focal system.

    The derivatives of ``a1 + lam*a0`` along ``t1, t2`` are projected to
    ``R^6 / span(a0, a1)``; a point is a focus when the two projections are
    dependent, i.e. when every 2x2 minor of the 4x2 matrix vanishes. The common
    roots are compared with the closed form; a mismatch raises
    :class:`InconsistentFoci` unless ``check`` is false.
    """
    jet = first_jet(c, z, method)
    span = [jet.a0, jet.a1]
    if exactlin.rank([list(v) for v in span]) != 2:
        raise DegenerateSample("generator spanning vectors are dependent")
    q = exactlin.quotient_coords(span, [jet.d1a1, jet.d1a0, jet.d2a1, jet.d2a0])
    minors = _minor_polys([(q[0], q[1]), (q[2], q[3])])
    exact = all(is_exact(x) for m in minors for x in m)
    if exact:
        poly: tuple = ()
        for m in minors:
            poly = exactlin.poly_gcd(poly, m) if poly else exactlin.poly_monic(m)
    else:
        poly = _float_common(minors)
    if not poly:
        raise DegenerateSample(f"every point of the generator is a focus at z = {z}")
    if len(poly) == 1:
        raise DegenerateSample(f"generator has no foci at z = {z}")
    roots = exactlin.real_roots_with_multiplicity(poly)
    disc = None
    if len(poly) == 3:
        c0, b, a = poly
        disc = b * b - 4 * a * c0
    foci = tuple(tuple(y + r * x for x, y in zip(jet.a0, jet.a1)) for r, _ in roots.real)
    out = GeneratorFoci(z, poly, roots, closed_form_foci(c.kind), disc, foci, tuple(minors))
    if check and not out.agree:
        raise InconsistentFoci(
            f"minor solver gives {roots} but the closed form is {out.closed_form} at z = {z}"
        )
    return out


# ---------------------------------------------------------- singular locus


class SurfaceClass(enum.Enum):
    NO_REAL_SINGULARITIES = "no-real-singularities"
    JOIN = "join"
    PLANE_CURVE_FAMILY = "plane-curve-family"
    UNCLASSIFIED = "unclassified"


EXPECTED_SURFACE = {
    AlgebraKind.COMPLEX: SurfaceClass.NO_REAL_SINGULARITIES,
    AlgebraKind.DOUBLE: SurfaceClass.JOIN,
    AlgebraKind.DUAL: SurfaceClass.PLANE_CURVE_FAMILY,
}


@dataclass
class SampleReport:
    index: tuple[int, int]
    z: A2
    rank: int | None = None
    gauss_rank: int | None = None
    smooth: bool | None = None
    foci: GeneratorFoci | None = None
    memberships: dict = field(default_factory=dict)
    focal_curve_ranks: dict = field(default_factory=dict)
    cls: SurfaceClass = SurfaceClass.UNCLASSIFIED
    degenerate: str | None = None
    generator: Line5 | None = None
    focal_points: dict = field(default_factory=dict)


@dataclass
class SurfaceReport:
    kind: AlgebraKind
    cls: SurfaceClass
    samples: list[SampleReport]
    focal_curves: dict

    @property
    def degenerate_fraction(self) -> float:
        if not self.samples:
            return 0.0
        return sum(s.degenerate is not None for s in self.samples) / len(self.samples)

    @property
    def expected(self) -> SurfaceClass:
        return EXPECTED_SURFACE[self.kind]

    @property
    def ok(self) -> bool:
        return self.cls is self.expected


def parameter_grid(nx: int, ny: int, exact: bool = True, lo=-1, hi=1, shift=(Fraction(1, 7), Fraction(1, 11))):
    """Cell-centred grid on ``[lo, hi]^2`` shifted off the symmetric points."""
    out = []
    for i in range(nx):
        for j in range(ny):
            t1 = Fraction(lo) + (Fraction(hi) - Fraction(lo)) * Fraction(2 * i + 1, 2 * nx) + shift[0]
            t2 = Fraction(lo) + (Fraction(hi) - Fraction(lo)) * Fraction(2 * j + 1, 2 * ny) + shift[1]
            out.append(((i, j), (t1, t2) if exact else (float(t1), float(t2))))
    return out


def _membership(plane: Plane5, v, tol: float):
    return plane.residual(v) if all(is_exact(x) for x in v) else plane.subspace().residual(v)


def _focal_curve_rank(point, d1, d2) -> int:
    return exactlin.rank([list(point), list(d1), list(d2)])


def _classify_sample(kind: AlgebraKind, rep: SampleReport, jet: Jet, tol: float) -> SurfaceClass:
    roots = rep.foci.roots
    real = roots.real
    if not real:
        if rep.foci.discriminant is not None and rep.foci.discriminant < 0:
            return SurfaceClass.NO_REAL_SINGULARITIES
        return SurfaceClass.UNCLASSIFIED
    planes = {p.name: p for p in focal_planes(kind)} if kind is not AlgebraKind.COMPLEX else {}
    if len(real) == 2 and all(m == 1 for _, m in real) and "pi1" in planes:
        ok = True
        for name, sign in (("pi1", 1), ("pi2", -1)):
            f = tuple(b + sign * a for a, b in zip(jet.a0, jet.a1))
            d1 = [b + sign * a for a, b in zip(jet.d1a0, jet.d1a1)]
            d2 = [b + sign * a for a, b in zip(jet.d2a0, jet.d2a1)]
            res = _membership(planes[name], f, tol)
            rep.memberships[name] = res
            rep.focal_points[name] = f
            rep.focal_curve_ranks[name] = _focal_curve_rank(f, d1, d2)
            ok = ok and res <= tol and rep.focal_curve_ranks[name] == 2
        return SurfaceClass.JOIN if ok else SurfaceClass.UNCLASSIFIED
    if len(real) == 1 and real[0][1] == 2 and "pi" in planes:
        f = jet.a1
        res = _membership(planes["pi"], f, tol)
        rep.memberships["pi"] = res
        rep.focal_points["pi"] = tuple(f)
        rep.focal_curve_ranks["pi"] = _focal_curve_rank(f, jet.d1a1, jet.d2a1)
        if res <= tol and rep.focal_curve_ranks["pi"] == 2:
            return SurfaceClass.PLANE_CURVE_FAMILY
    return SurfaceClass.UNCLASSIFIED


def analyze_sample(
    c, index, z: A2, method: str | None = None, tol: float = 1e-10
) -> SampleReport:
    rep = SampleReport(index, z)
    try:
        rep.smooth = check_smoothness(c, z, method)
        rep.rank = tangent_rank(c, z, method)
        if isinstance(c, CurveA):
            rep.gauss_rank = gauss_map_rank(c, z)
            if rep.gauss_rank < 2:
                raise DegenerateSample(f"Gauss map rank {rep.gauss_rank} < 2 at z = {z}")
        jet = first_jet(c, z, method)
        rep.generator = Line5(jet.a0, jet.a1)
        rep.foci = generator_foci(c, z, method)
        rep.cls = _classify_sample(c.kind, rep, jet, tol)
    except DegenerateSample as exc:
        rep.degenerate = str(exc)
    return rep


def _plane_coords(plane: Plane5, v) -> list:
    """Coordinates of ``v`` (a point of ``plane``) in the plane's spanning basis."""
    basis = [list(b) for b in plane.vectors]
    if all(is_exact(x) for x in v):
        rows, _ = exactlin.rref(exactlin.transpose(basis + [list(v)]))
        return [rows[i][3] for i in range(3)]
    a = np.asarray(basis, dtype=float).T
    sol, *_ = np.linalg.lstsq(a, np.asarray(v, dtype=float), rcond=None)
    return [float(x) for x in sol]


def singular_locus(c, grid, method: str | None = None, tol: float = 1e-10) -> SurfaceReport:
    """Analyse the generators over ``grid`` (pairs ``(index, (t1, t2))``)."""
    samples = [analyze_sample(c, idx, param(c.kind, *t), method, tol) for idx, t in grid]
    good = [s for s in samples if s.degenerate is None]
    classes = {s.cls for s in good}
    cls = classes.pop() if len(classes) == 1 else SurfaceClass.UNCLASSIFIED
    curves: dict = {}
    if cls is SurfaceClass.JOIN:
        planes = {p.name: p for p in focal_planes(c.kind)}
        for name, key, sign in (("gamma1", "pi1", 1), ("gamma2", "pi2", -1)):
            curves[name] = [
                {
                    "index": s.index,
                    "s": s.z.x + sign * s.z.y,
                    "point": s.focal_points[key],
                    "plane_coords": _plane_coords(planes[key], s.focal_points[key]),
                }
                for s in good
            ]
    elif cls is SurfaceClass.PLANE_CURVE_FAMILY:
        plane = focal_planes(c.kind)[0]
        curves["gamma"] = [
            {
                "index": s.index,
                "s": s.z.x,
                "point": s.focal_points["pi"],
                "plane_coords": _plane_coords(plane, s.focal_points["pi"]),
            }
            for s in good
        ]
    return SurfaceReport(c.kind, cls, samples, curves)


# -------------------------------------------------------------------- join


@dataclass
class JoinResult:
    lines: list[Line5 | None]
    skipped: list[int]
    cone: bool


def join_reconstruct(gamma1: Sequence[Sequence], gamma2: Sequence[Sequence], tol: float = 1e-8) -> JoinResult:
    """Lines joining matched points of two sampled curves.

    Coincident matched points are skipped with a warning; if one curve is a
    single point the result is a cone, accepted with a warning.
    """
    if len(gamma1) != len(gamma2):
        raise ContractError("curves must be sampled at matched parameters")
    lines: list[Line5 | None] = []
    skipped = []
    for i, (p, q) in enumerate(zip(gamma1, gamma2)):
        if proportional(p, q, tol):
            warnings.warn(f"matched points {i} coincide; generator skipped", stacklevel=2)
            lines.append(None)
            skipped.append(i)
            continue
        lines.append(Line5(p, q))
    cone = False
    for g in (gamma1, gamma2):
        if len(g) > 1 and all(proportional(g[0], v, tol) for v in g[1:]):
            cone = True
    if cone:
        warnings.warn("one focal curve is a single point: the join degenerates to a cone", stacklevel=2)
    return JoinResult(lines, skipped, cone)


def line_plane_meet(line: Line5, plane: Plane5):
    """The intersection point of a line and a plane of RP^5, or None."""
    rows = [list(line.p), list(line.q)] + [[-x for x in v] for v in plane.vectors]
    null = exactlin.nullspace(exactlin.transpose(rows))
    if len(null) != 1:
        return None
    a, b = null[0][0], null[0][1]
    if a == 0 and b == 0:
        return None
    return tuple(a * x + b * y for x, y in zip(line.p, line.q))


# --------------------------------------------------------------- sampling


def random_curve(kind: AlgebraKind, rng: np.random.Generator, degree: int, bound: int = 10) -> CurveA:
    """Affine curve ``(1, F1, F2)`` with rational coefficients and exact degree."""
    def coeffs():
        out = [random_a2(kind, rng, bound) for _ in range(degree + 1)]
        while out[-1].norm() == 0:
            out[-1] = random_a2(kind, rng, bound)
        return tuple(out)

    return CurveA.affine(kind, coeffs(), coeffs())


def straight_line_curve(kind: AlgebraKind, alpha: A2, beta: A2, gamma: A2, delta: A2) -> CurveA:
    """The straight line ``(1, alpha z + beta, gamma z + delta)``."""
    return CurveA.affine(kind, (beta, alpha), (delta, gamma))
