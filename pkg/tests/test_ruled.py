from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algplane import exactlin
from algplane.algebra2d import A2, KINDS, AlgebraKind, mul
from algplane.errors import ContractError, DegenerateSample, InconsistentFoci
from algplane.grassmann import embed, focal_planes
from algplane.ruled import (
    FD_STEP,
    CurveA,
    PointMap,
    SurfaceClass,
    check_smoothness,
    curve_derivative,
    eval_curve,
    form_relation_residual,
    frame_derivative,
    gauss_map_rank,
    generator_foci,
    join_reconstruct,
    line_plane_meet,
    param,
    parameter_grid,
    random_curve,
    singular_locus,
    straight_line_curve,
    structure_residual,
    tangent_rank,
    tangent_subspace,
)

C, D, E = AlgebraKind.COMPLEX, AlgebraKind.DOUBLE, AlgebraKind.DUAL
seeds = st.integers(0, 2**32 - 1)


def el(kind, x, y=0):
    return A2(kind, F(x), F(y))


def monomials(kind, f1_degree, f2_degree):
    def mono(d):
        return tuple(A2.zero(kind) for _ in range(d)) + (A2.one(kind),)

    return CurveA.affine(kind, mono(f1_degree), mono(f2_degree))


Z = {k: param(k, F(1, 3), F(2, 7)) for k in KINDS}


def test_eval_examples():
    c = CurveA.affine(C, (el(C, 2, 1),), (el(C, -1, 3),))
    assert eval_curve(c, el(C, 5, 5)).coords == (A2.one(C), el(C, 2, 1), el(C, -1, 3))
    assert monomials(E, 1, 2).values(el(E, 1, 1)) == (A2.one(E), el(E, 1, 1), el(E, 1, 2))
    line = CurveA.affine(D, (A2.zero(D), A2.one(D)), (A2.zero(D),))
    assert line.values(el(D, 0, 1)) == (A2.one(D), el(D, 0, 1), A2.zero(D))


def test_derivative_examples():
    d = curve_derivative(monomials(C, 1, 2))
    z = el(C, 3, -2)
    assert d.values(z)[2] == z.scale(2)
    assert d.values(z)[0] == A2.zero(C)


@settings(max_examples=30)
@given(st.sampled_from(KINDS), seeds, st.integers(1, 4))
def test_derivative_matches_finite_differences(kind, seed, degree):
    # the five-point stencil is exact on polynomials of degree <= 4
    rng = np.random.default_rng(seed)
    c = random_curve(kind, rng, degree, bound=3).to_float()
    z = A2(kind, float(rng.uniform(-1, 1)), float(rng.uniform(-1, 1)))
    h = 1e-2

    def at(k):
        return c.values(A2(kind, z.x + k * h, z.y))

    stencil = [
        (a - b.scale(8.0) + c_.scale(8.0) - d).scale(1 / (12 * h))
        for a, b, c_, d in zip(at(-2), at(-1), at(1), at(2))
    ]
    for e, f in zip(curve_derivative(c).values(z), stencil):
        assert abs(e.x - f.x) <= 1e-8 * (1 + abs(e.x))
        assert abs(e.y - f.y) <= 1e-8 * (1 + abs(e.y))


def test_derivative_along_unit_direction():
    # d/dt2 F(t1 + u t2) = F'(z) u, which is what makes the map analytic
    for kind in KINDS:
        c = random_curve(kind, np.random.default_rng(1), 3).to_float()
        z = A2(kind, 0.2, -0.4)
        h = 1e-5
        fd = [(p - m).scale(1 / (2 * h)) for p, m in zip(c.values(A2(kind, 0.2, -0.4 + h)), c.values(A2(kind, 0.2, -0.4 - h)))]
        an = [mul(v, A2.unit(kind, False)) for v in curve_derivative(c).values(z)]
        for a, b in zip(fd, an):
            assert abs(a.x - b.x) <= 1e-6 * (1 + abs(b.x)) and abs(a.y - b.y) <= 1e-6 * (1 + abs(b.y))


@pytest.mark.parametrize("kind", KINDS)
def test_analytic_curves_are_smooth(kind):
    rngs = [np.random.default_rng(s) for s in np.random.SeedSequence(kind.order).spawn(8)]
    checked = 0
    for i, rng in enumerate(rngs):
        c = random_curve(kind, rng, 1 + i % 4)
        for _ in range(13):
            z = param(kind, F(int(rng.integers(-9, 10)), 7), F(int(rng.integers(-9, 10)), 5))
            try:
                assert check_smoothness(c, z)
                checked += 1
            except DegenerateSample:
                pass
    assert checked >= 95


def test_non_analytic_map_is_not_smooth():
    c0 = el(C, 1, 2).scale(F(1, 4))
    pm = PointMap(C, lambda z: (A2.one(C, False), z + mul(c0, z.conjugate()), mul(z, z)))
    for t in ((0.3, 0.2), (-0.5, 0.7), (0.1, -0.9)):
        assert check_smoothness(pm, A2(C, *t)) is False
    with pytest.raises(DegenerateSample):
        generator_foci(pm, A2(C, 0.3, 0.2))


def test_straight_lines_smooth_but_flat():
    for kind in KINDS:
        c = straight_line_curve(kind, el(kind, 2, 1), el(kind, 0, 3), el(kind, -1, 1), el(kind, 5, 0))
        assert check_smoothness(c, Z[kind])
        assert tangent_rank(c, Z[kind]) == 4
        assert gauss_map_rank(c, Z[kind]) == 0


@pytest.mark.parametrize("kind", KINDS)
def test_tangent_and_gauss_ranks(kind):
    c = monomials(kind, 1, 2)
    assert tangent_rank(c, Z[kind]) == 4
    assert tangent_rank(c.to_float(), Z[kind].to_float(), "fd") == 4
    assert gauss_map_rank(c, Z[kind]) == 2


@pytest.mark.parametrize("kind", KINDS)
def test_tangent_space_fixed_along_generator(kind):
    c = random_curve(kind, np.random.default_rng(9), 3)
    z = Z[kind]
    ref = tangent_subspace(c, z, F(7, 3))
    for lam in (F(0), F(1), F(-1), F(-5, 2)):
        s = tangent_subspace(c, z, lam)
        assert s.dim == 4 and s == ref
    # and it moves with the generator
    assert tangent_subspace(c, param(kind, F(-1, 2), F(1, 5)), F(0)) != ref


def test_tangent_space_moves_along_non_analytic_generator():
    c0 = el(C, 1, 2).scale(F(1, 4))
    pm = PointMap(C, lambda z: (A2.one(C, False), z + mul(c0, z.conjugate()), mul(z, z)))
    z = A2(C, 0.3, 0.2)
    assert exactlin.subspace_distance(tangent_subspace(pm, z, 0.0), tangent_subspace(pm, z, 1.0)) > 1e-3


@pytest.mark.parametrize(
    "kind, f2, real, disc_sign",
    [(D, 2, {F(-1): 1, F(1): 1}, 1), (E, 3, {F(0): 2}, 0), (C, 2, {}, -1)],
)
def test_generator_foci_examples(kind, f2, real, disc_sign):
    g = generator_foci(monomials(kind, 1, f2), Z[kind])
    assert g.agree
    assert g.roots.real_dict() == real
    assert (g.discriminant > 0) - (g.discriminant < 0) == disc_sign
    fd = generator_foci(monomials(kind, 1, f2).to_float(), Z[kind].to_float(), "fd")
    assert fd.roots.matches(g.roots, 1e-6)


def test_inconsistent_foci_surface(monkeypatch):
    # pretend the closed form for double numbers were the dual one
    import algplane.ruled as ruled

    dual = ruled.closed_form_foci(E)
    monkeypatch.setattr(ruled, "closed_form_foci", lambda kind: dual)
    with pytest.raises(InconsistentFoci):
        generator_foci(monomials(D, 1, 2), Z[D])


def test_foci_in_focal_planes():
    c = monomials(D, 1, 2)
    g = generator_foci(c, Z[D])
    pi1, pi2 = focal_planes(D)
    assert {pi1.contains(f) for f in g.foci} == {True, False}
    assert any(pi2.contains(f) for f in g.foci)


@pytest.mark.parametrize("kind", KINDS)
def test_frame_form_relations_exact(kind):
    c = random_curve(kind, np.random.default_rng(4), 3)
    fd = frame_derivative(c, Z[kind])
    assert form_relation_residual(fd, kind) == 0


@pytest.mark.parametrize("kind", KINDS)
def test_structure_equations(kind):
    rngs = [np.random.default_rng(s) for s in np.random.SeedSequence(21).spawn(4)]
    for i, rng in enumerate(rngs):
        c = random_curve(kind, rng, 2 + i % 3)
        for _, t in parameter_grid(2, 2):
            assert structure_residual(c, param(kind, *t)) <= 10 * FD_STEP**2


def test_structure_residual_is_truncation_error():
    c = random_curve(C, np.random.default_rng(0), 3)
    z = Z[C]
    r3, r4 = structure_residual(c, z, 1e-3), structure_residual(c, z, 1e-4)
    assert 50 < r3 / r4 < 200


@pytest.mark.parametrize(
    "kind, cls",
    [(D, SurfaceClass.JOIN), (E, SurfaceClass.PLANE_CURVE_FAMILY), (C, SurfaceClass.NO_REAL_SINGULARITIES)],
)
def test_singular_locus_examples(kind, cls):
    rep = singular_locus(monomials(kind, 1, 2), parameter_grid(10, 10))
    assert rep.cls is cls and rep.ok
    assert rep.degenerate_fraction == 0
    if kind is D:
        assert len(rep.focal_curves["gamma1"]) == len(rep.focal_curves["gamma2"]) == 100
        assert all(s.memberships["pi1"] == 0 and s.memberships["pi2"] == 0 for s in rep.samples)
    if kind is E:
        assert len(rep.focal_curves["gamma"]) == 100
        assert all(s.memberships["pi"] == 0 for s in rep.samples)


def test_dual_focal_curve_depends_on_t1_only():
    c = monomials(E, 1, 2)
    rep = singular_locus(c, [((0, 0), (F(1, 3), F(0))), ((0, 1), (F(1, 3), F(5, 7)))])
    pts = rep.focal_curves["gamma"]
    assert pts[0]["point"] == pts[1]["point"]


def test_join_round_trip():
    c = random_curve(D, np.random.default_rng(2), 3)
    rep = singular_locus(c, parameter_grid(4, 4))
    g1 = [p["point"] for p in rep.focal_curves["gamma1"]]
    g2 = [p["point"] for p in rep.focal_curves["gamma2"]]
    res = join_reconstruct(g1, g2)
    assert not res.skipped and not res.cone
    for line, s in zip(res.lines, rep.samples):
        assert line.same_as(s.generator)
        assert line_plane_meet(line, focal_planes(D)[0]) is not None


def test_join_of_two_straight_lines_is_flat():
    pi1, pi2 = focal_planes(D)
    a, b = pi1.vectors[0], pi1.vectors[1]
    c, d = pi2.vectors[1], pi2.vectors[2]
    ts = [F(k, 3) for k in range(1, 6)]
    g1 = [tuple(x + t * y for x, y in zip(a, b)) for t in ts]
    g2 = [tuple(x + t * t * y for x, y in zip(c, d)) for t in ts]
    res = join_reconstruct(g1, g2)
    vecs = [list(v) for line in res.lines for v in (line.p, line.q)]
    assert exactlin.rank(vecs) == 4


def test_join_cone_and_skips_warn():
    pi1, pi2 = focal_planes(D)
    g1 = [pi1.vectors[0], pi1.vectors[1], pi1.vectors[2]]
    g2 = [pi2.vectors[0]] * 3
    with pytest.warns(UserWarning, match="cone"):
        res = join_reconstruct(g1, g2)
    assert res.cone
    with pytest.warns(UserWarning, match="coincide"):
        res = join_reconstruct([g1[0], g1[1]], [g1[0], g2[0]])
    assert res.skipped == [0] and res.lines[0] is None
    with pytest.raises(ContractError):
        join_reconstruct(g1, g2[:2])


def test_straight_line_family_in_three_space():
    for kind in KINDS:
        c = straight_line_curve(kind, el(kind, 1, 2), el(kind, 3, 0), el(kind, 0, -1), el(kind, 2, 2))
        vecs = []
        for _, t in parameter_grid(3, 3):
            line = embed(eval_curve(c, param(kind, *t)))
            vecs += [list(line.p), list(line.q)]
        assert exactlin.rank(vecs) == 4


def test_degenerate_samples_reported():
    # constant curve: all derivatives vanish
    c = CurveA.affine(D, (el(D, 1, 0),), (el(D, 0, 2),))
    rep = singular_locus(c, parameter_grid(2, 2))
    assert rep.degenerate_fraction == 1.0
    with pytest.raises(DegenerateSample):
        tangent_rank(c, Z[D])
