from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

from algplane import exactlin
from algplane.algebra2d import A2, KINDS, AlgebraKind, is_zero_divisor, mul
from algplane.errors import ContractError, DivisorError
from algplane.proj_plane import (
    FrameA,
    LineA,
    PointA,
    adjacent,
    basis_point,
    incident,
    line_through,
    matrix_coordinate,
    normalize,
    random_frame,
    random_invertible,
    random_point,
    standard_frame,
    unit_action,
)

C, D, E = AlgebraKind.COMPLEX, AlgebraKind.DOUBLE, AlgebraKind.DUAL


def el(kind, x, y=0):
    return A2(kind, F(x), F(y))


def pt(kind, *pairs):
    return PointA(kind, tuple(el(kind, *p) for p in pairs))


seeds = st.integers(0, 2**32 - 1)


def test_point_needs_independent_columns():
    with pytest.raises(ContractError):
        pt(E, (0, 1), (0, 0), (0, 0))
    with pytest.raises(ContractError):
        pt(D, (1, 1), (2, 2), (0, 0))


def test_normalize_examples():
    a, b = el(C, 1, 2), el(C, -3, 1)
    p = PointA(C, (A2.one(C), a, b))
    assert normalize(p) == p
    q = normalize(PointA(C, (el(C, 2), a, b)))
    assert q.coords == (A2.one(C), a.scale(F(1, 2)), b.scale(F(1, 2)))
    with pytest.raises(DivisorError):
        normalize(pt(E, (0, 1), (1, 0), (0, 0)))


def test_adjacency_examples():
    for kind in KINDS:
        assert not adjacent(basis_point(kind, 0), basis_point(kind, 1))
        p = pt(kind, (1, 2), (3, -1), (0, 5))
        assert adjacent(p, p.rmul(el(kind, 2, 1)))
    # (1, 0, 0) and (1, e, 0) share the column x1 = (0, 1, 0, 0, 0, 0)
    p, q = pt(E, (1, 0), (0, 0), (0, 0)), pt(E, (1, 0), (0, 1), (0, 0))
    assert exactlin.rank([a + b for a, b in zip(p.matrix(), q.matrix())]) == 3
    assert adjacent(p, q)
    assert not adjacent(p, pt(E, (1, 0), (1, 0), (0, 0)))


def test_incidence_examples():
    z, w = el(C, 2, -1), el(C, 1, 4)
    one, zero = A2.one(C), A2.zero(C)
    assert incident(LineA(C, (zero, zero, one)), PointA(C, (one, z, zero)))
    assert not incident(LineA(C, (one, zero, zero)), basis_point(C, 0))
    assert incident(LineA(C, (-z, one, zero)), PointA(C, (one, z, w)))


def test_matrix_coordinate_examples():
    a, b = el(D, 1, 2), el(D, 3, -1)
    mc = matrix_coordinate(PointA(D, (A2.one(D), a, b)))
    assert (mc.x1, mc.x2) == (a, b)
    z, w = el(C, 1, 1), el(C, 0, 2)
    mc = matrix_coordinate(PointA(C, (el(C, 2), z.scale(2), w.scale(4))))
    assert (mc.x1, mc.x2) == (z, w.scale(2))
    with pytest.raises(DivisorError):
        matrix_coordinate(pt(D, (1, 1), (1, 0), (0, 0)))


def test_unit_action_is_right_multiplication_by_u():
    for kind in KINDS:
        p = pt(kind, (1, 2), (3, -1), (0, 5))
        x0, x1 = p.columns()
        assert unit_action(kind, x0) == x1
        if kind is not E:
            assert p.rmul(A2.unit(kind)).columns()[0] == x1


def test_rmul_rejects_zero_divisors():
    p = pt(D, (1, 0), (0, 1), (2, 2))
    with pytest.raises(DivisorError):
        p.rmul(el(D, 1, -1))


def test_frames():
    for kind in KINDS:
        f = standard_frame(kind)
        assert len(f.real_frame()) == 6
        with pytest.raises(ContractError):
            FrameA((basis_point(kind, 0), basis_point(kind, 0), basis_point(kind, 1)))
    f = standard_frame(C)
    assert f.combine((el(C, 1), el(C, 2), el(C, 3))) == pt(C, (1, 0), (2, 0), (3, 0))


# ------------------------------------------------------------- properties


@given(st.sampled_from(KINDS), seeds)
def test_adjacency_symmetric_and_invariant(kind, seed):
    rng = np.random.default_rng(seed)
    p, q = random_point(kind, rng), random_point(kind, rng)
    a, b = random_invertible(kind, rng), random_invertible(kind, rng)
    assert adjacent(p, q) == adjacent(q, p)
    assert adjacent(p, q) == adjacent(p.rmul(a), q.rmul(b))
    assert adjacent(p, p)


@given(st.sampled_from(KINDS), seeds)
def test_matrix_coordinate_invariant_under_rescaling(kind, seed):
    rng = np.random.default_rng(seed)
    p = random_point(kind, rng)
    if is_zero_divisor(p.coords[0]):
        return
    a = random_invertible(kind, rng)
    assert matrix_coordinate(p) == matrix_coordinate(p.rmul(a))


@given(st.sampled_from(KINDS), seeds)
def test_incidence_invariant_under_rescaling(kind, seed):
    rng = np.random.default_rng(seed)
    p, q = random_point(kind, rng), random_point(kind, rng)
    if adjacent(p, q):
        return
    u = line_through(p, q)
    a, b = random_invertible(kind, rng), random_invertible(kind, rng)
    assert incident(u, p) and incident(u, q)
    assert incident(u.lmul(a), p.rmul(b))
    # a point of the line: p a + q b
    r = PointA(kind, tuple(mul(x, a) + mul(y, b) for x, y in zip(p.coords, q.coords)))
    assert incident(u, r)


@given(st.sampled_from(KINDS), seeds)
def test_random_frames_are_frames(kind, seed):
    f = random_frame(kind, np.random.default_rng(seed))
    assert exactlin.rank([list(v) for v in f.real_frame()]) == 6
