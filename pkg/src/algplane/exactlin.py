"""Small dense linear algebra and low-degree polynomial roots.

Matrices are plain nested sequences. When every entry is an ``int`` or a
``Fraction`` the routines run exact Gaussian elimination; otherwise they
switch to floating point (numpy SVD) with a relative tolerance.
Polynomials are coefficient tuples, lowest degree first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra2d import is_exact
from .errors import ContractError, DegenerateInput

RANK_TOL = 1e-8
ROOT_CLUSTER = 1e-6


def all_exact(rows) -> bool:
    return all(is_exact(v) for row in rows for v in row)


def _as_rows(m) -> list[list]:
    rows = [list(r) for r in m]
    if not rows or not rows[0]:
        raise ContractError("empty matrix")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ContractError("ragged matrix")
    return rows


def rref(m) -> tuple[list[list[Fraction]], list[int]]:
    """Exact reduced row echelon form; returns (rows, pivot columns)."""
    rows = [[Fraction(v) for v in r] for r in _as_rows(m)]
    n_rows, n_cols = len(rows), len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def singular_values(m) -> np.ndarray:
    return np.linalg.svd(np.asarray(m, dtype=float), compute_uv=False)


def rank(m, tol: float = RANK_TOL) -> int:
    """Exact rank for rational input, else count of ``s_i > tol * s_1``."""
    rows = _as_rows(m)
    if all_exact(rows):
        return len(rref(rows)[1])
    s = singular_values(rows)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > tol * s[0]))


def nullspace(m, tol: float = RANK_TOL) -> list[list]:
    """Basis of ``{v : m v = 0}``; exact basis vectors for rational input."""
    rows = _as_rows(m)
    n_cols = len(rows[0])
    if all_exact(rows):
        red, pivots = rref(rows)
        free = [c for c in range(n_cols) if c not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * n_cols
            v[f] = Fraction(1)
            for i, p in enumerate(pivots):
                v[p] = -red[i][f]
            basis.append(v)
        return basis
    a = np.asarray(rows, dtype=float)
    _, s, vt = np.linalg.svd(a)
    r = int(np.sum(s > tol * s[0])) if s.size and s[0] > 0 else 0
    return [list(v) for v in vt[r:]]


def det(m):
    rows = _as_rows(m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ContractError("determinant of a non-square matrix")
    if not all_exact(rows):
        return float(np.linalg.det(np.asarray(rows, dtype=float)))
    a = [[Fraction(v) for v in r] for r in rows]
    sign = 1
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        out *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign * out


def solve(m, b):
    """Solve the square system ``m x = b`` (exact when possible)."""
    rows = _as_rows(m)
    if all_exact(rows) and all(is_exact(v) for v in b):
        aug = [list(r) + [bv] for r, bv in zip(rows, b)]
        red, pivots = rref(aug)
        n = len(rows[0])
        if len(pivots) != n or pivots[-1] == n:
            raise ContractError("singular system")
        return [red[i][n] for i in range(n)]
    return list(np.linalg.solve(np.asarray(rows, dtype=float), np.asarray(b, dtype=float)))


def transpose(m) -> list[list]:
    return [list(c) for c in zip(*m)]


def matmul(a, b) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def normalize_vector(v: Sequence):
    """Divide by the entry of largest absolute value (ties: lowest index)."""
    idx = max(range(len(v)), key=lambda i: (abs(v[i]), -i))
    piv = v[idx]
    if piv == 0:
        raise DegenerateInput("cannot normalize the zero vector")
    return tuple(x / piv for x in v)


def complete_basis(vectors: Sequence[Sequence]) -> list[list]:
    """Extend independent ``vectors`` to a basis with standard unit vectors.

    Exact input is completed by the unit vectors of the non-pivot columns of
    its reduced echelon form; float input greedily, lowest index first.
    """
    n = len(vectors[0])
    out = [list(v) for v in vectors]
    if all_exact(out):
        _, pivots = rref(out)
        if len(pivots) != len(out):
            raise ContractError("vectors to complete are dependent")
        for k in range(n):
            if k not in pivots:
                out.append([Fraction(int(i == k)) for i in range(n)])
        return out
    for k in range(n):
        if len(out) == n:
            break
        e = [0.0] * n
        e[k] = 1.0
        if rank(out + [e]) == len(out) + 1:
            out.append(e)
    return out


def quotient_coords(span_vectors: Sequence[Sequence], vectors: Sequence[Sequence]) -> list[list]:
    """Coordinates of ``vectors`` in R^n / span(span_vectors).

    The complement is spanned by standard unit vectors chosen by
    :func:`complete_basis`, so the result is exact for rational input.
    """
    k = len(span_vectors)
    basis = complete_basis(span_vectors)
    n = len(basis)
    cols = transpose(basis)
    if all_exact(cols) and all_exact(vectors):
        aug = [row + [v[i] for v in vectors] for i, row in enumerate(cols)]
        red, _ = rref(aug)
        return [[red[i][n + j] for i in range(k, n)] for j in range(len(vectors))]
    sol = np.linalg.solve(np.asarray(cols, dtype=float), np.asarray(vectors, dtype=float).T)
    return [list(sol[k:, j]) for j in range(len(vectors))]


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of R^n stored by a reduced spanning basis."""

    ambient: int
    basis: tuple[tuple, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def exact(self) -> bool:
        return all_exact(self.basis)

    def contains(self, v: Sequence, tol: float = 1e-10) -> bool:
        return subspace_contains(self, v, tol)

    def residual(self, v: Sequence) -> float:
        """Distance from ``v`` to the subspace relative to ``|v|``."""
        if not self.basis:
            return 0.0 if not any(v) else 1.0
        q = _orthonormal(self.basis)
        x = np.asarray(v, dtype=float)
        nv = np.linalg.norm(x)
        if nv == 0:
            return 0.0
        return float(np.linalg.norm(x - q @ (q.T @ x)) / nv)

    def distance(self, other: "Subspace") -> float:
        return subspace_distance(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient != other.ambient or self.dim != other.dim:
            return False
        return rank(list(self.basis) + list(other.basis)) == self.dim if self.basis else True

    def __hash__(self) -> int:
        return hash((self.ambient, self.dim))


def subspace_span(vectors: Sequence[Sequence], tol: float = RANK_TOL) -> Subspace:
    vecs = [list(v) for v in vectors]
    if not vecs:
        raise ContractError("span of no vectors needs an explicit ambient dimension")
    n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise ContractError("ambient dimensions disagree")
    if all_exact(vecs):
        red, pivots = rref(vecs)
        basis = tuple(tuple(red[i]) for i in range(len(pivots)))
        return Subspace(n, basis)
    a = np.asarray(vecs, dtype=float)
    _, s, vt = np.linalg.svd(a, full_matrices=False)
    r = int(np.sum(s > tol * s[0])) if s.size and s[0] > 0 else 0
    return Subspace(n, tuple(tuple(float(x) for x in row) for row in vt[:r]))


def subspace_contains(s: Subspace, v: Sequence, tol: float = 1e-10) -> bool:
    """Membership: exact rank test for rational data, else relative residual <= tol."""
    if len(v) != s.ambient:
        raise ContractError("ambient dimensions disagree")
    if not any(x != 0 for x in v):
        return True
    if not s.basis:
        return False
    if s.exact and all(is_exact(x) for x in v):
        return rank(list(s.basis) + [list(v)]) == s.dim
    return s.residual(v) <= tol


def _orthonormal(basis) -> np.ndarray:
    a = np.asarray(basis, dtype=float).T
    q, _ = np.linalg.qr(a)
    return q


def subspace_distance(a: Subspace, b: Subspace) -> float:
    """Spectral norm of the difference of orthogonal projectors (1.0 if dims differ)."""
    if a.ambient != b.ambient:
        raise ContractError("ambient dimensions disagree")
    if a.dim != b.dim:
        return 1.0
    if a.dim == 0:
        return 0.0
    if a.exact and b.exact and a == b:
        return 0.0
    qa, qb = _orthonormal(a.basis), _orthonormal(b.basis)
    diff = qa @ qa.T - qb @ qb.T
    return float(np.linalg.norm(diff, 2))


# ---------------------------------------------------------------- polynomials


def poly_trim(p: Sequence) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_degree(p: Sequence) -> int:
    return len(poly_trim(p)) - 1


def poly_add(p: Sequence, q: Sequence) -> tuple:
    n = max(len(p), len(q))
    zero = 0
    return poly_trim(
        (p[i] if i < len(p) else zero) + (q[i] if i < len(q) else zero) for i in range(n)
    )


def poly_scale(p: Sequence, c) -> tuple:
    return poly_trim(c * a for a in p)


def poly_sub(p: Sequence, q: Sequence) -> tuple:
    return poly_add(p, poly_scale(q, -1))


def poly_mul(p: Sequence, q: Sequence) -> tuple:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_eval(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_deriv(p: Sequence) -> tuple:
    return poly_trim(i * p[i] for i in range(1, len(p)))


def poly_divmod(p: Sequence, q: Sequence) -> tuple[tuple, tuple]:
    p, q = list(poly_trim(p)), poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if len(p) < len(q):
        return (), tuple(p)
    quot = [Fraction(0)] * (len(p) - len(q) + 1)
    lead = q[-1]
    while len(p) >= len(q) and p:
        k = len(p) - len(q)
        c = p[-1] / lead
        quot[k] = c
        for i, qc in enumerate(q):
            p[i + k] -= c * qc
        p = list(poly_trim(p))
    return poly_trim(quot), tuple(p)


def poly_monic(p: Sequence) -> tuple:
    p = poly_trim(p)
    if not p:
        return ()
    return tuple(Fraction(c) / p[-1] for c in p)


def poly_gcd(p: Sequence, q: Sequence) -> tuple:
    """Monic gcd over the rationals."""
    a, b = poly_trim(p), poly_trim(q)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def squarefree_decomposition(p: Sequence) -> list[tuple[tuple, int]]:
    """Yun's algorithm: ``p = c * prod f_i^i`` with each ``f_i`` square-free and monic."""
    f = poly_monic(p)
    if poly_degree(f) < 1:
        return []
    out = []
    fp = poly_deriv(f)
    a = poly_gcd(f, fp)
    b = poly_divmod(f, a)[0]
    c = poly_divmod(fp, a)[0]
    d = poly_sub(c, poly_deriv(b))
    i = 1
    while poly_degree(b) >= 1:
        g = poly_gcd(b, d)
        if poly_degree(g) >= 1:
            out.append((g, i))
        b = poly_divmod(b, g)[0]
        c = poly_divmod(d, g)[0]
        d = poly_sub(c, poly_deriv(b))
        i += 1
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    for k in range(1, math.isqrt(n) + 1):
        if n % k == 0:
            out.extend({k, n // k})
    return sorted(out)


def _rational_roots(p: tuple) -> list[Fraction]:
    """Rational roots of a square-free rational polynomial (rational root theorem)."""
    den = math.lcm(*(Fraction(c).denominator for c in p))
    ints = [int(Fraction(c) * den) for c in p]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        k = next(i for i, c in enumerate(ints) if c != 0)
        ints = ints[k:]
    if len(ints) < 2:
        return roots
    for num in _divisors(ints[0]):
        for den_ in _divisors(ints[-1]):
            for cand in (Fraction(num, den_), Fraction(-num, den_)):
                if cand not in roots and poly_eval(ints, cand) == 0:
                    roots.append(cand)
    return roots


@dataclass(frozen=True)
class RootSet:
    """Roots with multiplicities.

    ``real`` holds ``(root, multiplicity)``; ``complex_pairs`` holds
    ``(re, im, multiplicity)`` with ``im > 0`` standing for ``re +- i*im``.
    """

    real: tuple[tuple[object, int], ...]
    complex_pairs: tuple[tuple[object, object, int], ...] = ()

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.real) + 2 * sum(m for *_, m in self.complex_pairs)

    @property
    def real_count(self) -> int:
        """Number of distinct real roots."""
        return len(self.real)

    def real_dict(self) -> dict:
        return {r: m for r, m in self.real}

    def matches(self, other: "RootSet", tol: float = ROOT_CLUSTER) -> bool:
        """Same multiplicity pattern and pairwise root distance <= tol."""
        return _match(self.real, other.real, tol, lambda r: (float(r), 0.0)) and _match(
            self.complex_pairs, other.complex_pairs, tol, lambda r: (float(r[0]), float(r[1]))
        )


def _match(xs, ys, tol, key) -> bool:
    if len(xs) != len(ys):
        return False
    pool = list(ys)
    for item in xs:
        k = key(item[:-1] if len(item) == 3 else item[0])
        for j, cand in enumerate(pool):
            kc = key(cand[:-1] if len(cand) == 3 else cand[0])
            if item[-1] == cand[-1] and math.dist(k, kc) <= tol:
                pool.pop(j)
                break
        else:
            return False
    return True


def _sort_roots(real, pairs) -> RootSet:
    real = sorted(real, key=lambda t: float(t[0]))
    pairs = sorted(pairs, key=lambda t: (float(t[0]), float(t[1])))
    return RootSet(tuple(real), tuple(pairs))


def _exact_roots(p: tuple) -> RootSet:
    real, pairs = [], []
    for factor, mult in squarefree_decomposition(p):
        rest = factor
        for r in _rational_roots(factor):
            real.append((r, mult))
            rest = poly_divmod(rest, (-r, Fraction(1)))[0]
        deg = poly_degree(rest)
        if deg < 1:
            continue
        if deg == 2:
            c, b, a = rest
            disc = b * b - 4 * a * c
            re = -b / (2 * a)
            root = _exact_sqrt(abs(disc))
            half = root / (2 * abs(a)) if isinstance(root, Fraction) else root / (2 * abs(float(a)))
            if disc < 0:
                pairs.append((re, half, mult))
            else:
                real.extend([(float(re) - float(half), mult), (float(re) + float(half), mult)])
            continue
        for z in np.roots([float(c) for c in reversed(rest)]):
            if abs(z.imag) <= ROOT_CLUSTER:
                real.append((float(z.real), mult))
            elif z.imag > 0:
                pairs.append((float(z.real), float(z.imag), mult))
    return _sort_roots(real, pairs)


def _exact_sqrt(q: Fraction):
    q = Fraction(q)
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return math.sqrt(q)


def _cluster(values: Sequence[complex], radius: float) -> list[list[complex]]:
    clusters: list[list[complex]] = []
    for z in values:
        hits = [c for c in clusters if any(abs(z - w) <= radius for w in c)]
        merged = [z]
        for c in hits:
            merged.extend(c)
            clusters.remove(c)
        clusters.append(merged)
    return clusters


def _float_roots(p: tuple, radius: float) -> RootSet:
    zs = np.roots([float(c) for c in reversed(p)])
    real, pairs = [], []
    for cl in _cluster(list(zs), radius):
        centre = complex(np.mean(cl))
        m = len(cl)
        if abs(centre.imag) <= radius:
            real.append((float(centre.real), m))
        elif centre.imag > 0:
            pairs.append((float(centre.real), float(centre.imag), m))
    return _sort_roots(real, pairs)


def real_roots_with_multiplicity(coeffs: Sequence, radius: float = ROOT_CLUSTER) -> RootSet:
    """All roots of a (low-degree) polynomial, grouped with multiplicities.

    Rational coefficients use square-free factorization, so multiplicities are
    exact; float coefficients cluster the numerical root list with ``radius``.
    """
    p = poly_trim(coeffs)
    if not p:
        raise DegenerateInput("zero polynomial")
    if len(p) == 1:
        return RootSet(())
    if all(is_exact(c) for c in p):
        return _exact_roots(tuple(Fraction(c) for c in p))
    return _float_roots(p, radius)
