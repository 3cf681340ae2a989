import random

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from regkt.zlattice import (
    AbelianGroupStructure,
    AbelianQuotient,
    cokernel_structure,
    determinant,
    hermite_normal_form,
    identity,
    lattice_contains,
    lattice_equal,
    left_kernel,
    matmul,
    smith_normal_form,
    solve_left,
    subgroup_in_quotient,
    vecmat,
    verify_smith,
)

from oracles import finite_cokernel_counts, predicted_counts


def S(rank, *tors):
    return AbelianGroupStructure(rank, list(tors))


def test_snf_examples():
    sf = smith_normal_form(identity(2), 2)
    assert sf.diagonal == [1, 1]
    sf = smith_normal_form([[2, 0], [0, 3]], 2)
    assert sf.diagonal == [1, 6]
    verify_smith([[2, 0], [0, 3]], sf, 2)
    sf = smith_normal_form([[0, 0, 0], [0, 0, 0]], 3)
    assert all(d == 0 for d in sf.diagonal)


def test_snf_transforms_are_unimodular():
    M = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    sf = smith_normal_form(M, 3)
    assert matmul(matmul(sf.U, M), sf.V) == sf.S
    assert abs(determinant(sf.U)) == 1 and abs(determinant(sf.V)) == 1
    assert sf.diagonal == [2, 6, 12]


def test_cokernel_examples():
    assert cokernel_structure([], 3) == S(3)
    assert cokernel_structure([[2, 0]], 2) == S(1, 2)
    assert cokernel_structure([[2, 0], [0, 2], [1, 1]], 2) == S(0, 2)
    assert str(S(0)) == "0"
    assert str(S(2, 2, 4)) == "Z^2 x Z/2 x Z/4"
    assert str(S(1)) == "Z"


def test_subgroup_in_quotient_examples():
    rel = [[1, 2], [3, 4]]
    assert subgroup_in_quotient(rel, rel, 2).is_trivial
    assert subgroup_in_quotient([], identity(2), 2) == S(2)
    assert subgroup_in_quotient([[4, 0]], [[2, 0]], 2) == S(0, 2)


def test_structure_rejects_non_canonical_factors():
    for bad in ((1, 2), (4, 6), (0,)):
        with pytest.raises(ValueError):
            S(0, *bad)
    assert AbelianGroupStructure.from_diagonal([1, 2, 0], 4) == S(2, 2)


def _random_nonsingular(rng, n, bound):
    while True:
        M = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        d = abs(determinant(M))
        if 0 < d <= bound:
            return M, d


def test_cokernel_against_brute_force():
    rng = random.Random(11)
    for trial in range(40):
        n = 2 if trial % 2 else 3
        M, d = _random_nonsingular(rng, n, 60 if n == 2 else 24)
        extra = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(0, 2))]
        rows = M + extra
        st_ = cokernel_structure(rows, n)
        assert st_.free_rank == 0
        total, counts = finite_cokernel_counts(rows, n, d)
        assert st_.order == total
        assert predicted_counts(st_.torsion, d) == counts


def _unimodular(rng, n, steps=12):
    U = identity(n)
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        q = rng.randint(-2, 2)
        U = [row[:] for row in U]
        for k in range(n):
            U[i][k] += q * U[j][k]
    if rng.random() < 0.5:
        U = [U[p] for p in rng.sample(range(n), n)]
    return U


def test_snf_invariant_under_unimodular_change():
    rng = random.Random(5)
    for _ in range(100):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        M = [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)]
        base = smith_normal_form(M, c).diagonal
        M2 = matmul(matmul(_unimodular(rng, r), M), _unimodular(rng, c))
        sf = smith_normal_form(M2, c)
        verify_smith(M2, sf, c)
        assert sf.diagonal == base
        perm_rows = [M[p] for p in rng.sample(range(r), r)]
        assert smith_normal_form(perm_rows, c).diagonal == base


mats = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), max_size=6).map(lambda m: (m, c))
)


@settings(max_examples=150, deadline=None)
@given(mats)
def test_hnf_spans_same_lattice(mc):
    M, c = mc
    H = hermite_normal_form(M, c)
    assert lattice_equal(M, H, c)
    assert lattice_contains(M, H, c) and lattice_contains(H, M, c)


@settings(max_examples=150, deadline=None)
@given(mats)
def test_left_kernel_and_solve(mc):
    M, c = mc
    if not M:
        return
    for k in left_kernel(M, len(M), c):
        assert vecmat(k, M, c) == [0] * c
    x = [1 - i for i in range(len(M))]
    b = vecmat(x, M, c)
    y = solve_left(M, b, c)
    assert y is not None and vecmat(y, M, c) == b


@settings(max_examples=100, deadline=None)
@given(mats)
def test_quotient_coordinates_respect_relations(mc):
    M, c = mc
    q = AbelianQuotient(M, c)
    assert q.structure == cokernel_structure(M, c)
    for row in M:
        assert q.is_zero({i: v for i, v in enumerate(row) if v})
