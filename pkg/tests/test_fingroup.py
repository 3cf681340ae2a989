import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regkt.errors import CapExceeded, NotNormal, ParseError
from regkt.fingroup import (
    FORMAT_HEADER,
    SubgroupHandle,
    all_normal_subgroups,
    check_homomorphism,
    commutator_subgroup,
    cycles,
    cyclic,
    direct_product,
    format_group_text,
    from_permutations,
    generated_subgroup,
    is_full,
    is_normal,
    is_perfect,
    normal_closure,
    parse_group_text,
    parse_normal_spec,
    quotient,
    random_relabel,
)

from conftest import perm_group
from oracles import perm_closure, perm_inv, perm_mul, table_commutator_subgroup


def test_trivial_from_empty_generators():
    G = from_permutations(1, [])
    assert G.order == 1
    assert is_perfect(G)


def test_s3_order_matches_closure():
    gens = [cycles(3, (1, 2, 3)), cycles(3, (1, 2))]
    G = from_permutations(3, gens)
    assert G.order == len(perm_closure(3, gens)) == 6


def test_klein_four_all_involutions():
    G = from_permutations(4, [cycles(4, (1, 2), (3, 4)), cycles(4, (1, 3), (2, 4))])
    assert G.order == 4
    assert all(G.element_order(x) == 2 for x in range(1, 4))


def test_table_agrees_with_permutation_product(groups):
    G = groups["A4"]
    for a in range(G.order):
        for b in range(G.order):
            assert G.labels[G.table[a][b]] == perm_mul(G.labels[a], G.labels[b])
        assert G.labels[G.inverse[a]] == perm_inv(G.labels[a])


def test_element_order_is_bfs_with_identity_first(groups):
    G = groups["S3"]
    assert G.labels[0] == (1, 2, 3)
    again = from_permutations(3, [cycles(3, (1, 2, 3)), cycles(3, (1, 2))])
    assert again.labels == G.labels


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        from_permutations(5, [cycles(5, (1, 2, 3, 4, 5)), cycles(5, (1, 2))], cap=100)


def test_commutator_subgroup_examples(groups):
    A4 = groups["A4"]
    assert commutator_subgroup(A4.trivial(), A4).order == 1
    C6 = groups["C6"]
    assert commutator_subgroup(C6.whole(), C6).order == 1
    V4 = normal_closure(A4, [A4.element_of_label(cycles(4, (1, 2), (3, 4)))])
    assert V4.order == 4
    assert commutator_subgroup(V4, A4) == V4
    assert is_full(V4, A4)


def test_commutator_subgroup_matches_brute_force(groups):
    for name in ("S3", "D4", "Q8", "A4"):
        F = groups[name]
        for N in all_normal_subgroups(F):
            ref = table_commutator_subgroup(F.table, F.inverse, N.members, range(F.order))
            assert set(commutator_subgroup(N, F).members) == ref


def test_a5_is_perfect():
    A5 = from_permutations(5, [cycles(5, (1, 2, 3, 4, 5)), cycles(5, (1, 2, 3))])
    assert A5.order == 60
    assert is_perfect(A5)


def test_not_normal_raises(groups):
    S3 = groups["S3"]
    H = generated_subgroup(S3, [S3.element_of_label(cycles(3, (1, 2)))])
    assert not is_normal(H, S3)
    with pytest.raises(NotNormal):
        commutator_subgroup(H, S3)
    with pytest.raises(NotNormal):
        quotient(S3, H)


def test_quotient_examples(groups):
    A4 = groups["A4"]
    assert quotient(A4, A4.whole()).group.order == 1
    q = quotient(A4, A4.trivial())
    assert q.group.order == 12 and q.proj == tuple(range(12))
    V4 = normal_closure(A4, [A4.element_of_label(cycles(4, (1, 2), (3, 4)))])
    q = quotient(A4, V4)
    assert q.group.order == 3
    check_homomorphism(q.proj, A4, q.group)
    # min-index representatives
    for k, r in enumerate(q.reps):
        assert r == min(x for x in range(12) if q.proj[x] == k)


def test_quotient_projection_is_homomorphism_everywhere(groups):
    for name in ("D4", "Q8", "A4", "C2xC2xC2"):
        F = groups[name]
        for N in all_normal_subgroups(F):
            q = quotient(F, N)
            check_homomorphism(q.proj, F, q.group)
            assert q.group.order * N.order == F.order


def test_normal_subgroup_counts(groups):
    # D4 has 6 normal subgroups, Q8 has 6, A4 has 3, S3 has 3
    counts = {n: len(all_normal_subgroups(groups[n])) for n in ("D4", "Q8", "A4", "S3")}
    assert counts == {"D4": 6, "Q8": 6, "A4": 3, "S3": 3}


def test_full_core_idempotent(groups):
    for name in ("S3", "A4", "D4"):
        F = groups[name]
        for N in all_normal_subgroups(F):
            if is_full(N, F):
                assert is_full(commutator_subgroup(N, F), F)


def test_direct_product_index_convention():
    G = direct_product(cyclic(2), cyclic(3))
    assert G.order == 6 and G.is_abelian()
    assert G.table[1 * 3 + 2][0 * 3 + 2] == 1 * 3 + 1


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_random_relabel_is_isomorphism(seed):
    F = perm_group("A4", 4, [(1, 2, 3)], [(1, 2), (3, 4)])
    G, pos = random_relabel(F, random.Random(seed))
    check_homomorphism(pos, F, G)
    assert G.table[0][5] == 5


def test_group_text_round_trip(groups):
    G = groups["D4"]
    H = parse_group_text(format_group_text(G)).group
    assert H.table == G.table


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_group_text("regkt-format 2\nperm 3\n")
    with pytest.raises(ParseError):
        parse_group_text(FORMAT_HEADER + "\nblob 3\n")
    with pytest.raises(ParseError):
        parse_group_text(FORMAT_HEADER + "\ntable 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_group_text(FORMAT_HEADER + "\ntable 2\n0 1\n1 1\n")


def test_normal_spec_takes_closure():
    gf = parse_group_text(FORMAT_HEADER + "\nperm 3\n(1 2 3)\n(1 2)\n")
    N = parse_normal_spec(gf, "(1 2)")
    assert N.order == 6
    N = parse_normal_spec(gf, "(1 2 3)")
    assert N.order == 3
    with pytest.raises(ParseError):
        parse_normal_spec(gf, "(1 4)")


def test_subgroup_handle_rejects_non_subgroup(groups):
    S3 = groups["S3"]
    r = S3.element_of_label(cycles(3, (1, 2, 3)))
    with pytest.raises(ValueError):
        SubgroupHandle(S3, [0, r])
    assert SubgroupHandle(S3, [0, r, S3.inverse[r]]).order == 3
