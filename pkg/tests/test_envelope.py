import random

import pytest

from regkt import multiplier, stallings
from regkt.envelope import (
    Envelope,
    RelativeEnvelope,
    core_coordinates,
    core_matrix_determinant,
    inv_ints,
    jf_basis,
    jnf_cores,
    member_jnf,
    reduce_ints,
)
from regkt.errors import NotMember, NotNormal
from regkt.fingroup import all_normal_subgroups, generated_subgroup, normal_closure, random_relabel
from regkt.freeword import format_word


def pairs_of(groups, names=("C2", "C4", "C2xC2", "S3", "D4", "Q8", "A4")):
    for n in names:
        F = groups[n]
        for N in all_normal_subgroups(F):
            yield N, F


def test_jf_basis_examples(groups):
    C2 = groups["C2"]
    env = Envelope(C2)
    assert [format_word(w) for w in jf_basis(env)] == ["gu:1 gu:1"]
    assert jf_basis(Envelope(groups["trivial"])) == []
    C3 = groups["C3"]
    basis = jf_basis(Envelope(C3))
    assert len(basis) == 4
    g = stallings.build(basis, alphabet=Envelope(C3).alphabet)
    assert g.num_states == 3 and g.is_complete()


def test_jf_basis_is_free_basis_of_kernel(groups):
    for name in ("C2", "C3", "C4", "C2xC2", "S3", "C6", "D4", "Q8", "A4"):
        F = groups[name]
        env = Envelope(F)
        basis = jf_basis(env)
        n = F.order
        assert len(basis) == (n - 1) ** 2
        assert all(env.evaluate(env.from_word(w)) == 0 for w in basis)
        g = stallings.build(basis, alphabet=env.alphabet)
        assert g.rank() == len(basis)
        assert g.num_states == n and g.is_complete()
        # the automaton is the Cayley graph: state reached by u_x is x's coset of J_F
        for x in range(1, n):
            assert g.trace(env.to_word((x,))) != 0


def test_core_counts(groups):
    C2 = groups["C2"]
    c = jnf_cores(RelativeEnvelope(C2, C2.trivial()))
    assert all(len(v) == 0 for v in c.values())
    c = jnf_cores(RelativeEnvelope(C2, C2.whole()))
    assert [len(c[k]) for k in ("B1", "B2", "B3")] == [1, 0, 0]
    assert format_word(c["B1"][0].word(Envelope(C2))) == "gu:1 gu:1"
    C4 = groups["C4"]
    N = normal_closure(C4, [C4.element_of_label((3, 4, 1, 2))])
    c = jnf_cores(RelativeEnvelope(C4, N))
    assert [len(c[k]) for k in ("B1", "B2", "B3")] == [1, 1, 2]


def test_not_normal(groups):
    S3 = groups["S3"]
    H = generated_subgroup(S3, [S3.element_of_label((2, 1, 3))])
    with pytest.raises(NotNormal):
        RelativeEnvelope(S3, H)


def test_membership_examples(groups):
    A4 = groups["A4"]
    N = [N for N in all_normal_subgroups(A4) if N.order == 4][0]
    r = RelativeEnvelope(A4, N)
    assert r.member_jnf(())
    c, d = N.members[1], N.members[2]
    cd = A4.table[c][d]
    assert r.member_jnf((c, d, -cd))
    x = next(x for x in range(A4.order) if x not in N.members)
    assert not r.member_jnf((x,))
    assert member_jnf(r, Envelope(A4).to_word((c, d, -cd)))


def test_cores_are_members_with_unit_coordinates(groups):
    for N, F in pairs_of(groups):
        r = RelativeEnvelope(F, N)
        for i, ce in enumerate(r.B):
            assert r.member_jnf(ce.ints)
            assert r.kappa(ce.ints) == {i: 1}
        for ce in r.ucore:
            assert r.member_unf(ce.ints)
        for w in r.lemma1_family(1):
            assert r.member_unf(w)


def test_basis_change_is_unimodular(groups):
    for N, F in pairs_of(groups):
        r = RelativeEnvelope(F, N)
        if r.B:
            assert core_matrix_determinant(r) == 1


def test_coordinate_examples(groups):
    C2 = groups["C2"]
    r = RelativeEnvelope(C2, C2.whole())
    assert core_coordinates(r, (1, 1, 1, 1)) == [2]
    A4 = groups["A4"]
    r = RelativeEnvelope(A4, A4.whole())
    b1 = r.B[5].ints
    b2 = r.B[17].ints
    q = multiplier.canonical_extension(A4.whole(), A4, families="a", renv=r).quotient
    for z in range(1, A4.order):
        k = r.kappa(reduce_ints((z,) + b1 + (-z,)))
        k[5] = k.get(5, 0) - 1
        assert q.is_zero({i: v for i, v in k.items() if v})
    comm = reduce_ints(b1 + b2 + inv_ints(b1) + inv_ints(b2))
    assert r.kappa(comm) == {}
    with pytest.raises(NotMember):
        r.kappa((1,))


def test_conjugation_dropped_modulo_jnf_u(groups):
    # conjugation by any u_z (not only section letters) leaves the class in J/[J,U_F]
    for N, F in pairs_of(groups, ("C4", "S3", "D4", "A4")):
        if N.order == 1:
            continue
        r = RelativeEnvelope(F, N)
        q = multiplier.canonical_extension(N, F, families="a", renv=r).quotient
        for b, ce in enumerate(r.B):
            for z in range(1, F.order):
                k = r.kappa(reduce_ints((z,) + ce.ints + (-z,)))
                k[b] = k.get(b, 0) - 1
                assert q.is_zero({i: v for i, v in k.items() if v})


def _random_core_product(r, rng, length):
    w, expect = (), {}
    for _ in range(length):
        b = rng.randrange(len(r.B))
        s = rng.choice((1, -1))
        z = rng.choice(r.reps)
        piece = r.B[b].ints if s > 0 else inv_ints(r.B[b].ints)
        if z:
            piece = reduce_ints((z,) + piece + (-z,))
        w = reduce_ints(w + piece)
        expect[b] = expect.get(b, 0) + s
    return w, {b: v for b, v in expect.items() if v}


def test_known_multiset_round_trip(groups):
    rng = random.Random(2024)
    for N, F in pairs_of(groups, ("C4", "S3", "D4", "A4")):
        r = RelativeEnvelope(F, N)
        if not r.B:
            continue
        for _ in range(1000 // 8):
            w, expect = _random_core_product(r, rng, rng.randint(1, 6))
            assert r.kappa(w) == expect


def test_linearity(groups):
    rng = random.Random(8)
    from regkt.harness import random_jnf_word

    for N, F in pairs_of(groups, ("C4", "D4", "A4")):
        r = RelativeEnvelope(F, N)
        for _ in range(30):
            v, _ = random_jnf_word(r, rng)
            w, _ = random_jnf_word(r, rng)
            kv, kw = r.kappa(v), r.kappa(w)
            s = {b: kv.get(b, 0) + kw.get(b, 0) for b in set(kv) | set(kw)}
            assert r.kappa(reduce_ints(v + w)) == {b: x for b, x in s.items() if x}


def test_independent_of_element_order(groups):
    # relabel F, transport words, compare the ranks and quotient orders they see
    rng = random.Random(4)
    from regkt.harness import random_jnf_word

    for name in ("D4", "A4"):
        F = groups[name]
        for N in all_normal_subgroups(F):
            r = RelativeEnvelope(F, N)
            data = multiplier.canonical_extension(N, F, families="a", renv=r)
            words = [random_jnf_word(r, rng)[0] for _ in range(12)]
            G, pos = random_relabel(F, rng)
            NG = type(N)(G, [pos[x] for x in N.members])
            r2 = RelativeEnvelope(G, NG)
            data2 = multiplier.canonical_extension(NG, G, families="a", renv=r2)
            moved = [tuple(pos[a] if a > 0 else -pos[-a] for a in w) for w in words]
            for w, m in zip(words, moved):
                z1 = data.quotient.is_zero(r.kappa(w))
                z2 = data2.quotient.is_zero(r2.kappa(m))
                assert z1 == z2
                two = lambda k: {b: 2 * v for b, v in k.items()}
                assert data.quotient.is_zero(two(r.kappa(w))) == data2.quotient.is_zero(two(r2.kappa(m)))
            assert data.quotient.structure == data2.quotient.structure
