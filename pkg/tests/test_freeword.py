import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regkt.errors import ParseError, UnmappedGenerator
from regkt.fingroup import cycles, from_permutations
from regkt.freeword import (
    EMPTY,
    GenId,
    Word,
    apply_hom,
    comm,
    conj,
    evaluate,
    exponent_sums,
    format_word,
    inv,
    mul,
    parse_word,
)

a, b, c = (Word.gen(GenId("x", i)) for i in range(3))

letters = st.tuples(st.integers(0, 3), st.sampled_from([1, -1])).map(lambda t: (GenId("x", t[0]), t[1]))
words = st.lists(letters, max_size=64).map(Word)


def is_reduced(w):
    return all(not (p[0] == q[0] and p[1] == -q[1]) for p, q in zip(w.letters, w.letters[1:]))


def test_cancellation():
    assert mul(a, inv(a)) == EMPTY
    assert comm(a, a) == EMPTY


def test_conjugated_commutator_length():
    # c a b a^-1 b^-1 c^-1: six letters, nothing cancels
    w = conj(comm(a, b), c)
    assert len(w) == 6 == 2 + len(comm(a, b))
    assert format_word(w) == "gx:2 gx:0 gx:1 gx:0' gx:1' gx:2'"


def test_apply_hom_examples():
    assert apply_hom({GenId("x", 0): a, GenId("x", 1): b}, a * ~b) == a * ~b
    assert apply_hom({GenId("x", 0): EMPTY, GenId("x", 1): EMPTY}, a * b * ~a) == EMPTY
    assert apply_hom({GenId("x", 0): b * c, GenId("x", 1): b}, a * ~b) == b * c * ~b
    with pytest.raises(UnmappedGenerator):
        apply_hom({}, a)


def test_evaluate_examples():
    V4 = from_permutations(4, [cycles(4, (1, 2), (3, 4)), cycles(4, (1, 3), (2, 4))])
    assign = {GenId("u", x): x for x in range(1, 4)}
    u = {x: Word.gen(GenId("u", x)) for x in range(1, 4)}
    assert evaluate(EMPTY, V4, assign) == 0
    assert evaluate(u[2], V4, assign) == 2
    assert evaluate(u[1] * u[2], V4, assign) == 3
    with pytest.raises(UnmappedGenerator):
        evaluate(a, V4, assign)


@settings(max_examples=300, deadline=None)
@given(words, words, words)
def test_group_laws(x, y, z):
    assert is_reduced(x) and is_reduced(mul(x, y))
    assert mul(mul(x, y), z) == mul(x, mul(y, z))
    assert inv(inv(x)) == x
    assert mul(x, inv(x)) == EMPTY
    assert Word(x.letters) == x


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_evaluate_is_homomorphism(x, y):
    S4 = from_permutations(4, [cycles(4, (1, 2, 3, 4)), cycles(4, (1, 2))])
    assign = {GenId("x", i): v for i, v in enumerate((3, 7, 11, 19))}
    lhs = evaluate(mul(x, y), S4, assign)
    assert lhs == S4.table[evaluate(x, S4, assign)][evaluate(y, S4, assign)]


@settings(max_examples=200, deadline=None)
@given(words)
def test_text_round_trip(x):
    assert parse_word(format_word(x)) == x
    assert format_word(parse_word(format_word(x))) == format_word(x)


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_word("gx:1 hello")


def test_exponent_sums():
    assert exponent_sums(a * b * ~a * a * a) == {GenId("x", 0): 2, GenId("x", 1): 1}
