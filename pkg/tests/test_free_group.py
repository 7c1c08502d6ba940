import itertools

from hypothesis import given, strategies as st

from oracle import reduce_naive
from partialshift.free_group import (IDENTITY, Letter, ReducedWord, ball, degree, format_word, invert, is_positive,
                                     multiply, one_sided_normal_form, positive_word, reduce)

A, B = Letter(0, 1), Letter(1, 1)
a_, b_ = Letter(0, -1), Letter(1, -1)

letters = st.tuples(st.integers(0, 1), st.sampled_from([1, -1]))
raw_words = st.lists(letters, max_size=14)
words = raw_words.map(reduce)


def test_cancel_to_identity():
    assert reduce([A, a_]) == IDENTITY


def test_interior_cancellation():
    assert reduce([A, B, b_, A]) == ReducedWord([A, A])


def test_full_cancellation_product():
    assert multiply(reduce([A, b_]), reduce([B, a_])) == IDENTITY


def test_identity_law():
    g = reduce([A, b_, A])
    assert multiply(IDENTITY, g) == g and multiply(g, IDENTITY) == g


def test_invert_reverses_with_sign_flip():
    assert invert(reduce([A, B])) == ReducedWord([b_, a_])
    assert invert(IDENTITY) == IDENTITY


def test_degree_examples():
    assert degree(reduce([A, A, B])) == 3
    assert degree(reduce([A, b_])) == 0


def test_normal_form_examples():
    assert one_sided_normal_form(reduce([A, b_])) == (positive_word([0]), positive_word([1]))
    assert one_sided_normal_form(reduce([a_, B])) is None
    mu, nu = one_sided_normal_form(reduce([A, A, b_, a_]))
    assert (mu, nu) == (positive_word([0, 0]), positive_word([0, 1]))
    assert multiply(mu, invert(nu)) == reduce([A, A, b_, a_])


def test_positive_cone():
    assert is_positive(reduce([A, B]))
    assert not is_positive(reduce([A, b_]))
    assert is_positive(IDENTITY)


def test_format_word():
    assert format_word(reduce([A, b_]), "ab") == "a b^-1"
    assert format_word(reduce([A, B]), "ab") == "ab"
    assert format_word(IDENTITY, "ab") == "e"


def test_bad_letters_rejected():
    import pytest

    with pytest.raises(ValueError):
        reduce([(0, 2)])
    with pytest.raises(ValueError):
        reduce([(2, 1)], n_symbols=2)


def test_ball_sizes():
    # reduced words of length n on 2 generators: 4 * 3^(n-1)
    assert [len(ball(2, r)) for r in range(4)] == [1, 5, 17, 53]


@given(raw_words)
def test_reduce_matches_naive_oracle(raw):
    assert tuple(reduce(raw)) == tuple(Letter(*x) for x in reduce_naive(raw))


@given(raw_words)
def test_reduce_idempotent(raw):
    assert reduce(reduce(raw)) == reduce(raw)


@given(words, words, words)
def test_associativity(g, h, i):
    assert multiply(multiply(g, h), i) == multiply(g, multiply(h, i))


@given(words)
def test_inverses(g):
    assert multiply(g, invert(g)) == IDENTITY == multiply(invert(g), g)
    assert invert(invert(g)) == g


@given(words, words)
def test_degree_is_a_homomorphism(g, h):
    assert degree(multiply(g, h)) == degree(g) + degree(h)


@given(words)
def test_normal_form_round_trip(g):
    nf = one_sided_normal_form(g)
    if nf is None:
        # some inverse letter is followed by a positive one
        signs = [e for _, e in g]
        assert any(signs[i] == -1 and signs[j] == 1 for i in range(len(signs)) for j in range(i + 1, len(signs)))
    else:
        mu, nu = nf
        assert is_positive(mu) and is_positive(nu)
        assert multiply(mu, invert(nu)) == g


def test_exhaustive_radius_three_laws():
    B3 = ball(2, 3)
    for g, h in itertools.product(B3, repeat=2):
        assert degree(multiply(g, h)) == degree(g) + degree(h)
