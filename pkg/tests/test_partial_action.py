import pytest
from hypothesis import given, settings, strategies as st

from oracle import GM_PAIRS, _expand, ev_points, sft_domain
from partialshift.free_group import IDENTITY, ball, invert, multiply, one_sided_normal_form, reduce
from partialshift.partial_action import PartialAction, check_disjointness, check_partial_action_axioms
from partialshift.representation import build_basis
from partialshift.shift_space import Equality, ev_periodic, point_equal, shift, shift_by, \
    two_sided_periodic


def gm_points(q=3, p=3):
    return [ev_periodic(pre, per) for pre, per in sorted(ev_points(GM_PAIRS, q, p))]


def test_identity_domain_is_everything(gm, full2, fib):
    for h, p in ((gm, ev_periodic("b", "a")), (full2, two_sided_periodic("ab")), (fib, fib.presentation.fixed_point())):
        assert h.in_domain(IDENTITY, p) is True
        assert point_equal(h.apply(IDENTITY, p), p) == Equality.EQUAL


def test_golden_mean_b_ainv(gm):
    g = gm.letters("b") + invert(gm.letters("a"))
    # theta_g is defined on D_{g^-1}: points a x with b x admissible
    assert gm.in_domain(invert(g), ev_periodic("a", "a")) is True
    assert gm.in_domain(invert(g), ev_periodic("", "ab")) is False
    assert gm.in_domain(invert(g), ev_periodic("", "ba")) is False
    # D_g itself: points b x with a x admissible
    assert gm.in_domain(g, ev_periodic("b", "a")) is True
    assert gm.in_domain(g, ev_periodic("", "a")) is False
    assert point_equal(gm.apply(g, ev_periodic("a", "a")), ev_periodic("b", "a")) == Equality.EQUAL


def test_one_sided_generators(gm):
    a, b = gm.letters("a"), gm.letters("b")
    p = ev_periodic("", "ab")
    assert point_equal(gm.apply(b, ev_periodic("", "a")), ev_periodic("b", "a")) == Equality.EQUAL
    assert gm.apply(b, ev_periodic("", "ba")) is None
    assert point_equal(gm.apply(invert(a), p), shift(p)) == Equality.EQUAL
    assert gm.apply(invert(b), p) is None


def test_two_sided_shape(full2):
    a, b = full2.letters("a"), full2.letters("b")
    z = two_sided_periodic("ab")
    assert full2.in_domain(multiply(invert(a), b), z) is False
    assert full2.in_domain(multiply(b, invert(a)), z) is False
    mu = full2.letters("ab")
    assert full2.in_domain(mu, z) is True
    # theta_mu is tau^{-|mu|} on D_{mu^-1}
    w = shift_by(z, 1)
    assert full2.in_domain(invert(mu), w) == (w.window(-2, 0) == "ab")
    got = full2.apply(mu, z)
    if full2.in_domain(invert(mu), z):
        assert point_equal(got, shift_by(z, -2)) == Equality.EQUAL


def test_domain_matches_oracle(gm):
    pts = sorted(ev_points(GM_PAIRS, 3, 3))
    for g in ball(2, 3):
        nf = one_sided_normal_form(g)
        for pre, per in pts:
            x = _expand((pre, per), 40)
            want = nf is not None and sft_domain(GM_PAIRS, gm.word(nf[0]), gm.word(nf[1]), x)
            assert gm.in_domain(g, ev_periodic(pre, per)) is want, (gm.show(g), pre, per)


def test_axioms_golden_mean(gm):
    rep = check_partial_action_axioms(gm, ball(2, 2), gm_points())
    assert rep.verdict == "pass", rep.counterexamples
    assert rep.failures == 0 and min(rep.coverage.values()) == 1.0


def test_axioms_two_sided_full(full2):
    pts = build_basis(full2, 0, 3).points
    rep = check_partial_action_axioms(full2, ball(2, 2), pts)
    assert rep.verdict == "pass", rep.counterexamples


def test_axioms_fibonacci(fib):
    f = fib.presentation
    pts = [f.fixed_point(offset=n) for n in range(8)]
    rep = check_partial_action_axioms(fib, ball(2, 2), pts)
    assert rep.verdict == "pass", rep.counterexamples


@pytest.mark.parametrize("fixture", ["gm", "full", "full2"])
def test_disjointness(fixture, request):
    h = request.getfixturevalue(fixture)
    pts = build_basis(h, 2, 2).points
    rep = check_disjointness(h, 3, pts)
    assert rep.verdict == "pass" and rep.params["pairs"] == 1 + 6 + 28


def test_broken_action_is_caught(gm):
    class Broken(PartialAction):
        def apply(self, g, p):
            q = super().apply(g, p)
            if q is not None and g == self.letters("a"):
                return shift(q) if p.read(1) == "b" else q
            return q

    rep = check_partial_action_axioms(Broken(gm.presentation), ball(2, 2), gm_points())
    assert rep.verdict == "fail" and rep.counterexamples


def test_side_mismatch_rejected(gm):
    with pytest.raises(ValueError):
        PartialAction(gm.presentation, side="two-sided")


letters = st.lists(st.tuples(st.integers(0, 1), st.sampled_from([1, -1])), max_size=5).map(lambda t: reduce(t, 2))


@settings(max_examples=80, deadline=None)
@given(letters, st.sampled_from(gm_points(2, 2)))
def test_closed_form(gm, g, p):
    # for g = mu nu^-1, theta_g sends nu x to mu x
    nf = one_sided_normal_form(g)
    q = gm.apply(g, p)
    if nf is None:
        assert q is None
        return
    mu, nu = gm.word(nf[0]), gm.word(nf[1])
    if q is None:
        assert not gm.in_domain(invert(g), p)
        return
    assert p.read(len(nu)) == nu and q.read(len(mu)) == mu
    assert point_equal(shift_by(q, len(mu)), shift_by(p, len(nu))) == Equality.EQUAL
    assert gm.in_domain(g, q) is True


@settings(max_examples=60, deadline=None)
@given(st.text("ab", max_size=4))
def test_two_sided_positive_is_tau_power(full2, w):
    z = two_sided_periodic("aab")
    mu = full2.letters(w) if w else IDENTITY
    q = full2.apply(mu, z)
    if full2.in_domain(invert(mu), z):
        assert point_equal(q, shift_by(z, -len(w))) == Equality.EQUAL
    else:
        assert q is None
