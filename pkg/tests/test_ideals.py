import pytest
from hypothesis import given, settings, strategies as st

from oracle import FULL_PAIRS, GM_PAIRS, UT_PAIRS, fib_words, invariant_open_count, left_special_counts, sft_words
from partialshift.boolean_algebra import BooleanAlgebra, Resolution
from partialshift.ideals import (PsiMap, admissible_core, check_lattice, check_property_star,
                                 check_property_starstar, check_psi, faa_shadow, invariant_admissible_sets,
                                 kappa_on_cylinders, left_special_factors, left_special_scan, matrix_units, psi,
                                 quotient_report, splice_exponents, window_set)
from partialshift.free_group import invert
from partialshift.partial_action import PartialAction
from partialshift.shift_space import InputError, ShiftPresentation, ev_periodic, two_sided_periodic

# invariant open sets per shift; frozen from tests/oracle.py (stable for sample depth q = 7, 8, 9)
LATTICE_SIZES = {"ut": 3, "full": 2, "gm": 2}
GM_LEFT_SPECIAL = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
FIB_LEFT_SPECIAL = [1] * 12


@pytest.fixture(scope="module")
def ut_lattice(ut):
    return invariant_admissible_sets(ut, (3, 3))


def test_oracle_frozen_values():
    assert invariant_open_count(UT_PAIRS) == LATTICE_SIZES["ut"]
    assert invariant_open_count(FULL_PAIRS) == LATTICE_SIZES["full"]
    assert invariant_open_count(GM_PAIRS) == LATTICE_SIZES["gm"]
    assert left_special_counts(lambda n: sft_words(GM_PAIRS, n), 10) == GM_LEFT_SPECIAL
    assert left_special_counts(fib_words, 12) == FIB_LEFT_SPECIAL


def test_upper_triangular_lattice(ut_lattice):
    assert len(ut_lattice) == LATTICE_SIZES["ut"]
    empty, middle, full = ut_lattice.members
    assert empty.is_empty() and full.is_full()
    # the middle set is everything but a^inf, i.e. the points that contain b
    assert not middle.contains(ev_periodic("", "a"))
    for p in (ev_periodic("", "b"), ev_periodic("aa", "b"), ev_periodic("ab", "b")):
        assert middle.contains(p)
    assert ut_lattice.covers() == [(0, 1), (1, 2)]
    assert ut_lattice.to_dot().count("->") == 2


@pytest.mark.parametrize("name,r", [("full", (2, 2)), ("gm", (2, 2)), ("gm", (3, 3))])
def test_irreducible_lattices(name, r, request):
    L = invariant_admissible_sets(request.getfixturevalue(name), r)
    assert len(L) == LATTICE_SIZES[name]
    assert L.members[0].is_empty() and L.members[-1].is_full()


def test_lattice_certificates(ut_lattice):
    rep = check_lattice(ut_lattice)
    assert rep.passed, rep.counterexamples
    assert rep.details["refinement_stable"] and rep.details["refined_count"] == 3
    for cert in ut_lattice.certificates:
        assert all(cert.reverify().values())


def test_quotient(ut, ut_lattice):
    empty, middle, full = ut_lattice.members
    rep = quotient_report(ut, middle, ut_lattice)
    assert rep.passed and rep.details["restricted_points"] == ["(a)^inf"]
    assert quotient_report(ut, empty, ut_lattice).passed
    assert quotient_report(ut, full, ut_lattice).passed
    alg = middle.algebra
    with pytest.raises(InputError):
        quotient_report(ut, alg.make((3, 3), [next(iter(middle.atoms))]), ut_lattice)


def test_admissible_core_examples(gm_alg):
    r = Resolution(2, 2)
    assert admissible_core(gm_alg, gm_alg.full(r), r) == gm_alg.full(r)
    for rr in ((1, 1), (2, 2), (3, 3)):
        assert admissible_core(gm_alg, [ev_periodic("", "a")], rr).is_empty()
    Da = gm_alg.domain_set(gm_alg.pres.letters("a"))
    assert admissible_core(gm_alg, Da, (2, 2)) == Da
    by_rule = admissible_core(gm_alg, lambda atom, alg, rr: atom.prefix.startswith("a"), r)
    assert by_rule == Da


def test_admissible_core_isolated_point():
    # in a finite point set every point is isolated, so {point} is its own core
    pres = ShiftPresentation.points("ab", ["a", "ab"])
    h = PartialAction(pres)
    assert admissible_core(h, [ev_periodic("", "a")], (1, 1)).is_empty()  # (a,{a}) also holds (ab)^inf
    got = admissible_core(h, [ev_periodic("", "a")], (2, 2))
    assert len(got) == 1 and got.contains(ev_periodic("", "a"))


def test_left_special_scans(gm, fib, full):
    led = left_special_scan(fib, 12)
    assert led.counts == FIB_LEFT_SPECIAL and led.n_X == 1 and led.stable
    assert len(led.candidates) == 1 and not led.candidates[0].periodic
    g = left_special_scan(gm, 10)
    assert g.counts == GM_LEFT_SPECIAL and g.infinite is True
    # every golden-mean left special factor starts with a
    assert all(w[0] == "a" for w in left_special_factors(gm.presentation, 6))
    assert len(left_special_factors(full.presentation, 4)) == 16


def test_property_star(gm, fib):
    rep = check_property_star(gm, 3)
    assert rep.verdict == "fail" and rep.counterexamples[0]["mu"] == "b"
    assert check_property_star(fib, 6).verdict == "pass"


def test_property_starstar(gm, fib):
    assert check_property_starstar(fib, 12).verdict == "pass"
    assert check_property_starstar(gm, 8).verdict == "fail"
    one = PartialAction(ShiftPresentation.points("ab", ["ab"]))
    led = left_special_scan(one, 6)
    assert led.n_X == 0 and check_property_starstar(one, 6).verdict == "pass"


@pytest.fixture(scope="module")
def fib_psi(fib, fib2):
    return PsiMap(fib, fib2)


def test_psi_precondition(gm):
    gm2 = PartialAction(gm.presentation.with_side("two-sided"))
    with pytest.raises(InputError):
        PsiMap(gm, gm2)


def test_psi_fibonacci_11(fib_alg, fib_psi):
    r = Resolution(1, 1)
    images = []
    for atom in fib_alg.atoms(r):
        img = fib_psi(fib_alg.make(r, [atom]))
        if len(fib_alg.pres.pred_words(atom.preds)) >= 2:
            assert img.is_empty()
        else:
            images.append(img)
    union = images[0]
    for img in images[1:]:
        union = union | img
    assert union.is_full()
    for i, A in enumerate(images):
        for B in images[i + 1:]:
            assert (A & B).is_empty()
    assert fib_psi(fib_alg.full((2, 3))).is_full()


def test_psi_literal_matches_rule(fib_alg, fib_psi):
    for r in ((1, 1), (2, 1), (1, 3), (3, 3)):
        for atom in fib_alg.atoms(r):
            assert fib_psi(fib_alg.make(r, [atom])) == fib_psi.literal(atom, r)


def test_check_psi(fib, fib2):
    rep = check_psi(fib, fib2)
    assert rep.passed, rep.counterexamples


def test_kappa_cases(fib2):
    two = BooleanAlgebra(fib2)
    assert kappa_on_cylinders(two, "", "ab") == window_set(two, 0, "ab")
    assert kappa_on_cylinders(two, "ab", "") == window_set(two, -2, "ab")
    assert kappa_on_cylinders(two, "ab", "aa").is_empty()
    z = two_sided_periodic("ab")
    assert window_set(two, -1, "ba").contains(z)


def test_kappa_matches_psi(fib_alg, fib_psi):
    for mu, nu in (("", "ab"), ("a", "ba"), ("ab", "b"), ("b", "aa"), ("ba", "")):
        assert fib_psi(fib_alg.cylinder(mu, nu)) == fib_psi.kappa(mu, nu)


def test_faa_shadow(fib):
    rep = faa_shadow(fib, left_special_scan(fib, 12))
    assert rep.passed, rep.counterexamples


def test_matrix_units(fib):
    led = left_special_scan(fib, 12)
    system, rep = matrix_units(fib, led)
    assert rep.passed, rep.counterexamples
    assert rep.details["singleton_iso"]["K"] == 0
    assert all(s["contains"] == [i] for i, s in system.singletons.items())
    for i in range(len(system.points)):
        assert system.unit(i, i).n == system.unit(i, i).m


def test_splice_exponents(fib):
    f = fib.presentation.fixed_point()
    x = ev_periodic("b", "a")
    assert splice_exponents(f, f, 5) == [(n, n) for n in range(6)]
    assert (1, 0) in splice_exponents(x, ev_periodic("", "a"), 3)


def test_matrix_units_need_candidates(gm):
    with pytest.raises(InputError):
        matrix_units(gm, left_special_scan(PartialAction(ShiftPresentation.points("ab", ["ab"])), 4))


FIB_ALG = BooleanAlgebra(PartialAction(ShiftPresentation.substitution("ab", {"a": "ab", "b": "a"})))
PSI = PsiMap(FIB_ALG.handle, PartialAction(ShiftPresentation.substitution("ab", {"a": "ab", "b": "a"},
                                                                           side="two-sided")), star_level=None)


@st.composite
def fib_sets(draw, r):
    pts = sorted(FIB_ALG.atoms(r), key=lambda a: a.label())
    mask = draw(st.lists(st.booleans(), min_size=len(pts), max_size=len(pts)))
    return FIB_ALG.make(r, [p for p, m in zip(pts, mask) if m])


@settings(max_examples=40, deadline=None)
@given(fib_sets((2, 2)), fib_sets((1, 3)))
def test_psi_homomorphism(A, B):
    assert PSI(A & B) == PSI(A) & PSI(B)
    assert PSI(~A) == ~PSI(A)
    assert psi(FIB_ALG, PSI.two, A | B) == PSI(A) | PSI(B)


@settings(max_examples=30, deadline=None)
@given(fib_sets((2, 2)), st.sampled_from("ab"), st.sampled_from([1, -1]))
def test_psi_equivariance(A, a, sign):
    g = FIB_ALG.pres.letters(a)
    if sign < 0:
        g = invert(g)
    assert PSI(FIB_ALG.act(g, A)) == PSI.two.act(g, PSI(A))
