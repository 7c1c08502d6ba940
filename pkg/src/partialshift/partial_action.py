"""The partial action of the free group on a shift space.

One-sided: theta_a prepends ``a`` and theta_{a^-1} is the shift restricted
to points starting with ``a``.  Domains are read off the normal form
g = mu nu^-1: a point x lies in D_g iff x starts with mu and nu x' is a
point, where x' is x with mu removed.

Two-sided: theta_mu = tau^{-|mu|} on points whose window just left of the
origin reads mu; every other non-positive, non-negative-cone element acts
with empty domain.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .free_group import (IDENTITY, ReducedWord, degree, format_word, invert, is_positive, multiply,
                         one_sided_normal_form)
from .report import Report, Timer
from .shift_space import Equality, Point, ShiftPresentation, Side, point_equal, prepend, shift_by


class PartialAction:
    """Handle bundling a presentation with its partial action."""

    def __init__(self, presentation: ShiftPresentation, side=None):
        side = Side(side) if side is not None else presentation.side
        if side != presentation.side:
            raise ValueError("handle side must match the presentation side")
        self.presentation = presentation
        self.side = side

    @property
    def alphabet(self):
        return self.presentation.alphabet

    def word(self, g) -> str:
        return self.presentation.word(g)

    def letters(self, w: str) -> ReducedWord:
        return self.presentation.letters(w)

    def show(self, g) -> str:
        return format_word(g, self.alphabet)

    # ------------------------------------------------------------ domains
    def in_domain(self, g, p: Point) -> Optional[bool]:
        """True/False, or None when the language oracle is inconclusive."""
        if self.side == Side.ONE:
            nf = one_sided_normal_form(g)
            if nf is None:
                return False
            mu, nu = self.word(nf[0]), self.word(nf[1])
            if p.read(len(mu)) != mu:
                return False
            rest = p.right.drop(len(mu))
            return self.presentation.admits_prefix(nu, Point(rest))
        if not g:
            return True
        if is_positive(g):
            w = self.word(g)
            return p.window(0, len(w)) == w
        if is_positive(invert(g)):
            w = self.word(invert(g))
            return p.window(-len(w), 0) == w
        return False

    def apply(self, g, p: Point) -> Optional[Point]:
        """theta_g(p) for p in D_{g^-1}; None outside the domain.

        Raises ``Undecided`` when membership cannot be settled.
        """
        if self.side == Side.ONE:
            nf = one_sided_normal_form(g)
            if nf is None:
                return None
            mu, nu = self.word(nf[0]), self.word(nf[1])
            if p.read(len(nu)) != nu:
                return None
            rest = Point(p.right.drop(len(nu)))
            ok = self.presentation.admits_prefix(mu, rest)
            if ok is None:
                raise Undecided(g, p)
            return prepend(rest, mu) if ok else None
        member = self.in_domain(invert(g), p)
        if not member:
            return None
        return shift_by(p, -degree(g))

    def equal(self, p: Point, q: Point) -> Equality:
        return point_equal(p, q, self.presentation.depth)


class Undecided(RuntimeError):
    def __init__(self, g, p):
        super().__init__(f"membership undecided for {g!r} at {p}")
        self.g, self.p = g, p


def in_domain(handle: PartialAction, g, p: Point) -> Optional[bool]:
    return handle.in_domain(g, p)


def apply(handle: PartialAction, g, p: Point) -> Optional[Point]:
    return handle.apply(g, p)


# --------------------------------------------------------------- axioms

def _try(fn, *args):
    try:
        return fn(*args), True
    except Undecided:
        return None, False


def check_partial_action_axioms(handle: PartialAction, group_sample: Iterable, point_sample: Iterable,
                                max_counterexamples: int = 20) -> Report:
    """Check theta_e = id, theta_h(D_i) = D_h & D_hi and theta_h theta_i = theta_hi.

    Membership in theta_h(D_i) is decided through theta_{h^-1}; the right
    side through the closed-form domains.  Undecided instances are counted
    and excluded.
    """
    group = list(group_sample)
    points = list(point_sample)
    rep = Report("axioms", params={"group_size": len(group), "points": len(points),
                                   "presentation": repr(handle.presentation)})
    timer = Timer()
    tallies = {name: [0, 0] for name in ("identity", "domain", "composition")}

    def fail(name, detail):
        if len(rep.counterexamples) < max_counterexamples:
            rep.counterexamples.append({"identity": name, **detail})
        rep.failures += 1

    for p in points:
        tallies["identity"][0] += 1
        q, ok = _try(handle.apply, IDENTITY, p)
        if ok and handle.in_domain(IDENTITY, p) is True and q is not None and handle.equal(q, p) == Equality.EQUAL:
            tallies["identity"][1] += 1
        elif ok:
            fail("identity", {"point": str(p)})

    inv = {h: invert(h) for h in group}
    for h in group:
        for i in group:
            hi = multiply(h, i)
            ii = inv[i]
            iihh = multiply(ii, inv[h])
            for p in points:
                # (b) p in theta_h(D_i)  <=>  p in D_h and p in D_hi
                tallies["domain"][0] += 1
                in_h = handle.in_domain(h, p)
                in_hi = handle.in_domain(hi, p)
                back, ok = _try(handle.apply, inv[h], p)
                if in_h is None or in_hi is None or not ok:
                    pass
                else:
                    if in_h:
                        if back is None:
                            fail("domain", {"h": handle.show(h), "i": handle.show(i), "point": str(p),
                                            "reason": "theta_h^-1 undefined on D_h"})
                            continue
                        lhs = handle.in_domain(i, back)
                    else:
                        lhs = False
                    if lhs is None:
                        pass
                    else:
                        tallies["domain"][1] += 1
                        if lhs != (in_h and in_hi):
                            fail("domain", {"h": handle.show(h), "i": handle.show(i), "point": str(p),
                                            "lhs": lhs, "rhs": bool(in_h and in_hi)})
                # (c) composition on D_{i^-1} & D_{i^-1 h^-1}
                tallies["composition"][0] += 1
                a = handle.in_domain(ii, p)
                b = handle.in_domain(iihh, p)
                if a is None or b is None:
                    continue
                if not (a and b):
                    tallies["composition"][1] += 1
                    continue
                step, ok1 = _try(handle.apply, i, p)
                two = None
                ok2 = ok1
                if ok1 and step is not None:
                    two, ok2 = _try(handle.apply, h, step)
                one, ok3 = _try(handle.apply, hi, p)
                if not (ok1 and ok2 and ok3):
                    continue
                tallies["composition"][1] += 1
                if two is None or one is None or handle.equal(two, one) != Equality.EQUAL:
                    fail("composition", {"h": handle.show(h), "i": handle.show(i), "point": str(p),
                                         "lhs": str(two), "rhs": str(one)})
    for name, (total, decided) in tallies.items():
        rep.coverage[name] = decided / total if total else 1.0
    rep.timings_ms["total"] = timer.ms()
    rep.finish()
    return rep


def check_disjointness(handle: PartialAction, max_length: int, point_sample: Iterable) -> Report:
    """No sampled point lies in D_mu & D_nu for mu != nu of equal length."""
    from .free_group import positive_words

    pres = handle.presentation
    points = list(point_sample)
    rep = Report("disjointness", params={"max_length": max_length, "points": len(points)})
    timer = Timer()
    pairs = 0
    n = len(pres.alphabet)
    for length in range(1, max_length + 1):
        words = list(positive_words(n, length))
        for a in range(len(words)):
            for b in range(a + 1, len(words)):
                pairs += 1
                for p in points:
                    if handle.in_domain(words[a], p) and handle.in_domain(words[b], p):
                        rep.counterexamples.append({"mu": handle.show(words[a]), "nu": handle.show(words[b]),
                                                    "point": str(p)})
                        rep.failures += 1
    rep.params["pairs"] = pairs
    rep.coverage["disjointness"] = 1.0
    rep.timings_ms["total"] = timer.ms()
    rep.finish()
    return rep
