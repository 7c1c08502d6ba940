"""Partial isometries S_g on a finite truncation of l2(X).

The basis is a finite set of eventually periodic points.  ``S_g`` sends
``e_x`` to ``e_{theta_g(x)}`` when x lies in D_{g^-1} and to 0 otherwise, so
every operator is a partial injection on basis indices and products,
adjoints and projections are exact integer map operations.

Truncation is honest: the basis is an ambient closure (preperiod up to
``q + d``) around a core (preperiod up to ``q``).  An image that leaves the
ambient set is recorded as ``OUT``; identities are only asserted on core
vectors where neither side hit ``OUT``, and the fraction of such vectors is
reported as coverage.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import kernels
from .boolean_algebra import BooleanAlgebra
from .free_group import (IDENTITY, ball, degree, invert, multiply, one_sided_normal_form, positive_word,
                         positive_words)
from .kernels import OUT, ZERO
from .partial_action import PartialAction
from .report import Report, Timer
from .shift_space import (InputError, Point, Side, _primitive_root, ev_periodic, shift_by,
                          two_sided_periodic)


# ------------------------------------------------------------------ basis

@dataclass
class FiniteBasis:
    handle: PartialAction
    points: Tuple[Point, ...]
    core: int
    q: int
    p: int
    d: int
    index: Dict[Point, int] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {pt: i for i, pt in enumerate(self.points)}
        if len(self.index) != len(self.points):
            raise InputError("basis points must be pairwise distinct")

    def __len__(self):
        return len(self.points)

    @property
    def core_points(self) -> Tuple[Point, ...]:
        return self.points[: self.core]

    def find(self, pt: Optional[Point]) -> int:
        if pt is None:
            return ZERO
        return self.index.get(pt, OUT)


def _cyclic_words(pres, p: int) -> List[str]:
    """Primitive words w, one per rotation class, with w^inf in the shift."""
    seen, out = set(), []
    for n in range(1, p + 1):
        for tup in itertools.product(pres.alphabet, repeat=n):
            w = "".join(tup)
            if _primitive_root(w) != w:
                continue
            canon = min(w[i:] + w[:i] for i in range(n))
            if canon in seen:
                continue
            seen.add(canon)
            if pres.contains(ev_periodic("", canon) if pres.side == Side.ONE else two_sided_periodic(canon)):
                out.append(canon)
    return out


def build_basis(handle: PartialAction, q: int, p: int, d: int = 4) -> FiniteBasis:
    """All eventually periodic points with preperiod <= q + d and period <= p.

    The first ``core`` points (preperiod <= q) carry the verified identities;
    the remaining ``d`` layers absorb prepended letters.  Two-sided bases are
    the periodic orbits, which are closed under the shift in both directions.
    """
    pres = handle.presentation
    if not pres.exact:
        raise InputError("substitution shifts have no eventually periodic points to truncate on")
    if min(q, p, d) < 0 or p < 1:
        raise InputError("need q, d >= 0 and p >= 1")
    cyc = _cyclic_words(pres, p)
    if handle.side == Side.TWO:
        pts = []
        for w in cyc:
            for i in range(len(w)):
                pts.append(two_sided_periodic(w[i:] + w[:i]))
        return FiniteBasis(handle, tuple(pts), len(pts), q, p, d)
    layer = []
    seen = set()
    for w in cyc:
        for i in range(len(w)):
            pt = ev_periodic("", w[i:] + w[:i])
            if pt not in seen:
                seen.add(pt)
                layer.append(pt)
    layers = [layer]
    for _ in range(q + d):
        nxt = []
        for pt in layers[-1]:
            for c in pres.alphabet:
                if pres.admits_prefix(c, pt):
                    new = Point(pt.right.prepend(c))
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
        layers.append(nxt)
    core = sum(len(x) for x in layers[: q + 1])
    pts = tuple(pt for lay in layers for pt in lay)
    return FiniteBasis(handle, pts, core, q, p, d)


# -------------------------------------------------------------- operators

@dataclass(frozen=True)
class PartialIsometryOp:
    """A partial injection: ``fwd[j]`` is the image index of e_j (or a marker)."""

    fwd: np.ndarray
    bwd: np.ndarray
    label: str = ""

    @property
    def adjoint(self) -> "PartialIsometryOp":
        return PartialIsometryOp(self.bwd, self.fwd, f"({self.label})*")

    def __matmul__(self, other: "PartialIsometryOp") -> "PartialIsometryOp":
        return PartialIsometryOp(kernels.compose(self.fwd, other.fwd), kernels.compose(other.bwd, self.bwd),
                                 f"{self.label}{other.label}")

    @property
    def guard(self) -> np.ndarray:
        return np.flatnonzero(self.fwd != OUT)

    @property
    def mapping(self) -> Dict[int, int]:
        return {int(j): int(v) for j, v in enumerate(self.fwd) if v >= 0}

    def is_injective(self) -> bool:
        hit = self.fwd[self.fwd >= 0]
        return len(np.unique(hit)) == len(hit)

    def is_empty(self) -> bool:
        return not bool((self.fwd >= 0).any())


@dataclass(frozen=True)
class DiagonalProjection:
    """Projection onto span{e_j : j in support}; ``unknown`` marks OUT entries."""

    support: np.ndarray
    unknown: np.ndarray

    @classmethod
    def of(cls, op: PartialIsometryOp) -> "DiagonalProjection":
        idx = np.arange(len(op.fwd))
        if ((op.fwd >= 0) & (op.fwd != idx)).any():
            raise ValueError("operator is not diagonal")
        return cls(op.fwd >= 0, op.fwd == OUT)

    def as_op(self) -> PartialIsometryOp:
        fwd = np.where(self.support, np.arange(len(self.support)), ZERO)
        fwd = np.where(self.unknown, OUT, fwd).astype(np.int64)
        return PartialIsometryOp(fwd, fwd.copy(), "p")

    def complement(self) -> "DiagonalProjection":
        return DiagonalProjection(~self.support & ~self.unknown, self.unknown.copy())

    def __and__(self, other):
        return DiagonalProjection(self.support & other.support,
                                  (self.unknown | other.unknown) & ~(self.is_zero() | other.is_zero()))

    def is_zero(self) -> np.ndarray:
        return ~self.support & ~self.unknown


def identity_op(n: int) -> PartialIsometryOp:
    a = np.arange(n, dtype=np.int64)
    return PartialIsometryOp(a, a.copy(), "1")


class OperatorFamily:
    """Lazily computed S_g over one basis."""

    def __init__(self, basis: FiniteBasis):
        self.basis = basis
        self.handle = basis.handle
        self._ops: Dict[tuple, PartialIsometryOp] = {}

    def __call__(self, g) -> PartialIsometryOp:
        g = tuple(g)
        if g not in self._ops:
            self._ops[g] = operator_of(self.basis, self.handle, g)
        return self._ops[g]

    def word(self, w: str) -> PartialIsometryOp:
        return self(self.handle.letters(w))


def operator_of(basis: FiniteBasis, handle: Optional[PartialAction], g) -> PartialIsometryOp:
    """S_g as a partial injection; the adjoint is built by inversion, not by theta_{g^-1}."""
    handle = handle or basis.handle
    n = len(basis)
    fwd = np.full(n, ZERO, dtype=np.int64)
    for j, pt in enumerate(basis.points):
        fwd[j] = basis.find(handle.apply(g, pt))
    bwd = np.full(n, ZERO, dtype=np.int64)
    hit = fwd >= 0
    if len(np.unique(fwd[hit])) != int(hit.sum()):
        raise AssertionError(f"S_{handle.show(g)} is not injective on the basis")
    bwd[fwd[hit]] = np.flatnonzero(hit)
    for i, pt in enumerate(basis.points):
        if bwd[i] == ZERO and handle.in_domain(g, pt):
            bwd[i] = OUT
    return PartialIsometryOp(fwd, bwd, handle.show(g))


def domain_projection(basis: FiniteBasis, g) -> DiagonalProjection:
    sup = np.array([bool(basis.handle.in_domain(g, pt)) for pt in basis.points], dtype=bool)
    return DiagonalProjection(sup, np.zeros(len(basis), dtype=bool))


# ------------------------------------------------------------ bookkeeping

class _Tally:
    """Per-identity coverage and counterexample collection."""

    def __init__(self, rep: Report, basis: FiniteBasis, limit: int = 20):
        self.rep, self.basis, self.limit = rep, basis, limit
        self.counts: Dict[str, List[int]] = {}

    def compare(self, name: str, lhs: np.ndarray, rhs: np.ndarray, **ctx):
        """Compare two maps on core vectors where neither side left the basis."""
        c = self.basis.core
        left, right = lhs[:c], rhs[:c]
        ok = (left != OUT) & (right != OUT)
        bad = ok & (left != right)
        tot = self.counts.setdefault(name, [0, 0])
        tot[0] += c
        tot[1] += int(ok.sum())
        for j in np.flatnonzero(bad):
            self.fail(name, point=str(self.basis.points[j]), lhs=self._show(left[j]), rhs=self._show(right[j]), **ctx)

    def check(self, name: str, ok: bool, **ctx):
        tot = self.counts.setdefault(name, [0, 0])
        tot[0] += 1
        tot[1] += 1
        if not ok:
            self.fail(name, **ctx)

    def fail(self, name, **ctx):
        self.rep.failures += 1
        if len(self.rep.counterexamples) < self.limit:
            self.rep.counterexamples.append({"identity": name, **ctx})

    def _show(self, v):
        v = int(v)
        return "0" if v == ZERO else str(self.basis.points[v])

    def close(self, timer: Timer) -> Report:
        for name, (tot, dec) in self.counts.items():
            self.rep.coverage[name] = dec / tot if tot else 1.0
        self.rep.timings_ms["total"] = timer.ms()
        return self.rep.finish()


def _report(suite: str, basis: FiniteBasis, floor: float, **params) -> Report:
    base = {"basis_size": len(basis), "core": basis.core, "q": basis.q, "p": basis.p, "d": basis.d,
            "presentation": repr(basis.handle.presentation)}
    base.update(params)
    return Report(suite, params=base, coverage_floor=floor)


def _name(handle, *gs):
    return {f"g{i}": handle.show(g) for i, g in enumerate(gs)}


# -------------------------------------------------------------- Def. suite

def verify_definition_relations(basis: FiniteBasis, handle: Optional[PartialAction] = None, radius: int = 2,
                                coverage_floor: float = 0.9, family: Optional[OperatorFamily] = None) -> Report:
    """Partial isometries with commuting ranges, s_e = 1, s_{g^-1} = s_g*,
    s_h s_i = s_h s_h* s_{hi}, and D_g -> s_g s_g* against domain membership."""
    handle = handle or basis.handle
    S = family or OperatorFamily(basis)
    rep = _report("definition", basis, coverage_floor, radius=radius)
    t = _Tally(rep, basis)
    timer = Timer()
    G = ball(len(handle.alphabet), radius)
    one = identity_op(len(basis))
    t.compare("s_e=1", S(IDENTITY).fwd, one.fwd)
    for g in G:
        s = S(g)
        t.check("injective", s.is_injective(), **_name(handle, g))
        t.compare("partial_isometry", (s @ s.adjoint @ s).fwd, s.fwd, **_name(handle, g))
        t.compare("s_g^-1=s_g*", S(invert(g)).fwd, s.adjoint.fwd, **_name(handle, g))
        t.compare("range_projection", (s @ s.adjoint).fwd, domain_projection(basis, g).as_op().fwd,
                  **_name(handle, g))
    for h in G:
        sh = S(h)
        ph = sh @ sh.adjoint
        for i in G:
            si = S(i)
            pi = si @ si.adjoint
            t.compare("commuting_ranges", (ph @ pi).fwd, (pi @ ph).fwd, **_name(handle, h, i))
            t.compare("s_h s_i=s_h s_h* s_hi", (sh @ si).fwd, (ph @ S(multiply(h, i))).fwd, **_name(handle, h, i))
    return t.close(timer)


# ----------------------------------------------------------- three axiom sets

def verify_appendix_axiom_sets(basis: FiniteBasis, handle: Optional[PartialAction] = None, radius: int = 2,
                               coverage_floor: float = 0.9, family: Optional[OperatorFamily] = None) -> Report:
    """The three equivalent axiom sets for a partial representation."""
    handle = handle or basis.handle
    S = family or OperatorFamily(basis)
    G = ball(len(handle.alphabet), radius)
    one = identity_op(len(basis)).fwd
    timer = Timer()
    subs = {}

    # set 1: u(e)=1, u(g^-1)=u(g)*, u(h)u(i)u(i^-1) = u(hi)u(i^-1)
    rep = _report("axioms:inverse_form", basis, coverage_floor, radius=radius)
    t = _Tally(rep, basis)
    t.compare("u(e)=1", S(IDENTITY).fwd, one)
    for g in G:
        t.compare("u(g^-1)=u(g)*", S(invert(g)).fwd, S(g).adjoint.fwd, **_name(handle, g))
    for h in G:
        for i in G:
            ii = S(invert(i))
            t.compare("u(h)u(i)u(i^-1)=u(hi)u(i^-1)", (S(h) @ S(i) @ ii).fwd, (S(multiply(h, i)) @ ii).fwd,
                      **_name(handle, h, i))
    subs["inverse_form"] = t.close(Timer())

    # set 2
    rep = _report("axioms:range_form", basis, coverage_floor, radius=radius)
    t = _Tally(rep, basis)
    for g in G:
        s = S(g)
        t.compare("partial_isometry", (s @ s.adjoint @ s).fwd, s.fwd, **_name(handle, g))
        t.compare("u(g)*u(g)=u(g^-1)u(g^-1)*", (s.adjoint @ s).fwd,
                  (S(invert(g)) @ S(invert(g)).adjoint).fwd, **_name(handle, g))
    e = S(IDENTITY)
    t.compare("u(e)u(e)*=1", (e @ e.adjoint).fwd, one)
    for h in G:
        sh = S(h)
        for i in G:
            si = S(i)
            t.compare("commuting_ranges", (sh @ sh.adjoint @ si @ si.adjoint).fwd,
                      (si @ si.adjoint @ sh @ sh.adjoint).fwd, **_name(handle, h, i))
            t.compare("u(h)u(i)u(i)*u(h)*=u(h)u(i)u(hi)*", (sh @ si @ si.adjoint @ sh.adjoint).fwd,
                      (sh @ si @ S(multiply(h, i)).adjoint).fwd, **_name(handle, h, i))
    subs["range_form"] = t.close(Timer())

    # set 3
    rep = _report("axioms:product_form", basis, coverage_floor, radius=radius)
    t = _Tally(rep, basis)
    t.compare("u(e)=1", S(IDENTITY).fwd, one)
    for g in G:
        s = S(g)
        t.compare("partial_isometry", (s @ s.adjoint @ s).fwd, s.fwd, **_name(handle, g))
        t.compare("u(g)*=u(g^-1)", s.adjoint.fwd, S(invert(g)).fwd, **_name(handle, g))
    for h in G:
        sh = S(h)
        for i in G:
            si = S(i)
            t.compare("commuting_ranges", (sh @ sh.adjoint @ si @ si.adjoint).fwd,
                      (si @ si.adjoint @ sh @ sh.adjoint).fwd, **_name(handle, h, i))
            t.compare("u(h)u(i)=u(h)u(h)*u(hi)", (sh @ si).fwd, (sh @ sh.adjoint @ S(multiply(h, i))).fwd,
                      **_name(handle, h, i))
    subs["product_form"] = t.close(Timer())

    out = _report("appendix_axiom_sets", basis, coverage_floor, radius=radius)
    for name, r in subs.items():
        out.merge(r, prefix=f"{name}.")
    verdicts = {name: r.verdict for name, r in subs.items()}
    out.details["verdicts"] = verdicts
    if len(set(verdicts.values())) != 1:
        out.failures += 1
        out.counterexamples.append({"identity": "equivalence", "verdicts": verdicts})
    out.timings_ms["total"] = timer.ms()
    return out.finish()


# ----------------------------------------------------------- Exel-Laca suite

def _subsets(items):
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)


def verify_ck_relations(matrix, basis: FiniteBasis, also_symbolic: bool = True, max_word: int = 3,
                        coverage_floor: float = 0.9, resolution=None, family: Optional[OperatorFamily] = None
                        ) -> Report:
    """Operator, symbolic and word-level checks of the Exel-Laca relations."""
    handle = basis.handle
    pres = handle.presentation
    A = np.array(matrix, dtype=np.int64)
    alpha = pres.alphabet
    n = len(alpha)
    if A.shape != (n, n) or not set(np.unique(A)) <= {0, 1}:
        raise InputError("matrix must be a square 0/1 matrix over the alphabet")
    if (A.sum(axis=1) == 0).any():
        raise InputError("matrix has a zero row")
    if handle.side != Side.ONE:
        raise InputError("the Exel-Laca suite needs a one-sided shift")
    S = family or OperatorFamily(basis)
    rep = _report("ck", basis, coverage_floor, max_word=max_word, matrix=A.tolist())
    t = _Tally(rep, basis)
    timer = Timer()
    s = {a: S.word(a) for a in alpha}
    src = {a: DiagonalProjection.of(s[a].adjoint @ s[a]) for a in alpha}
    rng = {a: DiagonalProjection.of(s[a] @ s[a].adjoint) for a in alpha}
    N = len(basis)
    algebra = BooleanAlgebra(handle) if also_symbolic else None
    pair_verdicts = []

    for X in _subsets(range(n)):
        for Y in _subsets(range(n)):
            coeff = [int(all(A[x, j] for x in X) and all(1 - A[y, j] for y in Y)) for j in range(n)]
            # operator side
            lhs = DiagonalProjection(np.ones(N, dtype=bool), np.zeros(N, dtype=bool))
            for x in X:
                lhs = lhs & src[alpha[x]]
            for y in Y:
                lhs = lhs & src[alpha[y]].complement()
            total = np.zeros(N, dtype=np.int64)
            unknown = np.zeros(N, dtype=bool)
            for j in range(n):
                if coeff[j]:
                    total += rng[alpha[j]].support
                    unknown |= rng[alpha[j]].unknown
            rhs = DiagonalProjection(total >= 1, unknown & (total == 0))
            label = {"X": "".join(alpha[x] for x in X), "Y": "".join(alpha[y] for y in Y)}
            before = rep.failures
            if (total > 1).any():
                t.fail("diagonal_identity", reason="range projections overlap", **label)
            t.compare("diagonal_identity", lhs.as_op().fwd, rhs.as_op().fwd, **label)
            op_ok = rep.failures == before
            entry = {**label, "operator": op_ok}
            if algebra is not None:
                L = algebra.full((0, 0))
                for x in X:
                    L = L & algebra.domain_set(invert(positive_word([x])))
                for y in Y:
                    L = L & ~algebra.domain_set(invert(positive_word([y])))
                R = algebra.empty()
                for j in range(n):
                    if coeff[j]:
                        R = R | algebra.domain_set(positive_word([j]))
                sym_ok = L == R
                t.check("diagonal_identity_symbolic", sym_ok, **label, lhs=str(L), rhs=str(R))
                entry["symbolic"] = sym_ok
                t.check("diagonal_identity_agreement", sym_ok == op_ok, **label)
            pair_verdicts.append(entry)
    rep.details["pairs"] = pair_verdicts

    for i in range(n):
        for j in range(n):
            si, sj = s[alpha[i]], s[alpha[j]]
            t.compare("source_projections_commute", (src[alpha[i]].as_op() @ src[alpha[j]].as_op()).fwd,
                      (src[alpha[j]].as_op() @ src[alpha[i]].as_op()).fwd, i=alpha[i], j=alpha[j])
            if i != j:
                t.compare("orthogonal_letters", (si.adjoint @ sj).fwd, np.full(N, ZERO), i=alpha[i], j=alpha[j])
            lhs = si.adjoint @ si @ sj
            rhs = sj.fwd if A[i, j] else np.where(sj.fwd == OUT, OUT, ZERO)
            t.compare("source_projection_by_matrix", lhs.fwd, rhs, i=alpha[i], j=alpha[j])

    _ck_word_properties(t, S, handle, A, max_word)
    return t.close(timer)


def _ck_word_properties(t: _Tally, S: OperatorFamily, handle, A, max_word: int):
    n = len(handle.alphabet)
    N = len(t.basis)
    words = [w for L in range(0, max_word + 1) for w in positive_words(n, L)]
    signed = words + [invert(w) for w in words if w]
    zero = np.full(N, ZERO)
    for h in signed:
        for i in signed:
            sh, si = S(h), S(i)
            t.compare("word_projections_commute", (sh.adjoint @ sh @ si.adjoint @ si).fwd, (si.adjoint @ si @ sh.adjoint @ sh).fwd,
                      **_name(handle, h, i))
    for mu in words:
        for nu in words:
            t.compare("word_product", (S(mu) @ S(nu)).fwd, S(multiply(mu, nu)).fwd, **_name(handle, mu, nu))
            if len(mu) == len(nu) and mu != nu:
                t.compare("orthogonal_words", (S(mu).adjoint @ S(nu)).fwd, zero, **_name(handle, mu, nu))
        if mu:
            coeff = all(A[mu[k].symbol, mu[k + 1].symbol] for k in range(len(mu) - 1))
            last = S(mu[-1:])
            rhs = (last.adjoint @ last).fwd
            if not coeff:
                rhs = np.where(rhs == OUT, OUT, ZERO)
            t.compare("word_source_projection", (S(mu).adjoint @ S(mu)).fwd, rhs, **_name(handle, mu))
    for g in ball(n, max_word):
        nf = one_sided_normal_form(g)
        if nf is None:
            t.compare("normal_form_product", S(g).fwd, zero, **_name(handle, g))
        else:
            t.compare("normal_form_product", S(g).fwd, (S(nf[0]) @ S(nf[1]).adjoint).fwd, **_name(handle, g))


# -------------------------------------------------------- crossed product

def verify_crossed_product(handle: PartialAction, basis: FiniteBasis, radius: int = 3) -> Report:
    """U = sum_a S_a is a permutation, S_g = 1_{D_g} U^{deg g} and covariance."""
    if handle.side != Side.TWO:
        raise InputError("the crossed-product suite needs a two-sided shift")
    N = len(basis)
    tau = np.array([basis.find(shift_by(pt, 1)) for pt in basis.points], dtype=np.int64)
    if (tau < 0).any() or len(np.unique(tau)) != N:
        raise InputError("basis is not closed under the shift")
    S = OperatorFamily(basis)
    rep = Report("crossed_product", params={"basis_size": N, "p": basis.p, "radius": radius,
                                            "presentation": repr(handle.presentation)})
    t = _Tally(rep, basis)
    timer = Timer()
    hits = np.zeros(N, dtype=np.int64)
    U = np.full(N, ZERO, dtype=np.int64)
    for a in handle.alphabet:
        f = S.word(a).fwd
        hits += f >= 0
        U = np.where(f >= 0, f, U)
    t.check("U_total", bool((hits == 1).all()), reason="sum of S_a is not defined exactly once per vector")
    t.check("U_permutation", len(np.unique(U)) == N and bool((U >= 0).all()))
    Uinv = np.empty(N, dtype=np.int64)
    Uinv[U] = np.arange(N)

    def power(k):
        out = np.arange(N, dtype=np.int64)
        for _ in range(abs(k)):
            out = kernels.compose(U if k > 0 else Uinv, out)
        return out

    G = ball(len(handle.alphabet), radius)
    for g in G:
        proj = domain_projection(basis, g).as_op().fwd
        rhs = kernels.compose(proj, power(degree(g)))
        t.compare("S_g=1_Dg U^deg", S(g).fwd, rhs, **_name(handle, g))
        # U p_{D_g} U* has support U(D_g); compare against {y : tau(y) in D_g}
        lhs = kernels.compose(U, kernels.compose(proj, Uinv))
        cov = np.array([j if handle.in_domain(g, basis.points[tau[j]]) else ZERO for j in range(N)],
                       dtype=np.int64)
        t.compare("covariance", lhs, cov, **_name(handle, g))
    for h in G:
        for i in G:
            t.compare("degree_additivity", kernels.compose(power(degree(h)), power(degree(i))),
                      power(degree(multiply(h, i))), **_name(handle, h, i))
    return t.close(timer)


# -------------------------------------------------------- lambda and phi

def verify_lambda_phi(handle: PartialAction, basis: FiniteBasis, resolution=(2, 2), samples: int = 20,
                      seed: int = 0, coverage_floor: float = 0.9, algebra: Optional[BooleanAlgebra] = None
                      ) -> Report:
    """S_a* p_A S_a = p_{theta_{a^-1}(A)} and S_a p_A S_a* = p_{theta_a(A)}.

    The set-level images come from the Boolean algebra's action, the
    operator side from basis arithmetic; they are computed independently.
    """
    if handle.side != Side.ONE:
        raise InputError("lambda/phi are defined for one-sided shifts")
    algebra = algebra or BooleanAlgebra(handle)
    S = OperatorFamily(basis)
    rep = _report("lambda_phi", basis, coverage_floor, resolution=list(resolution), samples=samples, seed=seed)
    t = _Tally(rep, basis)
    timer = Timer()
    atoms = algebra.atoms(resolution)
    rnd = random.Random(seed)
    sets = [algebra.full(resolution), algebra.empty(resolution)]
    for a in handle.alphabet:
        sets.append(algebra.domain_set(handle.letters(a)))
    while len(sets) < samples + 2:
        sets.append(algebra.make(resolution, [x for x in atoms if rnd.random() < 0.5]))

    def proj(A):
        sup = np.array([bool(A.contains(pt)) for pt in basis.points], dtype=bool)
        return DiagonalProjection(sup, np.zeros(len(basis), dtype=bool)).as_op()

    for A in sets:
        pA = proj(A)
        for a in handle.alphabet:
            g = handle.letters(a)
            sa = S(g)
            lam = algebra.act(invert(g), A)
            phi = algebra.act(g, A)
            t.compare("lambda", (sa.adjoint @ pA @ sa).fwd, proj(lam).fwd, a=a, A=str(A))
            t.compare("phi", (sa @ pA @ sa.adjoint).fwd, proj(phi).fwd, a=a, A=str(A))
    return t.close(timer)


# ---------------------------------------------------------- vanishing laws

def verify_vanishing(basis: FiniteBasis, radius: int = 2, algebra: Optional[BooleanAlgebra] = None) -> Report:
    """D_g empty forces S_g = 0; D_h & D_i empty forces S_h* S_i = 0."""
    handle = basis.handle
    algebra = algebra or BooleanAlgebra(handle)
    S = OperatorFamily(basis)
    rep = Report("vanishing", params={"radius": radius, "presentation": repr(handle.presentation)})
    t = _Tally(rep, basis)
    timer = Timer()
    G = ball(len(handle.alphabet), radius)
    dom = {g: algebra.domain_set(g) for g in G}
    empties = 0
    for g in G:
        if dom[g].is_empty():
            empties += 1
            t.check("D_g empty => S_g = 0", S(g).is_empty(), **_name(handle, g))
    for h in G:
        for i in G:
            if (dom[h] & dom[i]).is_empty():
                t.check("D_h & D_i empty => S_h* S_i = 0", (S(h).adjoint @ S(i)).is_empty(), **_name(handle, h, i))
    rep.details["empty_domains"] = empties
    return t.close(timer)
