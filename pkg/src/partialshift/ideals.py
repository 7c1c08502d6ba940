"""Ideal-structure toolkit: admissible cores, invariant lattices, property
(*) and (**), left special elements, the map psi and matrix units.

Invariant admissible sets are open in the atom topology but need not be
finite unions of atoms (for the upper-triangular SFT the set of points
containing ``b`` misses the single point a^inf, which no atom isolates).
They are therefore represented by their r-cores: a union U of atoms at r
stands for the invariant hull of U, and U is a lattice member exactly when
it is the r-core of its own hull.  Hulls are computed by iterating
V -> V | sigma(V) | sigma^-1(V) until the r-cores stop changing.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .boolean_algebra import (Atom, BooleanAlgebra, Resolution, SymbolicSet, as_resolution, join_resolutions,
                              precedes)
from .free_group import IDENTITY, ReducedWord, format_word, invert, multiply, positive_word
from .partial_action import PartialAction
from .report import FAIL, Report, Timer
from .shift_space import InputError, Periodic, Point, Side, Tail

# ----------------------------------------------------------------- helpers


def _algebra(obj) -> BooleanAlgebra:
    if isinstance(obj, BooleanAlgebra):
        return obj
    if isinstance(obj, PartialAction):
        return BooleanAlgebra(obj)
    raise InputError("expected a PartialAction handle or a BooleanAlgebra")


def _letters(algebra: BooleanAlgebra) -> List[ReducedWord]:
    return [positive_word([i]) for i in range(len(algebra.pres.alphabet))]


def _fine_map(algebra: BooleanAlgebra, r: Resolution, R: Resolution) -> Dict[Atom, FrozenSet[Atom]]:
    """Each atom at r as the set of atoms at the finer resolution R inside it."""
    out: Dict[Atom, set] = {a: set() for a in algebra.atoms(r)}
    for fine, ws in algebra.table(R).items():
        for w in ws:
            out[algebra._coarse(w, R, r)].add(fine)
    return {a: frozenset(s) for a, s in out.items()}


def _core_atoms(fine_of: Dict[Atom, FrozenSet[Atom]], fine: FrozenSet[Atom]) -> FrozenSet[Atom]:
    return frozenset(a for a, f in fine_of.items() if f and f <= fine)


def _step(algebra: BooleanAlgebra, V: SymbolicSet) -> SymbolicSet:
    if V.is_empty():
        return V
    out = V
    for g in _letters(algebra):
        out = out | algebra.act(g, V) | algebra.act(invert(g), V)
    return out


def admissible_core(handle, Y, r) -> SymbolicSet:
    """Union of the atoms at r contained in Y.

    ``Y`` may be a SymbolicSet (exact), a predicate on atoms
    ``f(atom, algebra, r) -> bool``, or a finite collection of points.  For a
    finite collection an atom is kept only if it provably has at most
    ``len(Y)`` points and every point found in it lies in Y; atoms whose
    word count outgrows ``len(Y)`` within the horizon are rejected.
    """
    algebra = _algebra(handle)
    r = as_resolution(r)
    if isinstance(Y, SymbolicSet):
        R = join_resolutions(r, Y.resolution, algebra.side)
        fine_of = _fine_map(algebra, r, R)
        return SymbolicSet(algebra, r, _core_atoms(fine_of, Y.refine(R).atoms))
    if callable(Y):
        return SymbolicSet(algebra, r, [a for a in algebra.atoms(r) if Y(a, algebra, r)])
    pts = list(Y)
    keep = [a for a in algebra.atoms(r) if _atom_inside_points(algebra, a, r, pts)]
    return SymbolicSet(algebra, r, keep)


def _atom_inside_points(algebra: BooleanAlgebra, atom: Atom, r: Resolution, pts: Sequence[Point],
                        horizon: int = 8) -> bool:
    single = SymbolicSet(algebra, r, [atom])
    if not any(single.contains(p) for p in pts):
        return False
    for n in range(1, horizon + 1):
        R = Resolution(r.k + n, r.l + n)
        prefixes = {a.prefix for a in single.refine(R).atoms}
        if len(prefixes) > len(pts):
            return False
        if not all(any(p.read(R.k) == w for p in pts) for w in prefixes):
            return False
    return True


# ----------------------------------------------------------- the lattice

@dataclass
class InvariantSetCertificate:
    """An r-core U together with the hull it stands for and its checks."""

    set: SymbolicSet
    hull: SymbolicSet
    checks: Dict[str, bool] = field(default_factory=dict)

    def reverify(self) -> Dict[str, bool]:
        algebra = self.set.algebra
        r = self.set.resolution
        U = self.set
        grown = _step(algebra, self.hull)
        R = join_resolutions(r, grown.resolution, algebra.side)
        fine_of = _fine_map(algebra, r, R)
        out = {}
        for name, inv in (("sigma", True), ("sigma_inverse", False)):
            img = algebra.empty(self.hull.resolution)
            for g in _letters(algebra):
                img = img | algebra.act(invert(g) if inv else g, self.hull)
            core = _core_atoms(fine_of, img.refine(R).atoms) if not img.is_empty() else frozenset()
            out[name] = core <= U.atoms
        out["admissible"] = U <= self.hull
        out["core_fixed"] = _core_atoms(fine_of, self.hull.refine(R).atoms) == U.atoms
        self.checks = out
        return out


@dataclass
class IdealLattice:
    resolution: Resolution
    members: List[SymbolicSet]
    certificates: List[InvariantSetCertificate]
    steps: int
    hull_resolution: Resolution
    generated: List[FrozenSet[Atom]]

    def __len__(self):
        return len(self.members)

    def index_of(self, U: SymbolicSet) -> int:
        for i, m in enumerate(self.members):
            if m == U:
                return i
        raise KeyError(str(U))

    def covers(self) -> List[Tuple[int, int]]:
        """Hasse edges (i, j) with members[i] < members[j] and nothing between."""
        n = len(self.members)
        below = [[i != j and self.members[i].atoms < self.members[j].atoms for j in range(n)] for i in range(n)]
        edges = []
        for i in range(n):
            for j in range(n):
                if below[i][j] and not any(below[i][t] and below[t][j] for t in range(n)):
                    edges.append((i, j))
        return edges

    def to_dot(self) -> str:
        lines = ["digraph ideals {", "  rankdir=BT;"]
        for i, m in enumerate(self.members):
            label = "empty" if m.is_empty() else ("full" if m.is_full() else f"{len(m)} atoms")
            lines.append(f'  n{i} [label="{label}"];')
        for i, j in self.covers():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines)


def _hulls(algebra: BooleanAlgebra, r: Resolution, max_steps: int):
    """Per-atom hulls iterated until every atom's r-core is stable."""
    atoms = sorted(algebra.atoms(r), key=lambda a: a.label())
    cur = {a: SymbolicSet(algebra, r, [a]) for a in atoms}
    prev_cores = None
    for step in range(1, max_steps + 1):
        cur = {a: _step(algebra, V) for a, V in cur.items()}
        R = r
        for V in cur.values():
            R = join_resolutions(R, V.resolution, algebra.side)
        fine = {a: V.refine(R).atoms for a, V in cur.items()}
        fine_of = _fine_map(algebra, r, R)
        cores = {a: _core_atoms(fine_of, f) for a, f in fine.items()}
        if cores == prev_cores:
            return cur, fine, fine_of, R, step, True
        prev_cores = cores
    return cur, fine, fine_of, R, max_steps, False


def invariant_admissible_sets(handle, r=(3, 3), max_steps: int = 6) -> IdealLattice:
    """All r-cores of invariant admissible sets, ordered by inclusion."""
    algebra = _algebra(handle)
    r = as_resolution(r)
    hull_sets, fine, fine_of, R, steps, stable = _hulls(algebra, r, max_steps)
    if not stable:
        algebra.flags.append(f"hull cores not stable after {max_steps} steps at {r}")

    def closure(U: FrozenSet[Atom]) -> FrozenSet[Atom]:
        f = frozenset().union(*(fine[a] for a in U)) if U else frozenset()
        return _core_atoms(fine_of, f) | U

    seen = {closure(frozenset())}
    queue = list(seen)
    all_atoms = algebra.atoms(r)
    while queue:
        C = queue.pop()
        for a in all_atoms - C:
            D = closure(C | {a})
            if D not in seen:
                seen.add(D)
                queue.append(D)
    members = sorted(seen, key=lambda s: (len(s), sorted(x.label() for x in s)))
    sets, certs, generated = [], [], []
    for U in members:
        S = SymbolicSet(algebra, r, U)
        f = frozenset().union(*(fine[a] for a in U)) if U else frozenset()
        hull = SymbolicSet(algebra, R, f)
        cert = InvariantSetCertificate(S, hull)
        sets.append(S)
        certs.append(cert)
        generated.append(f)
    return IdealLattice(r, sets, certs, steps, R, generated)


def check_lattice(lattice: IdealLattice, refine_check: bool = True, max_steps: int = 6) -> Report:
    """Certificates, order preservation, round trip and refinement stability."""
    rep = Report("ideal_lattice", params={"resolution": list(lattice.resolution), "members": len(lattice),
                                           "hull_steps": lattice.steps,
                                           "hull_resolution": list(lattice.hull_resolution)})
    timer = Timer()
    if not lattice.members:
        raise InputError("empty lattice")
    algebra = lattice.members[0].algebra
    r = lattice.resolution
    fine_of = _fine_map(algebra, r, lattice.hull_resolution)
    for i, (U, cert) in enumerate(zip(lattice.members, lattice.certificates)):
        checks = cert.reverify()
        for name, ok in checks.items():
            if not ok:
                rep.failures += 1
                rep.counterexamples.append({"member": i, "check": name, "set": str(U)})
        # round trip: the r-core of the generated family gives U back
        back = _core_atoms(fine_of, lattice.generated[i])
        if back != U.atoms:
            rep.failures += 1
            rep.counterexamples.append({"member": i, "check": "round_trip", "set": str(U)})
        if admissible_core(algebra, U, r) != U:
            rep.failures += 1
            rep.counterexamples.append({"member": i, "check": "core_fixed_point", "set": str(U)})
    n = len(lattice)
    pairs = 0
    for i in range(n):
        for j in range(n):
            Ui, Uj = lattice.members[i].atoms, lattice.members[j].atoms
            Fi, Fj = lattice.generated[i], lattice.generated[j]
            pairs += 1
            if Ui <= Uj and not Fi <= Fj:
                rep.failures += 1
                rep.counterexamples.append({"check": "order_preservation", "pair": [i, j]})
            if i != j and Fi == Fj:
                rep.failures += 1
                rep.counterexamples.append({"check": "injectivity", "pair": [i, j]})
    rep.details["pairs_checked"] = pairs
    rep.details["members"] = [str(m) for m in lattice.members]
    if refine_check:
        r2 = Resolution(r.k + 1, r.l + 1)
        finer = invariant_admissible_sets(algebra, r2, max_steps)
        fmap = _fine_map(algebra, r, r2)
        images = [_core_atoms(fmap, m.atoms) for m in finer.members]
        target = [m.atoms for m in lattice.members]
        bijective = len(finer) == n and len(set(images)) == n and set(images) == set(target)
        rep.details["refined_count"] = len(finer)
        rep.details["refinement_stable"] = bijective
        if not bijective:
            rep.failures += 1
            rep.counterexamples.append({"check": "refinement_stability", "at": list(r2), "count": len(finer),
                                        "expected": n})
    rep.coverage["members"] = 1.0
    rep.timings_ms["total"] = timer.ms()
    return rep.finish()


# --------------------------------------------------------------- quotient

def quotient_report(handle, Y: SymbolicSet, lattice: Optional[IdealLattice] = None, sample_q: int = 3,
                    sample_p: int = 3, radius: Optional[int] = None) -> Report:
    """Set-level shadow of passing to the restricted system on X minus Y."""
    algebra = Y.algebra
    r = Y.resolution
    rep = Report("quotient", params={"resolution": list(r), "Y": str(Y)})
    timer = Timer()
    lattice = lattice or invariant_admissible_sets(algebra, r)
    try:
        idx = lattice.index_of(Y)
    except KeyError:
        raise InputError("Y is not an invariant admissible core at its resolution")
    C = ~Y
    # (ww): traces of generators on the complement generate {A & C}
    gens = algebra.generators(r)
    doms = {}
    for name, g in gens.items():
        D = algebra.domain_set(g)
        if precedes(D.resolution, r, algebra.side):
            doms[name] = D.refine(r)
    sig = {}
    for atom in C.atoms:
        key = tuple(atom in D.atoms for D in doms.values())
        if key in sig:
            rep.failures += 1
            rep.counterexamples.append({"check": "trace_separation", "atoms": [sig[key].label(), atom.label()]})
        sig[key] = atom
    for name, D in doms.items():
        tr = D & C
        if not tr.atoms <= C.atoms:
            rep.failures += 1
            rep.counterexamples.append({"check": "trace_inside_complement", "generator": name})
    rep.details["generators"] = len(doms)
    rep.details["complement_atoms"] = len(C)
    # round trip against the generated family
    fine_of = _fine_map(algebra, r, lattice.hull_resolution)
    if _core_atoms(fine_of, lattice.generated[idx]) != Y.atoms:
        rep.failures += 1
        rep.counterexamples.append({"check": "round_trip"})
    hull = lattice.certificates[idx].hull
    # points of the restricted system among a sample of eventually periodic points
    pres = algebra.pres
    if pres.exact and algebra.side == Side.ONE:
        from .representation import build_basis

        basis = build_basis(algebra.handle, sample_q, sample_p, 0)
        rest = [str(p) for p in basis.points if not hull.contains(p)]
        rep.details["sampled_points"] = len(basis)
        rep.details["restricted_points"] = rest
    rep.coverage["complement_atoms"] = 1.0
    rep.timings_ms["total"] = timer.ms()
    return rep.finish()


# ------------------------------------------------------- left special scan

@dataclass
class Candidate:
    word: str
    extensions: Tuple[str, ...]
    point: Optional[Point]
    periodic: bool
    chain_ok: bool


@dataclass
class SpecialElementLedger:
    depth: int
    counts: List[int]
    stable: bool
    candidates: List[Candidate]
    classes: List[List[int]]
    n_X: Optional[int]
    infinite: Optional[bool] = None
    window: int = 0

    def to_dict(self):
        return {"depth": self.depth, "counts": self.counts, "stable": self.stable, "n_X": self.n_X,
                "infinite": self.infinite, "window": self.window,
                "candidates": [{"word": c.word, "extensions": list(c.extensions), "periodic": c.periodic,
                                "point": str(c.point) if c.point else None, "chain_ok": c.chain_ok}
                               for c in self.candidates],
                "classes": self.classes}


def left_special_factors(pres, n: int) -> Dict[str, Tuple[str, ...]]:
    """Length-n factors with at least two one-letter left extensions."""
    longer = pres.factors(n + 1)
    ext: Dict[str, List[str]] = {}
    for w in longer:
        ext.setdefault(w[1:], []).append(w[0])
    return {w: tuple(sorted(e)) for w, e in ext.items() if len(e) >= 2}


def _eventually_periodic_word(u: str, max_start: int, max_period: int) -> bool:
    n = len(u)
    for s in range(0, max_start + 1):
        for p in range(1, max_period + 1):
            if s + 2 * p > n:
                break
            if all(u[i] == u[i + p] for i in range(s, n - p)):
                return True
    return False


def _sft_left_special_infinite(pres) -> bool:
    """Exact for SFTs: the union of left special cylinders is infinite.

    Walk counts from special states are non-decreasing; they are bounded iff
    they stop growing after |V| steps.
    """
    states = pres._states
    V = len(states)
    if pres.memory == 0:
        return len(pres._allowed) >= 2
    start = np.zeros(V, dtype=np.int64)
    for i, s in enumerate(states):
        if len(pres.pred_words(pres.state_predecessors(1, s))) >= 2:
            start[i] = 1
    if not start.any():
        return False
    counts = kernels.walk_counts(np.ascontiguousarray(pres._adj), start, 2 * V)
    return bool(counts[2 * V] > counts[V])


def left_special_scan(handle, depth: int = 12, extend: int = 4) -> SpecialElementLedger:
    """Count left special factors per length and chain them into candidates."""
    if depth < 1:
        raise InputError("depth must be at least 1")
    pres = handle.presentation if isinstance(handle, PartialAction) else _algebra(handle).pres
    counts = []
    for n in range(1, depth + 1):
        counts.append(len(left_special_factors(pres, n)))
    # stability needs the last third of the scan, and at least three lengths
    tail = counts[depth - max(3, depth // 3):] if depth >= 3 else []
    stable = bool(tail) and len(set(tail)) == 1
    infinite = _sft_left_special_infinite(pres) if pres.is_sft else None
    if infinite:
        stable = False
    if pres.kind == "points":
        infinite = False
    candidates: List[Candidate] = []
    classes: List[List[int]] = []
    n_X = None
    window = 0
    if stable:
        window = extend * depth
        ls = left_special_factors(pres, window)
        base = left_special_factors(pres, depth)
        for w in sorted(ls):
            chain_ok = all(w[:j] in left_special_factors(pres, j) for j in (depth, window // 2)) and w[:depth] in base
            candidates.append(Candidate(w, ls[w], _as_point(pres, w), _eventually_periodic_word(
                w, window // 4, window // 4), chain_ok))
        classes = _tail_classes([c.word for c in candidates])
        n_X = len(classes)
    return SpecialElementLedger(depth, counts, stable, candidates, classes, n_X, infinite, window)


def _as_point(pres, w: str) -> Optional[Point]:
    if pres.kind != "substitution":
        return None
    for c in pres.alphabet:
        try:
            p = pres.fixed_point(c)
        except (InputError, ValueError):
            continue
        if p.read(len(w)) == w:
            return p
    return None


def _tail_classes(words: List[str]) -> List[List[int]]:
    n = len(words)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            u, v = words[i], words[j]
            L = len(u)
            span, shift = L // 2, L // 4
            if any(u[a:a + span] == v[b:b + span] for a in range(shift + 1) for b in range(shift + 1)):
                parent[find(i)] = find(j)
    groups: Dict[int, List[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


# ------------------------------------------------------- properties (*) (**)

def _realizable_pred_sets(pres, l: int):
    """Every P_l(x), exactly, for SFTs and finite point sets."""
    if pres.is_sft:
        states = pres._states if pres.memory else [""]
        return [pres.pred_words(pres.state_predecessors(l, s)) for s in states]
    pts = [Point(Tail("", Periodic(per[s:] + per[:s])).normalized()) for per in pres.periods
           for s in range(len(per))]
    return [pres.pred_words(pres.predecessors(l, p)) for p in pts]


def check_property_star(handle, L: int = 6, bound: Optional[int] = None) -> Report:
    """Every factor mu with |mu| <= L is the unique predecessor of some point."""
    pres = handle.presentation if isinstance(handle, PartialAction) else _algebra(handle).pres
    if L < 1:
        raise InputError("L must be at least 1")
    bound = bound or 2 * pres.margin
    rep = Report("property_star", params={"L": L, "bound": bound, "kind": pres.kind})
    timer = Timer()
    total = decided = 0
    witnesses = {}
    for l in range(1, L + 1):
        words = sorted(pres.factors(l))
        if pres.exact:
            singles = {next(iter(P)) for P in _realizable_pred_sets(pres, l) if len(P) == 1}
            for mu in words:
                total += 1
                decided += 1
                if mu in singles:
                    witnesses[mu] = "exact"
                else:
                    rep.counterexamples.append({"mu": mu, "reason": "no point has this unique predecessor"})
            continue
        for mu in words:
            total += 1
            found = None
            for n in range(1, bound + 1):
                for w in sorted(pres.factors(n)):
                    if pres.word_predecessors(l, w) == frozenset({mu}):
                        found = w
                        break
                if found:
                    break
            if found:
                decided += 1
                witnesses[mu] = found
            else:
                rep.inconclusive = True
                rep.details.setdefault("unresolved", []).append(mu)
    rep.details["witnesses"] = witnesses
    rep.coverage["words"] = decided / total if total else 1.0
    rep.timings_ms["total"] = timer.ms()
    return rep.finish()


def check_property_starstar(handle, depth: int = 12, L: int = 6) -> Report:
    """(*) plus finitely many left special elements, none periodic."""
    pres = handle.presentation if isinstance(handle, PartialAction) else _algebra(handle).pres
    rep = Report("property_starstar", params={"depth": depth, "L": L, "kind": pres.kind})
    timer = Timer()
    star = check_property_star(handle, L)
    rep.merge(star, prefix="star.")
    scan = left_special_scan(handle, depth)
    rep.details["scan"] = scan.to_dict()
    if scan.infinite:
        rep.failures += 1
        rep.counterexamples.append({"reason": "infinitely many left special elements", "counts": scan.counts})
    elif not scan.stable:
        rep.inconclusive = True
        rep.details["unstable_counts"] = scan.counts
    periodic = [c.word for c in scan.candidates if c.periodic]
    if periodic:
        if pres.exact:
            rep.failures += 1
            rep.counterexamples.append({"reason": "periodic left special element", "words": periodic})
        else:
            rep.inconclusive = True
    rep.details["n_X"] = scan.n_X
    rep.timings_ms["total"] = timer.ms()
    return rep.finish()


# ----------------------------------------------------------------- psi

def window_set(algebra: BooleanAlgebra, start: int, word: str) -> SymbolicSet:
    """Two-sided cylinder {z : z[start:start+len(word)] = word}."""
    if algebra.side != Side.TWO:
        raise InputError("window sets live on two-sided shifts")
    stop = start + len(word)
    k, l = max(0, stop), max(0, -start)
    r = Resolution(k, l)
    keep = []
    for a in algebra.atoms(r):
        full = next(iter(a.preds.blocks)) + a.prefix
        if full[start + l:stop + l] == word:
            keep.append(a)
    return SymbolicSet(algebra, r, keep)


class PsiMap:
    """psi from the one-sided Boolean algebra to the two-sided one."""

    def __init__(self, one, two, star_level: Optional[int] = 3):
        self.one = _algebra(one)
        self.two = _algebra(two)
        if self.one.side != Side.ONE or self.two.side != Side.TWO:
            raise InputError("psi needs a one-sided and a two-sided handle")
        if self.one.pres.alphabet != self.two.pres.alphabet:
            raise InputError("handles must share an alphabet")
        self.star = None
        if star_level:
            self.star = check_property_star(self.one.handle, star_level)
            if self.star.verdict == FAIL:
                raise InputError("property (*) fails; psi is not a Boolean homomorphism here")

    def atom_image(self, atom: Atom, r) -> Optional[str]:
        """The window word [min(0, k-l), k) of psi(atom), or None for the empty set."""
        k, l = as_resolution(r)
        pres = self.one.pres
        P = pres.pred_words(atom.preds)
        if len(P) != 1:
            return None
        u = next(iter(P))
        w = atom.prefix
        if l <= k:
            return w if w.endswith(u) else None
        return u if u.endswith(w) else None

    def target_resolution(self, r) -> Resolution:
        k, l = as_resolution(r)
        return Resolution(k, max(0, l - k))

    def __call__(self, A: SymbolicSet) -> SymbolicSet:
        r = A.resolution
        R2 = self.target_resolution(r)
        words = {self.atom_image(a, r) for a in A.atoms} - {None}
        keep = [b for b in self.two.atoms(R2) if next(iter(b.preds.blocks)) + b.prefix in words]
        return SymbolicSet(self.two, R2, keep)

    def literal(self, atom: Atom, r) -> SymbolicSet:
        """psi of one atom straight from the defining condition at level (k, l)."""
        k, l = as_resolution(r)
        R2 = self.target_resolution(r)
        P = self.one.pres.pred_words(atom.preds)
        keep = []
        for b in self.two.atoms(R2):
            v = next(iter(b.preds.blocks)) + b.prefix
            off = len(v) - k
            if v[off:] != atom.prefix:
                continue
            if P == frozenset({v[off + k - l: off + k]}) and off + k - l >= 0:
                keep.append(b)
        return SymbolicSet(self.two, R2, keep)

    def kappa(self, mu: str, nu: str) -> SymbolicSet:
        if nu.endswith(mu):
            return window_set(self.two, 0, nu)
        if mu.endswith(nu):
            return window_set(self.two, len(nu) - len(mu), mu)
        return self.two.empty((0, 0))


def psi(one, two, A: SymbolicSet) -> SymbolicSet:
    return PsiMap(one, two, star_level=None)(A)


def kappa_on_cylinders(two, mu: str, nu: str) -> SymbolicSet:
    """The three-case image of the cylinder C(mu, nu)."""
    algebra = _algebra(two)
    if nu.endswith(mu):
        return window_set(algebra, 0, nu)
    if mu.endswith(nu):
        return window_set(algebra, len(nu) - len(mu), mu)
    return algebra.empty((0, 0))


def check_psi(one, two, max_resolution=(3, 3), pairs: int = 100, kappa_pairs: int = 50, seed: int = 0) -> Report:
    """Homomorphism, equivariance, kernel and kappa checks for psi."""
    P = PsiMap(one, two)
    K, L = as_resolution(max_resolution)
    rep = Report("psi", params={"max_resolution": [K, L], "pairs": pairs, "kappa_pairs": kappa_pairs, "seed": seed})
    timer = Timer()
    rng = random.Random(seed)
    A1, A2 = P.one, P.two
    letters = _letters(A1)
    tallies = {k: 0 for k in ("atoms", "kernel", "literal", "pairs", "equivariance", "kappa", "full")}

    def fail(check, **ctx):
        rep.failures += 1
        if len(rep.counterexamples) < 20:
            rep.counterexamples.append({"check": check, **ctx})

    pool: List[SymbolicSet] = []
    for k in range(K + 1):
        for l in range(L + 1):
            r = Resolution(k, l)
            atoms = sorted(A1.atoms(r), key=lambda a: a.label())
            images = []
            for a in atoms:
                single = SymbolicSet(A1, r, [a])
                img = P(single)
                tallies["atoms"] += 1
                singleton = A1.pres.pred_count(a.preds) == 1
                tallies["kernel"] += 1
                if img.is_empty() == singleton:
                    fail("kernel", atom=a.label(), resolution=[k, l])
                tallies["literal"] += 1
                if img != P.literal(a, r):
                    fail("literal", atom=a.label(), resolution=[k, l])
                images.append(img)
            for i in range(len(images)):
                for j in range(i + 1, len(images)):
                    if not (images[i] & images[j]).is_empty():
                        fail("disjoint_images", resolution=[k, l], atoms=[atoms[i].label(), atoms[j].label()])
            tallies["full"] += 1
            if not P(A1.full(r)).is_full():
                fail("full_to_full", resolution=[k, l])
            for _ in range(3):
                pool.append(SymbolicSet(A1, r, [a for a in atoms if rng.random() < 0.5]))
    for _ in range(pairs):
        A, B = rng.choice(pool), rng.choice(pool)
        tallies["pairs"] += 1
        pa, pb = P(A), P(B)
        if P(A & B) != (pa & pb):
            fail("meet", A=str(A), B=str(B))
        if P(A | B) != (pa | pb):
            fail("join", A=str(A), B=str(B))
        if P(~A) != ~pa:
            fail("complement", A=str(A))
        for g in letters:
            for h in (g, invert(g)):
                tallies["equivariance"] += 1
                if P(A1.act(h, A)) != A2.act(h, pa):
                    fail("equivariance", g=format_word(h, A1.pres.alphabet), A=str(A))
    words = [w for n in range(0, 4) for w in ("".join(t) for t in itertools.product(A1.pres.alphabet, repeat=n))]
    for _ in range(kappa_pairs):
        mu, nu = rng.choice(words), rng.choice(words)
        tallies["kappa"] += 1
        lhs = P.kappa(mu, nu)
        rhs = P(A1.cylinder(mu, nu))
        if lhs != rhs:
            fail("kappa", mu=mu or "e", nu=nu or "e", kappa=str(lhs), psi=str(rhs))
    rep.details["tallies"] = tallies
    rep.coverage["checks"] = 1.0
    rep.timings_ms["total"] = timer.ms()
    return rep.finish()


def faa_shadow(handle, ledger: SpecialElementLedger, max_resolution=(3, 3)) -> Report:
    """Atoms with several predecessors only hold tails of left special candidates."""
    algebra = _algebra(handle)
    pres = algebra.pres
    K, L = as_resolution(max_resolution)
    rep = Report("faa_shadow", params={"max_resolution": [K, L]})
    timer = Timer()
    cand = [c.word for c in ledger.candidates]
    counts = {}
    for k in range(K + 1):
        for l in range(L + 1):
            r = Resolution(k, l)
            n = 0
            for atom, ws in algebra.table(r).items():
                Pw = pres.pred_words(atom.preds)
                if len(Pw) < 2:
                    continue
                n += 1
                for w in ws:
                    t = w[k:] if isinstance(w, str) else w.right.drop(k).read(ledger.window // 2)
                    ok = False
                    for j in range(0, l):
                        for v in {p[l - j:] for p in Pw}:
                            if any(c.startswith(v + t) or (v + t).startswith(c) for c in cand):
                                ok = True
                                break
                        if ok:
                            break
                    if not ok:
                        rep.failures += 1
                        if len(rep.counterexamples) < 20:
                            rep.counterexamples.append({"atom": atom.label(), "resolution": [k, l],
                                                        "tail": t})
            counts[f"{k},{l}"] = n
    rep.details["multi_predecessor_atoms"] = counts
    rep.coverage["atoms"] = 1.0
    rep.timings_ms["total"] = timer.ms()
    return rep.finish()


# ------------------------------------------------------------ matrix units

@dataclass(frozen=True)
class MatrixUnit:
    x: Point
    y: Point
    n: int
    m: int
    g: ReducedWord


@dataclass
class MatrixUnitSystem:
    class_id: int
    points: List[Point]
    units: Dict[Tuple[int, int], MatrixUnit]
    singletons: Dict[int, dict]

    def unit(self, i: int, j: int) -> MatrixUnit:
        return self.units[(i, j)]


def splice_exponents(x: Point, y: Point, bound: int = 24) -> List[Tuple[int, int]]:
    """All (n, m) with n, m <= bound and x[n:] = y[m:]."""
    out = []
    for n in range(bound + 1):
        tx = x.right.drop(n)
        for m in range(bound + 1):
            if tx == y.right.drop(m):
                out.append((n, m))
    return out


def _apply_unit(handle: PartialAction, u: MatrixUnit, z: Point, adjoint: bool = False) -> Optional[Point]:
    src, dst, g = (u.x, u.y, invert(u.g)) if adjoint else (u.y, u.x, u.g)
    if z != src:
        return None
    img = handle.apply(g, z)
    return img if img == dst else None


def singleton_isomorphism(handle, candidate: Candidate, kmax: int = 12, horizon: Optional[int] = None):
    """Smallest K with {y : a u y, b u y in X} a single point, u = candidate[:K].

    Checked at word level: for every length up to ``horizon`` exactly one
    word t has both a u t and b u t in the language.
    """
    pres = handle.presentation
    horizon = horizon or pres.margin
    a, b = candidate.extensions[:2]
    for K in range(0, kmax + 1):
        u = candidate.word[:K]
        ok = True
        for n in range(1, horizon + 1):
            hits = [t for t in pres.factors(n) if pres.is_factor(a + u + t) and pres.is_factor(b + u + t)]
            if len(hits) != 1 or not candidate.word[K:].startswith(hits[0]):
                ok = False
                break
        if ok:
            return K, a, b
    return None


def singleton_set(algebra: BooleanAlgebra, x: Point, base: Point, K: int, a: str, b: str, prefix: str,
                  n: int) -> SymbolicSet:
    """{x} for x = prefix + sigma^n(base), built from D_{(a u)^-1} & D_{(b u)^-1}."""
    pres = algebra.pres
    if n < K:
        prefix = prefix + base.read(K)[n:]
        n = K
    u = base.read(n)
    S = algebra.domain_set(invert(pres.letters(a + u))) & algebra.domain_set(invert(pres.letters(b + u)))
    return algebra.act(pres.letters(prefix), S) if prefix else S


def matrix_units(handle: PartialAction, ledger: SpecialElementLedger, samples: Sequence[Tuple[str, int]] = (
        ("", 0), ("", 1), ("", 2), ("b", 0), ("a", 1)), class_id: int = 0, kmax: int = 12, bound: int = 24,
                 algebra: Optional[BooleanAlgebra] = None):
    """Matrix units on sampled points prefix + sigma^n(candidate) of one tail class.

    Returns the system and a report covering the adjoint law, the product
    law with orthogonality, splice well-definedness and e_{x,x} = Lambda({x}).
    """
    pres = handle.presentation
    if not ledger.candidates:
        raise InputError("no left special candidates")
    members = ledger.classes[class_id]
    cand = ledger.candidates[members[0]]
    if cand.point is None:
        raise InputError("candidate has no closed-form point")
    algebra = algebra or BooleanAlgebra(handle)
    rep = Report("matrix_units", params={"class": class_id, "samples": [list(s) for s in samples], "kmax": kmax})
    timer = Timer()
    f = cand.point
    pts, specs = [], []
    for prefix, n in samples:
        p = Point(f.right.drop(n).prepend(prefix))
        if pres.contains(p) is False:
            raise InputError(f"sample {prefix}+sigma^{n} is not a point of the shift")
        if p not in pts:
            pts.append(p)
            specs.append((prefix, n))
    if len(pts) < 3:
        raise InputError("need at least three distinct sample points")

    def fail(check, **ctx):
        rep.failures += 1
        if len(rep.counterexamples) < 20:
            rep.counterexamples.append({"check": check, **ctx})

    units = {}
    for i, x in enumerate(pts):
        for j, y in enumerate(pts):
            sp = splice_exponents(x, y, bound)
            if not sp:
                rep.inconclusive = True
                rep.details.setdefault("no_splice", []).append([i, j])
                continue
            diffs = {n - m for n, m in sp}
            gs = {multiply(pres.letters(x.read(n)), invert(pres.letters(y.read(m)))) for n, m in sp}
            if len(diffs) != 1 or len(gs) != 1:
                fail("splice_well_defined", pair=[i, j], exponents=sp[:6])
            n, m = sp[0]
            units[(i, j)] = MatrixUnit(x, y, n, m, gs.pop())
    iso = singleton_isomorphism(handle, cand, kmax)
    singletons = {}
    if iso is None:
        rep.inconclusive = True
        rep.details["singleton_iso"] = f"no singleton witness with K <= {kmax}"
    else:
        K, a, b = iso
        rep.details["singleton_iso"] = {"K": K, "letters": [a, b]}
        for i, (x, (prefix, n)) in enumerate(zip(pts, specs)):
            S = singleton_set(algebra, x, f, K, a, b, prefix, n)
            hits = [j for j, z in enumerate(pts) if S.contains(z)]
            singletons[i] = {"set": str(S), "contains": hits}
            if hits != [i]:
                fail("singleton", point=str(x), contains=hits)
    # e_{x,x} = Lambda({x})
    for i in range(len(pts)):
        u = units.get((i, i))
        if u is None:
            continue
        if u.g != IDENTITY:
            fail("diagonal_reduces", point=str(pts[i]), word=format_word(u.g, pres.alphabet))
    vectors = pts
    # adjoint law
    for (i, j), u in units.items():
        v = units.get((j, i))
        if v is None:
            continue
        for z in vectors:
            if _apply_unit(handle, u, z, adjoint=True) != _apply_unit(handle, v, z):
                fail("adjoint", pair=[i, j], vector=str(z))
    # product law and orthogonality
    for (i, j), u in units.items():
        for (j2, l), v in units.items():
            target = units.get((i, l)) if j == j2 else None
            for z in vectors:
                mid = _apply_unit(handle, v, z)
                lhs = _apply_unit(handle, u, mid) if mid is not None else None
                rhs = _apply_unit(handle, target, z) if target is not None else None
                if lhs != rhs:
                    fail("product", pair=[[i, j], [j2, l]], vector=str(z))
    rep.details["points"] = [str(p) for p in pts]
    rep.details["units"] = {f"{i},{j}": {"n": u.n, "m": u.m, "word": format_word(u.g, pres.alphabet)}
                            for (i, j), u in units.items()}
    rep.coverage["pairs"] = len(units) / (len(pts) ** 2)
    rep.timings_ms["total"] = timer.ms()
    system = MatrixUnitSystem(class_id, pts, units, singletons)
    return system, rep.finish()
