"""The Boolean algebra generated by the domains, one resolution at a time.

A resolution (k, l) partitions a one-sided shift into atoms: points agree
when they share the first k symbols and the tails after position k have
the same length-l predecessor sets.  Each atom is found from witness words
(a prefix of length k followed by enough tail to decide predecessor sets),
so every predicate used below is evaluated on witnesses, and an atom whose
witnesses disagree is reported instead of silently merged.

Two-sided shifts use cylinders z[-l, k) as atoms.  A cylinder is stored as
an :class:`Atom` whose ``preds`` is the singleton holding the left window,
which makes the one-sided to two-sided map of the ideals module a
relabelling.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from .free_group import ReducedWord, format_word, invert, multiply, one_sided_normal_form, reduce
from .partial_action import PartialAction
from .report import Report, Timer
from .shift_space import InputError, Point, PredecessorSet, Side, prepend, shift


@dataclass(frozen=True, order=True)
class Resolution:
    k: int
    l: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise InputError("resolution entries must be nonnegative")

    def __iter__(self):
        return iter((self.k, self.l))

    def __str__(self):
        return f"({self.k},{self.l})"


def as_resolution(r) -> Resolution:
    return r if isinstance(r, Resolution) else Resolution(*r)


def precedes(r1, r2, side=Side.ONE) -> bool:
    r1, r2 = as_resolution(r1), as_resolution(r2)
    if side == Side.TWO:
        return r1.k <= r2.k and r1.l <= r2.l
    return r1.k <= r2.k and r1.l - r1.k <= r2.l - r2.k


def join_resolutions(r1, r2, side=Side.ONE) -> Resolution:
    r1, r2 = as_resolution(r1), as_resolution(r2)
    if side == Side.TWO:
        return Resolution(max(r1.k, r2.k), max(r1.l, r2.l))
    k = max(r1.k, r2.k)
    return Resolution(k, max(r1.l - r1.k, r2.l - r2.k) + k)


@dataclass(frozen=True)
class Atom:
    prefix: str
    preds: PredecessorSet

    def label(self) -> str:
        return f"({self.prefix or 'e'},{self.preds})"


class ResolutionTooCoarse(RuntimeError):
    pass


class SymbolicSet:
    """A finite union of atoms at one resolution."""

    __slots__ = ("algebra", "resolution", "atoms")
    __hash__ = None

    def __init__(self, algebra: "BooleanAlgebra", resolution, atoms: Iterable[Atom]):
        self.algebra = algebra
        self.resolution = as_resolution(resolution)
        self.atoms = frozenset(atoms)

    @property
    def side(self) -> Side:
        return self.algebra.side

    def refine(self, r) -> "SymbolicSet":
        return self.algebra.refine(self, r)

    def _pair(self, other: "SymbolicSet"):
        if other.algebra is not self.algebra:
            raise InputError("sets belong to different systems")
        r = join_resolutions(self.resolution, other.resolution, self.side)
        return self.refine(r), other.refine(r), r

    def __and__(self, other):
        a, b, r = self._pair(other)
        return SymbolicSet(self.algebra, r, a.atoms & b.atoms)

    def __or__(self, other):
        a, b, r = self._pair(other)
        return SymbolicSet(self.algebra, r, a.atoms | b.atoms)

    def __sub__(self, other):
        a, b, r = self._pair(other)
        return SymbolicSet(self.algebra, r, a.atoms - b.atoms)

    def __invert__(self):
        return SymbolicSet(self.algebra, self.resolution, self.algebra.atoms(self.resolution) - self.atoms)

    def __eq__(self, other):
        if not isinstance(other, SymbolicSet):
            return NotImplemented
        a, b, _ = self._pair(other)
        return a.atoms == b.atoms

    def __le__(self, other):
        a, b, _ = self._pair(other)
        return a.atoms <= b.atoms

    def is_empty(self) -> bool:
        return not self.atoms

    def is_full(self) -> bool:
        return self.atoms == self.algebra.atoms(self.resolution)

    def contains(self, p: Point) -> bool:
        return self.algebra.atom_of(p, self.resolution) in self.atoms

    def __len__(self):
        return len(self.atoms)

    def __repr__(self):
        labels = sorted(a.label() for a in self.atoms)
        return f"SymbolicSet{self.resolution}[{', '.join(labels)}]"


def meet(a: SymbolicSet, b: SymbolicSet) -> SymbolicSet:
    return a & b


def join(a: SymbolicSet, b: SymbolicSet) -> SymbolicSet:
    return a | b


def complement(a: SymbolicSet) -> SymbolicSet:
    return ~a


class BooleanAlgebra:
    """Atoms, domains and the action at finite resolutions for one handle."""

    def __init__(self, handle: PartialAction, max_bumps: int = 3):
        self.handle = handle
        self.pres = handle.presentation
        self.side = handle.side
        self.max_bumps = max_bumps
        self._tables: Dict[Resolution, Dict[Atom, list]] = {}
        self._atomsets: Dict[Resolution, FrozenSet[Atom]] = {}
        self.flags: List[str] = []
        if self.side == Side.ONE and not self.pres.exact:
            self.flags.append(f"word-level predecessor sets at margin {self.pres.margin}")

    # ------------------------------------------------------------- atoms
    def _tail_len(self) -> int:
        w = self.pres.tail_window
        return 0 if w is None else w

    def key(self, witness, r: Resolution) -> Atom:
        k, l = r
        if self.side == Side.TWO:
            return Atom(witness[l:l + k], PredecessorSet(l, frozenset({witness[:l]}), l))
        if isinstance(witness, Point):
            return Atom(witness.read(k), self.pres.predecessors(l, Point(witness.right.drop(k))))
        if self.pres.kind == "substitution":
            return Atom(witness[:k], self.pres.tail_predecessors(l, witness[k:]))
        W = self._tail_len()
        return Atom(witness[:k], self.pres.predecessors(l, witness[k:k + W]))

    def _witnesses(self, r: Resolution):
        k, l = r
        if self.side == Side.TWO:
            return self.pres.factors(l + k)
        if self.pres.kind == "points":
            return self._orbit_points()
        return self.pres.factors(k + self._tail_len())

    def _orbit_points(self):
        return [_periodic_point(per[s:] + per[:s]) for per in self.pres.periods for s in range(len(per))]

    def _sharpen(self, w, r: Resolution):
        """Substitution witnesses with ambiguous tails, made unambiguous.

        The window is lengthened in every admissible way; a long window that
        is still ambiguous is read as the left special branch point.
        """
        if self.pres.kind != "substitution" or len(self.pres.word_predecessors(r.l, w[r.k:])) < 2:
            return [w]
        n = r.k + 4 * self.pres.margin
        longer = sorted(v for v in self.pres.factors(n) if v.startswith(w))
        return [v[:r.k] + self.pres.resolve_tail(r.l, v[r.k:]) for v in longer]

    def table(self, r) -> Dict[Atom, list]:
        r = as_resolution(r)
        got = self._tables.get(r)
        if got is None:
            got = {}
            for w in sorted(self._witnesses(r), key=str):
                for v in self._sharpen(w, r):
                    got.setdefault(self.key(v, r), []).append(v)
            self._tables[r] = got
            self._atomsets[r] = frozenset(got)
        return got

    def atoms(self, r) -> FrozenSet[Atom]:
        r = as_resolution(r)
        if r not in self._atomsets:
            self.table(r)
        return self._atomsets[r]

    def atom_of(self, p: Point, r) -> Atom:
        r = as_resolution(r)
        k, l = r
        if self.side == Side.TWO:
            return Atom(p.window(0, k), PredecessorSet(l, frozenset({p.window(-l, 0)}), l))
        return Atom(p.read(k), self.pres.predecessors(l, Point(p.right.drop(k))))

    def full(self, r) -> SymbolicSet:
        return SymbolicSet(self, r, self.atoms(r))

    def empty(self, r=(0, 0)) -> SymbolicSet:
        return SymbolicSet(self, r, ())

    def make(self, r, atoms) -> SymbolicSet:
        r = as_resolution(r)
        atoms = frozenset(atoms)
        if not atoms <= self.atoms(r):
            raise InputError("atoms not realizable at this resolution")
        return SymbolicSet(self, r, atoms)

    # ---------------------------------------------------- witness predicates
    def _select(self, r: Resolution, pred: Callable) -> SymbolicSet:
        keep = []
        for atom, ws in self.table(r).items():
            vals = {bool(pred(w)) for w in ws}
            if len(vals) > 1:
                raise ResolutionTooCoarse(f"witnesses of {atom.label()} disagree at {r}")
            if vals.pop():
                keep.append(atom)
        return SymbolicSet(self, r, keep)

    def _select_auto(self, r: Resolution, pred: Callable) -> SymbolicSet:
        for bump in range(self.max_bumps + 1):
            try:
                return self._select(Resolution(r.k + bump, r.l + bump), pred)
            except ResolutionTooCoarse as exc:
                last = exc
        self.flags.append(str(last))
        raise last

    def refine(self, A: SymbolicSet, r) -> SymbolicSet:
        r = as_resolution(r)
        if r == A.resolution:
            return A
        if self.side == Side.TWO and not precedes(A.resolution, r, self.side):
            raise InputError(f"cannot refine {A.resolution} to {r}")
        # the order is sufficient; otherwise the witnesses must prove refinement
        try:
            return self._select(r, lambda w: self._coarse(w, r, A.resolution) in A.atoms)
        except ResolutionTooCoarse as exc:
            raise InputError(f"{r} does not refine {A.resolution}") from exc

    def _coarse(self, w, r: Resolution, coarse: Resolution) -> Atom:
        if self.side == Side.TWO:
            dl = r.l - coarse.l
            return self.key(w[dl:dl + coarse.l + coarse.k], coarse)
        return self.key(w, coarse)

    # ------------------------------------------------------------ domains
    def _w_in_domain(self, g, w) -> bool:
        if isinstance(w, Point):
            return bool(self.handle.in_domain(g, w))
        nf = one_sided_normal_form(g)
        if nf is None:
            return False
        mu, nu = self.pres.word(nf[0]), self.pres.word(nf[1])
        return w.startswith(mu) and self.pres.is_factor(nu + w[len(mu):])

    def domain_set(self, g, r=None) -> SymbolicSet:
        """D_g at the coarsest resolution that decides it (joined with r)."""
        r = as_resolution(r) if r is not None else None

        def at(base):
            return as_resolution(base) if r is None else join_resolutions(r, base, self.side)

        if self.side == Side.TWO:
            if not g:
                return self.full(at((0, 0)))
            if all(e == 1 for _, e in g):
                mu = self.pres.word(g)
                rr = at((len(mu), 0))
                return SymbolicSet(self, rr, [a for a in self.atoms(rr) if a.prefix.startswith(mu)])
            if all(e == -1 for _, e in g):
                mu = self.pres.word(invert(g))
                rr = at((0, len(mu)))
                keep = [a for a in self.atoms(rr) if next(iter(a.preds.blocks)).endswith(mu)]
                return SymbolicSet(self, rr, keep)
            return self.empty(at((0, 0)))
        nf = one_sided_normal_form(g)
        if nf is None:
            return self.empty(at((0, 0)))
        rr = at((len(nf[0]), len(nf[1])))
        return self._select_auto(rr, lambda w: self._w_in_domain(g, w))

    # --------------------------------------------------------------- action
    def act(self, g, A: SymbolicSet) -> SymbolicSet:
        """theta_g(A), composed letter by letter from the right."""
        for letter in reversed(tuple(g)):
            A = self._act_letter(letter, A)
        return A

    def _act_letter(self, letter, A: SymbolicSet) -> SymbolicSet:
        sym, sign = letter
        a = self.pres.alphabet[sym]
        k, l = A.resolution
        if self.side == Side.TWO:
            if sign == 1:
                if l == 0:
                    A = A.refine((k, 1))
                    l = 1
                out = []
                for atom in A.atoms:
                    u = next(iter(atom.preds.blocks))
                    if u[-1] == a:
                        out.append(Atom(a + atom.prefix, PredecessorSet(l - 1, frozenset({u[:-1]}), l - 1)))
                return SymbolicSet(self, (k + 1, l - 1), out)
            if k == 0:
                A = A.refine((1, l))
                k = 1
            out = []
            for atom in A.atoms:
                if atom.prefix[0] == a:
                    u = next(iter(atom.preds.blocks))
                    out.append(Atom(atom.prefix[1:], PredecessorSet(l + 1, frozenset({u + a}), l + 1)))
            return SymbolicSet(self, (k - 1, l + 1), out)
        if sign == 1:
            r2 = Resolution(k + 1, l)

            def pred(w):
                if isinstance(w, Point):
                    return w.read(1) == a and self.atom_of(shift(w), A.resolution) in A.atoms
                return w[0] == a and self.key(w[1:], A.resolution) in A.atoms
        else:
            # a x is a point iff a x[:k] is a length-(k+1) predecessor of the tail
            r2 = Resolution(k, max(l, k) + 1)

            def pred(w):
                if isinstance(w, Point):
                    if not self.pres.admits_prefix(a, w):
                        return False
                    return self.atom_of(prepend(w, a), A.resolution) in A.atoms
                v = a + w
                if not self.pres.is_factor(v):
                    return False
                return self.key(v, A.resolution) in A.atoms
        return self._select_auto(r2, pred)

    def cylinder(self, mu: str, nu: str, r=None) -> SymbolicSet:
        """The set of x starting with nu whose tail after nu admits mu in front."""
        if self.side != Side.ONE:
            raise InputError("cylinders C(mu, nu) live on one-sided shifts")
        m, n = self.pres.letters(mu), self.pres.letters(nu)
        via_action = self.act(n, self.domain_set(invert(m), r))
        via_domains = self.domain_set(n, r) & self.domain_set(multiply(n, invert(m)), r)
        if via_action != via_domains:
            raise AssertionError(f"cylinder formulas disagree for ({mu},{nu})")
        return via_action

    def generators(self, r) -> Dict[str, ReducedWord]:
        """Group elements whose domains are unions of atoms at r."""
        r = as_resolution(r)
        out = {}
        if self.side == Side.TWO:
            for n in range(0, r.k + 1):
                for w in sorted(self.pres.factors(n)):
                    g = self.pres.letters(w)
                    out.setdefault(format_word(g, self.pres.alphabet), g)
            for n in range(1, r.l + 1):
                for w in sorted(self.pres.factors(n)):
                    g = invert(self.pres.letters(w))
                    out.setdefault(format_word(g, self.pres.alphabet), g)
            return out
        for n in range(0, r.k + 1):
            for w in sorted(self.pres.factors(n)):
                for j in range(0, r.l - r.k + n + 1):
                    for u in sorted(self.pres.factors(j)):
                        g = multiply(self.pres.letters(w), invert(self.pres.letters(u)))
                        out.setdefault(format_word(g, self.pres.alphabet), g)
        return out


def _periodic_point(period: str) -> Point:
    from .shift_space import ev_periodic

    return ev_periodic("", period)


# ------------------------------------------------------------ module spellings

def atoms(algebra: BooleanAlgebra, r) -> FrozenSet[Atom]:
    return algebra.atoms(r)


def refine(A: SymbolicSet, r) -> SymbolicSet:
    return A.refine(r)


def domain_set(algebra: BooleanAlgebra, g, r=None) -> SymbolicSet:
    return algebra.domain_set(g, r)


def act(algebra: BooleanAlgebra, g, A: SymbolicSet) -> SymbolicSet:
    return algebra.act(g, A)


def cylinder(algebra: BooleanAlgebra, mu: str, nu: str, r=None) -> SymbolicSet:
    return algebra.cylinder(mu, nu, r)


# ----------------------------------------------------------------- Stone dual

class StoneDualView:
    """Atoms at r read as two-valued homomorphisms on the unions of atoms."""

    def __init__(self, algebra: BooleanAlgebra, r):
        self.algebra = algebra
        self.resolution = as_resolution(r)
        self.points = sorted(algebra.atoms(self.resolution), key=lambda a: a.label())
        self.generators = {name: algebra.domain_set(g) for name, g in algebra.generators(self.resolution).items()}
        self.generators = {n: s.refine(self.resolution) if precedes(s.resolution, self.resolution, algebra.side) else None
                           for n, s in self.generators.items()}
        self.generators = {n: s for n, s in self.generators.items() if s is not None}

    def evaluate(self, point: Atom, A: SymbolicSet) -> int:
        A = A.refine(self.resolution)
        return int(point in A.atoms)

    def hat(self, A: SymbolicSet) -> FrozenSet[Atom]:
        A = A.refine(self.resolution)
        return frozenset(p for p in self.points if p in A.atoms)

    def signature(self, point: Atom) -> Tuple[int, ...]:
        return tuple(int(point in s.atoms) for _, s in sorted(self.generators.items()))

    def separating(self, p: Atom, q: Atom) -> List[str]:
        return [n for n, s in sorted(self.generators.items()) if (p in s.atoms) != (q in s.atoms)]

    def check_separation(self) -> Report:
        rep = Report("stone-separation", params={"resolution": str(self.resolution), "points": len(self.points),
                                                 "generators": len(self.generators)})
        timer = Timer()
        pairs = 0
        for p, q in itertools.combinations(self.points, 2):
            pairs += 1
            if not self.separating(p, q):
                rep.counterexamples.append({"p": p.label(), "q": q.label()})
        rep.coverage["pairs"] = 1.0
        rep.details["pairs"] = pairs
        rep.timings_ms["total"] = timer.ms()
        return rep.finish()

    def check_iso(self, samples: int = 50, seed: int = 0) -> Report:
        """Evaluation is a Boolean isomorphism onto all subsets of the dual."""
        alg = self.algebra
        r = self.resolution
        rep = Report("stone-iso", params={"resolution": str(r), "samples": samples, "seed": seed})
        timer = Timer()
        # every dual point is a meet of generators and their complements
        full = alg.full(r)
        for p in self.points:
            expr = full
            for name, s in sorted(self.generators.items()):
                expr = expr & (s if p in s.atoms else ~s)
            if self.hat(expr) != frozenset({p}):
                rep.counterexamples.append({"point": p.label(), "generated": sorted(a.label() for a in self.hat(expr))})
        # homomorphism and injectivity on random elements
        rng = np.random.default_rng(seed)
        pts = self.points
        seen = {}
        for _ in range(samples):
            A = alg.make(r, [p for p in pts if rng.random() < 0.5])
            B = alg.make(r, [p for p in pts if rng.random() < 0.5])
            ha, hb = self.hat(A), self.hat(B)
            checks = {
                "meet": self.hat(A & B) == ha & hb,
                "join": self.hat(A | B) == ha | hb,
                "complement": self.hat(~A) == frozenset(pts) - ha,
            }
            for name, ok in checks.items():
                if not ok:
                    rep.counterexamples.append({"law": name, "A": repr(A), "B": repr(B)})
            prior = seen.get(ha)
            if prior is not None and prior != A.atoms:
                rep.counterexamples.append({"law": "injective", "A": repr(A)})
            seen[ha] = A.atoms
        if self.hat(alg.empty(r)) or self.hat(full) != frozenset(pts):
            rep.counterexamples.append({"law": "bounds"})
        rep.coverage["points"] = 1.0
        rep.timings_ms["total"] = timer.ms()
        return rep.finish()

    def to_dot(self) -> str:
        alg = self.algebra
        lines = ["digraph stone_dual {", f'  label="dual at {self.resolution}";']
        ids = {p: f"p{i}" for i, p in enumerate(self.points)}
        for p, i in ids.items():
            lines.append(f'  {i} [label="{p.label()}"];')
        # arrows p -> q when q meets theta_a of the atom p
        for a in range(len(alg.pres.alphabet)):
            g = reduce([(a, 1)])
            for p in self.points:
                img = alg.act(g, alg.make(self.resolution, [p]))
                for q in self.points:
                    if not (img & alg.make(self.resolution, [q])).is_empty():
                        lines.append(f'  {ids[p]} -> {ids[q]} [label="{alg.pres.alphabet[a]}"];')
        lines.append("}")
        return "\n".join(lines)


def stone_dual(algebra: BooleanAlgebra, r) -> StoneDualView:
    return StoneDualView(algebra, r)


def refinement_tree_dot(algebra: BooleanAlgebra, coarse, fine) -> str:
    coarse, fine = as_resolution(coarse), as_resolution(fine)
    lines = ["digraph refinement {"]
    ids = {}
    for level, r in (("c", coarse), ("f", fine)):
        for i, a in enumerate(sorted(algebra.atoms(r), key=lambda x: x.label())):
            ids[(level, a)] = f"{level}{i}"
            lines.append(f'  {level}{i} [label="{a.label()} @ {r}"];')
    for a in sorted(algebra.atoms(coarse), key=lambda x: x.label()):
        for b in algebra.make(coarse, [a]).refine(fine).atoms:
            lines.append(f"  {ids[('c', a)]} -> {ids[('f', b)]};")
    lines.append("}")
    return "\n".join(lines)


# -------------------------------------------------------------------- modsat

def _poly_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = m1 + m2
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def _poly_add(p, q, sign=1):
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, 0) + sign * c
    return {m: c for m, c in out.items() if c}


def modsat_subsets(n: int) -> List[Tuple[int, ...]]:
    return [E for size in range(1, n + 1) for E in itertools.combinations(range(n), size)]


class ModsatChecker:
    """1 - x_1...x_n against the sum over nonempty E of the mixed products.

    Products keep index order, so the symbolic check is valid in any unital
    ring, commutative or not.
    """

    def __init__(self, n: int):
        if n < 1:
            raise InputError("n must be positive")
        self.n = n
        self.subsets = modsat_subsets(n)

    def symbolic(self) -> bool:
        one = {(): 1}
        lhs = one
        prod = one
        for i in range(self.n):
            prod = _poly_mul(prod, {(i,): 1})
        lhs = _poly_add(one, prod, -1)
        rhs = {}
        for E in self.subsets:
            term = one
            for i in range(self.n):
                factor = _poly_add(one, {(i,): 1}, -1) if i in E else {(i,): 1}
                term = _poly_mul(term, factor)
            rhs = _poly_add(rhs, term)
        return lhs == rhs

    def on_sets(self, sets: Sequence[SymbolicSet]) -> bool:
        if len(sets) != self.n:
            raise InputError("need one set per variable")
        alg = sets[0].algebra
        r = sets[0].resolution
        for s in sets[1:]:
            r = join_resolutions(r, s.resolution, alg.side)
        xs = [s.refine(r) for s in sets]
        full = alg.full(r)
        prod = full
        for x in xs:
            prod = prod & x
        lhs = ~prod
        terms = []
        for E in self.subsets:
            t = full
            for i, x in enumerate(xs):
                t = t & (~x if i in E else x)
            terms.append(t.atoms)
        disjoint = sum(len(t) for t in terms) == len(frozenset().union(*terms))
        return disjoint and frozenset().union(*terms) == lhs.atoms

    def on_matrices(self, mats: Sequence[np.ndarray]) -> bool:
        I = np.eye(mats[0].shape[0], dtype=np.int64)
        prod = I.copy()
        for m in mats:
            prod = prod @ m
        lhs = I - prod
        rhs = np.zeros_like(I)
        for E in self.subsets:
            t = I.copy()
            for i, m in enumerate(mats):
                t = t @ ((I - m) if i in E else m)
            rhs = rhs + t
        return bool(np.array_equal(lhs, rhs))


def modsat_expand(n: int) -> ModsatChecker:
    return ModsatChecker(n)


def check_modsat(algebra: BooleanAlgebra, max_n: int = 5, instances: int = 200, seed: int = 0,
                 r=(2, 2), size: int = 8) -> Report:
    rep = Report("modsat", params={"max_n": max_n, "instances": instances, "seed": seed,
                                   "resolution": str(as_resolution(r)), "matrix_size": size})
    timer = Timer()
    rng = np.random.default_rng(seed)
    pts = sorted(algebra.atoms(r), key=lambda a: a.label())
    for n in range(1, max_n + 1):
        chk = ModsatChecker(n)
        if not chk.symbolic():
            rep.counterexamples.append({"n": n, "instantiation": "symbolic"})
        for t in range(instances):
            sets = [algebra.make(r, [p for p in pts if rng.random() < 0.5]) for _ in range(n)]
            if not chk.on_sets(sets):
                rep.counterexamples.append({"n": n, "instantiation": "sets", "instance": t})
            mats = [np.diag(rng.integers(0, 2, size)).astype(np.int64) for _ in range(n)]
            if not chk.on_matrices(mats):
                rep.counterexamples.append({"n": n, "instantiation": "matrices", "instance": t})
        rep.coverage[f"n={n}"] = 1.0
    rep.timings_ms["total"] = timer.ms()
    return rep.finish()
