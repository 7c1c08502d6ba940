"""Shift spaces over finite alphabets: presentations, languages, points.

Symbols are single characters and finite words are plain strings.  Five
presentation kinds are supported: the full shift, memory-one matrix SFTs,
SFTs given by forbidden words, substitution shifts and finite sets of
periodic orbits.  Languages of SFTs and finite point sets are decided
exactly; substitution languages come from scanning iterated images and
raise :class:`Inconclusive` when the scan does not saturate.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Optional, Sequence, Tuple, Union

import numpy as np

from . import kernels
from .free_group import ReducedWord, is_positive, positive_word


class InputError(ValueError):
    """Malformed presentation, point or parameter."""


class Inconclusive(RuntimeError):
    """A bounded search ran out before it could decide."""

    def __init__(self, message, depth=None):
        super().__init__(message)
        self.depth = depth


class Side(str, enum.Enum):
    ONE = "one-sided"
    TWO = "two-sided"


class Equality(str, enum.Enum):
    EQUAL = "equal"
    DISTINCT = "distinct"
    UNDECIDED = "undecided"


# ---------------------------------------------------------------- points

def _primitive_root(word: str) -> str:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


@dataclass(frozen=True)
class Periodic:
    period: str

    def __post_init__(self):
        if not self.period:
            raise InputError("period word must be nonempty")

    def at(self, i: int) -> str:
        return self.period[i % len(self.period)]

    def read(self, start: int, n: int) -> str:
        p = len(self.period)
        s = start % p
        reps = (s + n) // p + 1
        return (self.period * reps)[s:s + n]


_FIXED_CACHE: Dict[tuple, str] = {}


def _fixed_point_prefix(rules: tuple, seed: str, reverse: bool, n: int) -> str:
    key = (rules, seed, reverse)
    have = _FIXED_CACHE.get(key)
    if have is not None and len(have) >= n:
        return have
    sub = dict(rules)

    def image(w):
        return "".join(sub[c] for c in w)

    power, w = None, seed
    for p in range(1, len(sub) + 2):
        w = image(w)
        ok = w.endswith(seed) if reverse else w.startswith(seed)
        if ok and len(w) > 1:
            power = p
            break
    if power is None:
        raise InputError(f"seed {seed!r} does not generate a fixed point")
    while len(w) < n:
        for _ in range(power):
            w = image(w)
    out = w[::-1] if reverse else w
    if have is None or len(out) > len(have):
        _FIXED_CACHE[key] = out  # single assignment of a longer prefix
    return out


@dataclass(frozen=True)
class FixedPoint:
    """Fixed point of a power of a substitution grown from ``seed``.

    With ``reverse`` the left-infinite fixed point is read outward, which is
    how left tails of two-sided points are stored.
    """

    rules: Tuple[Tuple[str, str], ...]
    seed: str
    reverse: bool = False

    def read(self, start: int, n: int) -> str:
        return _fixed_point_prefix(self.rules, self.seed, self.reverse, start + n)[start:start + n]

    def at(self, i: int) -> str:
        return self.read(i, 1)


Base = Union[Periodic, FixedPoint]


@dataclass(frozen=True)
class Tail:
    """The sequence ``prefix`` followed by ``base`` read from ``offset``."""

    prefix: str
    base: Base
    offset: int = 0

    def at(self, i: int) -> str:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.base.at(i - len(self.prefix) + self.offset)

    def read(self, n: int) -> str:
        head = self.prefix[:n]
        rest = n - len(head)
        return head + (self.base.read(self.offset, rest) if rest > 0 else "")

    def drop(self, k: int) -> "Tail":
        if k <= len(self.prefix):
            return Tail(self.prefix[k:], self.base, self.offset).normalized()
        return Tail("", self.base, self.offset + k - len(self.prefix)).normalized()

    def prepend(self, word: str) -> "Tail":
        return Tail(word + self.prefix, self.base, self.offset).normalized()

    def normalized(self) -> "Tail":
        prefix, base, offset = self.prefix, self.base, self.offset
        if isinstance(base, Periodic):
            per = _primitive_root(base.period)
            s = offset % len(per)
            per = per[s:] + per[:s]
            while prefix and prefix[-1] == per[-1]:
                prefix, per = prefix[:-1], per[-1] + per[:-1]
            return Tail(prefix, Periodic(per), 0)
        while prefix and offset > 0 and prefix[-1] == base.at(offset - 1):
            prefix, offset = prefix[:-1], offset - 1
        return Tail(prefix, base, offset)

    @property
    def eventually_periodic(self) -> bool:
        return isinstance(self.base, Periodic)


@dataclass(frozen=True)
class Point:
    """A one-sided point (``left is None``) or a two-sided point.

    The left tail of a two-sided point lists ``z_{-1}, z_{-2}, ...``.
    """

    right: Tail
    left: Optional[Tail] = None

    @property
    def side(self) -> Side:
        return Side.ONE if self.left is None else Side.TWO

    def at(self, i: int) -> str:
        if i >= 0:
            return self.right.at(i)
        if self.left is None:
            raise InputError("negative index on a one-sided point")
        return self.left.at(-i - 1)

    def window(self, start: int, stop: int) -> str:
        if stop < start:
            raise InputError("window end before start")
        if start < 0 and self.left is None:
            raise InputError("negative index on a one-sided point")
        if start >= 0:
            return self.right.read(stop)[start:]
        neg = self.left.read(-start)[::-1]
        if stop <= 0:
            return neg[: len(neg) + stop]
        return neg + self.right.read(stop)

    def read(self, n: int) -> str:
        return self.right.read(n)

    def __str__(self):
        def show(t: Tail):
            if isinstance(t.base, Periodic):
                return f"{t.prefix}({t.base.period})^inf"
            return f"{t.prefix}[fix {t.base.seed}+{t.offset}]"

        if self.left is None:
            return show(self.right)
        return f"{show(self.left)}~.{show(self.right)}"


def ev_periodic(preperiod: str, period: str) -> Point:
    return Point(Tail(preperiod, Periodic(period)).normalized())


def two_sided_periodic(period: str) -> Point:
    return Point(Tail("", Periodic(period)).normalized(), Tail("", Periodic(period[::-1])).normalized())


def two_sided_ev_periodic(pre: str, period: str, left_pre: str, left_period: str) -> Point:
    """Right tail ``pre period^inf``; left tail read outward from index -1."""
    return Point(Tail(pre, Periodic(period)).normalized(), Tail(left_pre, Periodic(left_period)).normalized())


def shift(p: Point) -> Point:
    if p.left is None:
        return Point(p.right.drop(1))
    return Point(p.right.drop(1), p.left.prepend(p.right.at(0)))


def two_sided_shift_inverse(p: Point) -> Point:
    if p.left is None:
        raise InputError("the one-sided shift has no inverse")
    return Point(p.right.prepend(p.left.at(0)), p.left.drop(1))


def shift_by(p: Point, n: int) -> Point:
    """tau^n; negative n needs a two-sided point."""
    if n >= 0:
        if p.left is None:
            return Point(p.right.drop(n))
        moved = p.right.read(n)
        return Point(p.right.drop(n), p.left.prepend(moved[::-1]))
    if p.left is None:
        raise InputError("the one-sided shift has no inverse")
    k = -n
    moved = p.left.read(k)
    return Point(p.right.prepend(moved[::-1]), p.left.drop(k))


def prepend(p: Point, word: str) -> Point:
    if p.left is not None:
        raise InputError("prepend is a one-sided operation")
    return Point(p.right.prepend(word))


def window(p: Point, start: int, stop: int) -> str:
    return p.window(start, stop)


def point_equal(p: Point, q: Point, depth: int = 32) -> Equality:
    if p.side != q.side:
        raise InputError("points live on different sides")
    if p == q:
        return Equality.EQUAL
    lo = 0 if p.left is None else -depth
    if p.window(lo, depth) != q.window(lo, depth):
        return Equality.DISTINCT
    tails = [p.right, q.right] + ([p.left, q.left] if p.left is not None else [])
    if all(t.eventually_periodic for t in tails):
        return Equality.DISTINCT  # normalized forms of eventually periodic tails are unique
    return Equality.UNDECIDED


# --------------------------------------------------------- predecessor sets

@dataclass(frozen=True)
class PredecessorSet:
    """Words mu of length ``length`` with mu x in the shift.

    ``blocks`` holds the length-``block_len`` suffixes that decide
    membership; when ``block_len == length`` the blocks are the words
    themselves.  Expand with :meth:`ShiftPresentation.pred_words`.
    """

    length: int
    blocks: FrozenSet[str]
    block_len: int

    @property
    def explicit(self) -> bool:
        return self.block_len == self.length

    def __str__(self):
        if self.explicit:
            return "{" + ",".join(sorted(w or "e" for w in self.blocks)) + "}"
        return f"P{self.length}[..{'|'.join(sorted(self.blocks))}]"


# ----------------------------------------------------------- presentations

class ShiftPresentation:
    """A finitely presented shift space.

    Build with the classmethods :meth:`full`, :meth:`matrix`,
    :meth:`forbidden`, :meth:`substitution` and :meth:`points`.
    """

    KINDS = ("full", "matrix", "forbidden", "substitution", "points")

    def __init__(self, alphabet, kind, data, side=Side.ONE, *, seed=None, margin=12, depth=24, max_scan=60):
        alphabet = tuple(alphabet)
        if not alphabet:
            raise InputError("empty alphabet")
        if len(set(alphabet)) != len(alphabet) or any(not isinstance(a, str) or len(a) != 1 for a in alphabet):
            raise InputError("alphabet symbols must be distinct single characters")
        if kind not in self.KINDS:
            raise InputError(f"unknown presentation kind {kind!r}")
        self.alphabet = alphabet
        self.kind = kind
        self.data = data
        self.side = Side(side)
        self.margin = margin
        self.depth = depth
        self.max_scan = max_scan
        self._index = {a: i for i, a in enumerate(alphabet)}
        self._factors: Dict[int, FrozenSet[str]] = {}
        self._pred_cache: Dict[tuple, PredecessorSet] = {}
        self.saturation: Dict[int, int] = {}
        self.seed = None
        if kind in ("full", "matrix", "forbidden"):
            self._compile_sft()
        elif kind == "substitution":
            rules = dict(data)
            if set(rules) != set(alphabet):
                raise InputError("substitution needs exactly one rule per symbol")
            for a, w in rules.items():
                if not w or any(c not in self._index for c in w):
                    raise InputError(f"bad substitution image for {a!r}")
            self.rules = tuple(sorted(rules.items()))
            self.seed = seed if seed is not None else alphabet[0]
            if self.seed not in self._index:
                raise InputError("seed outside alphabet")
        else:
            periods = []
            for w in data:
                self._check_word(w)
                if not w:
                    raise InputError("empty period in finite point set")
                root = _primitive_root(w)
                if not any(self._is_rotation(root, p) for p in periods):
                    periods.append(root)
            if not periods:
                raise InputError("empty shift space")
            self.periods = tuple(periods)
        self._ensure_nonempty()

    # constructors
    @classmethod
    def full(cls, alphabet, side=Side.ONE, **kw):
        return cls(alphabet, "full", None, side, **kw)

    @classmethod
    def matrix(cls, alphabet, rows, side=Side.ONE, **kw):
        return cls(alphabet, "matrix", tuple(tuple(int(v) for v in r) for r in rows), side, **kw)

    @classmethod
    def forbidden(cls, alphabet, words, side=Side.ONE, **kw):
        return cls(alphabet, "forbidden", tuple(words), side, **kw)

    @classmethod
    def substitution(cls, alphabet, rules, side=Side.ONE, **kw):
        return cls(alphabet, "substitution", tuple(dict(rules).items()), side, **kw)

    @classmethod
    def points(cls, alphabet, periods, side=Side.ONE, **kw):
        return cls(alphabet, "points", tuple(periods), side, **kw)

    def with_side(self, side) -> "ShiftPresentation":
        return ShiftPresentation(self.alphabet, self.kind, self.data, side, seed=self.seed,
                                 margin=self.margin, depth=self.depth, max_scan=self.max_scan)

    def __repr__(self):
        return f"ShiftPresentation({self.kind}, {''.join(self.alphabet)}, {self.side.value})"

    # helpers
    @property
    def is_sft(self) -> bool:
        return self.kind in ("full", "matrix", "forbidden")

    @property
    def exact(self) -> bool:
        return self.kind != "substitution"

    @property
    def tail_window(self) -> Optional[int]:
        """Length of tail that determines predecessor sets at word level."""
        if self.is_sft:
            return self.memory
        if self.kind == "substitution":
            return self.margin
        return None

    def _check_word(self, w: str):
        for c in w:
            if c not in self._index:
                raise InputError(f"symbol {c!r} outside alphabet")

    @staticmethod
    def _is_rotation(u: str, v: str) -> bool:
        return len(u) == len(v) and u in v + v

    def word(self, g: Sequence) -> str:
        if not is_positive(g):
            raise InputError("expected a positive word")
        return "".join(self.alphabet[s] for s, _ in g)

    def letters(self, w: str) -> ReducedWord:
        self._check_word(w)
        return positive_word(self._index[c] for c in w)

    def symbol_index(self, c: str) -> int:
        return self._index[c]

    # SFT compilation
    def _compile_sft(self):
        A = self.alphabet
        if self.kind == "full":
            forbidden = ()
        elif self.kind == "matrix":
            rows = self.data
            n = len(A)
            if len(rows) != n or any(len(r) != n for r in rows):
                raise InputError("matrix must be square of alphabet size")
            if any(v not in (0, 1) for r in rows for v in r):
                raise InputError("matrix entries must be 0 or 1")
            if any(sum(r) == 0 for r in rows):
                raise InputError("matrix has a zero row")
            forbidden = tuple(A[i] + A[j] for i in range(n) for j in range(n) if rows[i][j] == 0)
        else:
            forbidden = tuple(self.data)
            for f in forbidden:
                if not f:
                    raise InputError("empty forbidden word")
                self._check_word(f)
        self.forbidden_words = forbidden
        m = max((len(f) for f in forbidden), default=1) - 1
        self.memory = m

        def clean(w):
            return not any(f in w for f in forbidden)

        if m == 0:
            self._allowed = tuple(a for a in A if clean(a))
            self._states = [""]
            self._live = {""}
            self._edges = {a for a in self._allowed}
            return
        states = ["".join(t) for t in product(A, repeat=m)]
        states = [s for s in states if clean(s)]
        sset = set(states)
        succ = {s: [s[1:] + c for c in A if s[1:] + c in sset and clean(s + c)] for s in states}
        live = set(states)
        changed = True
        while changed:
            changed = False
            for s in list(live):
                ok = any(t in live for t in succ[s])
                if ok and self.side == Side.TWO:
                    ok = any(s in succ[t] for t in live)
                if not ok:
                    live.discard(s)
                    changed = True
        self._states = sorted(live)
        self._live = live
        idx = {s: i for i, s in enumerate(self._states)}
        self._state_index = idx
        self._edges = {s + t[-1] for s in self._states for t in succ[s] if t in live}
        ptr = [0]
        flat = []
        for s in self._states:
            nxt = sorted(idx[t] for t in succ[s] if t in live)
            flat.extend(nxt)
            ptr.append(len(flat))
        self._ptr = np.array(ptr, dtype=np.int64)
        self._succ = np.array(flat, dtype=np.int64)
        adj = np.zeros((len(self._states), len(self._states)), dtype=np.int64)
        for i in range(len(self._states)):
            for e in range(ptr[i], ptr[i + 1]):
                adj[i, flat[e]] = 1
        self._adj = adj
        self._backward: Dict[int, frozenset] = {0: frozenset(self._states)}

    def _ensure_nonempty(self):
        if self.is_sft:
            if self.memory == 0 and not self._allowed:
                raise InputError("empty shift space")
            if self.memory > 0 and not self._states:
                raise InputError("empty shift space")

    # language
    def factors(self, n: int) -> FrozenSet[str]:
        if n < 0:
            raise InputError("negative length")
        got = self._factors.get(n)
        if got is not None:
            return got
        if self.is_sft:
            out = self._sft_factors(n)
        elif self.kind == "substitution":
            out = self._scan_factors(n)
        else:
            out = frozenset(w for p in self.periods for w in self._windows(p, n))
        self._factors[n] = out
        return out

    @staticmethod
    def _windows(period: str, n: int):
        long = period * (n // len(period) + 2)
        return {long[i:i + n] for i in range(len(period))}

    def _sft_factors(self, n):
        m = self.memory
        if m == 0:
            return frozenset("".join(t) for t in product(self._allowed, repeat=n))
        if n < m:
            return frozenset(s[:n] for s in self._states)
        words = list(self._states)
        last = np.arange(len(words), dtype=np.int64)
        for _ in range(n - m):
            parent, child = kernels.extend(last, self._ptr, self._succ)
            words = [words[p] + self._states[c][-1] for p, c in zip(parent.tolist(), child.tolist())]
            last = child
        return frozenset(words)

    def count_factors(self, n: int) -> int:
        """Number of length-n factors (transfer matrix count for SFTs)."""
        if self.is_sft and self.memory > 0 and n >= self.memory:
            start = np.ones(len(self._states), dtype=np.int64)
            return int(kernels.walk_counts(self._adj, start, n - self.memory)[-1])
        return len(self.factors(n))

    def _scan_factors(self, n):
        sub = dict(self.rules)
        w = self.seed
        prev = None
        for it in range(1, self.max_scan + 1):
            w = "".join(sub[c] for c in w)
            if len(w) > 2_000_000:
                break
            if len(w) < 2 * n + 1:
                continue
            cur = frozenset(w[i:i + n] for i in range(len(w) - n + 1))
            if prev is not None and cur == prev:
                self.saturation[n] = it
                return cur
            prev = cur
        raise Inconclusive(f"substitution scan did not saturate at length {n}", depth=self.max_scan)

    def is_factor(self, w: str) -> bool:
        self._check_word(w)
        if self.is_sft:
            m = self.memory
            if m == 0:
                return all(c in self._allowed for c in w)
            if len(w) < m:
                return w in self.factors(len(w))
            live, edges = self._live, self._edges
            return all(w[i:i + m] in live for i in range(len(w) - m + 1)) and all(
                w[i:i + m + 1] in edges for i in range(len(w) - m))
        return w in self.factors(len(w))

    def word_predecessors(self, l: int, w: str) -> FrozenSet[str]:
        """{mu : |mu| = l and mu w in the language}."""
        return frozenset(mu for mu in self.factors(l) if self.is_factor(mu + w))

    def _suffix_blocks(self, l: int) -> frozenset:
        # states that end some length-l word
        j = l - self.memory
        got = self._backward.get(j)
        if got is None:
            prev = self._suffix_blocks(l - 1)
            got = frozenset(s[1:] + e[-1] for s in prev for e in self._edges if e[:-1] == s)
            self._backward[j] = got
        return got

    def state_predecessors(self, l: int, state: str) -> PredecessorSet:
        """Exact predecessor set of any point whose first m symbols are ``state``."""
        key = (l, state)
        got = self._pred_cache.get(key)
        if got is not None:
            return got
        m = self.memory
        if m == 0:
            out = PredecessorSet(l, frozenset({""}), 0)
        elif l < m:
            out = PredecessorSet(l, self.word_predecessors(l, state), l)
        else:
            out = PredecessorSet(l, frozenset(t for t in self._suffix_blocks(l) if self.is_factor(t + state)), m)
        self._pred_cache[key] = out
        return out

    def _special_words(self) -> Tuple[str, ...]:
        # long left special factors; for large n each follows one infinite branch
        got = getattr(self, "_specials", None)
        if got is None:
            n = 8 * self.margin
            got = tuple(sorted(w for w in self.factors(n) if len(self.word_predecessors(1, w)) >= 2))
            self._specials = got
        return got

    def resolve_tail(self, l: int, s: str) -> str:
        """Lengthen a substitution tail whose length-l predecessors are ambiguous.

        A window with two or more predecessors sits, up to j < l leading
        symbols, on a left special branch.  When exactly one branch matches,
        the window stands for that branch point and the long branch word is
        returned; otherwise ``s`` comes back unchanged.
        """
        if self.kind != "substitution" or l == 0 or len(self.word_predecessors(l, s)) < 2:
            return s
        hits = {S[j:] for S in self._special_words() for j in range(l)
                if len(S) - j > len(s) and S.startswith(s, j)}
        if len(hits) != 1:
            return s
        return hits.pop()

    def tail_predecessors(self, l: int, s: str) -> PredecessorSet:
        key = ("t", l, s)
        got = self._pred_cache.get(key)
        if got is None:
            got = PredecessorSet(l, self.word_predecessors(l, self.resolve_tail(l, s)), l)
            self._pred_cache[key] = got
        return got

    def predecessors(self, l: int, tail: Union[Point, str]) -> PredecessorSet:
        if l < 0:
            raise InputError("negative predecessor length")
        if isinstance(tail, str):
            self._check_word(tail)
            if self.is_sft and len(tail) >= self.memory:
                return self.state_predecessors(l, tail[: self.memory])
            return PredecessorSet(l, self.word_predecessors(l, tail), l)
        if tail.left is not None:
            raise InputError("predecessor sets are defined on one-sided points")
        if self.is_sft:
            return self.state_predecessors(l, tail.read(self.memory))
        if self.kind == "substitution":
            return self.tail_predecessors(l, tail.read(4 * self.margin))
        return PredecessorSet(l, frozenset({self._orbit_predecessor(tail, l)}), l)

    def _orbit_predecessor(self, tail: Point, l: int) -> str:
        t = tail.right
        if t.prefix or not isinstance(t.base, Periodic):
            raise InputError("point is not in the finite point set")
        p = t.base.period
        return (p * (l // len(p) + 1))[-l:] if l else ""

    def pred_words(self, P: PredecessorSet) -> FrozenSet[str]:
        if P.explicit:
            return P.blocks
        return frozenset(mu for mu in self.factors(P.length) if mu[len(mu) - P.block_len:] in P.blocks)

    def pred_count(self, P: PredecessorSet) -> int:
        if P.explicit:
            return len(P.blocks)
        if P.block_len == 0:
            return self.count_factors(P.length)
        j = P.length - P.block_len
        total = 0
        for t in P.blocks:
            start = np.zeros(len(self._states), dtype=np.int64)
            start[self._state_index[t]] = 1
            total += int(kernels.walk_counts(np.ascontiguousarray(self._adj.T), start, j)[-1])
        return total

    # membership of points
    def contains(self, p: Point) -> Optional[bool]:
        """Is ``p`` a point of this shift?  None when undecidable at depth."""
        if (p.left is None) != (self.side == Side.ONE):
            raise InputError("point side does not match presentation side")
        if self.kind == "points":
            t = p.right
            if t.prefix or not isinstance(t.base, Periodic):
                return False
            per = t.base.period
            if not any(self._is_rotation(per, q) for q in self.periods):
                return False
            if p.left is None:
                return True
            return p.left == Tail("", Periodic(per[::-1])).normalized()
        n = self._probe_length(p)
        word = p.window(-n if p.left is not None else 0, n)
        try:
            return self.is_factor(word)
        except Inconclusive:
            return None

    def _probe_length(self, p: Point) -> int:
        if not self.is_sft:
            return self.depth
        n = 0
        for t in (p.right, p.left):
            if t is None:
                continue
            if not isinstance(t.base, Periodic):
                return self.depth
            n = max(n, len(t.prefix) + len(t.base.period) * (self.memory + 2) + self.memory)
        return max(n, 1)

    def admits_prefix(self, word: str, p: Point) -> Optional[bool]:
        """For a one-sided point p of the shift: is ``word p`` a point too?"""
        if not word:
            return True
        if self.is_sft:
            return self.is_factor(word + p.read(self.memory))
        if self.kind == "substitution":
            try:
                return self.is_factor(word + p.read(self.depth))
            except Inconclusive:
                return None
        return self.contains(prepend(p, word))

    # substitution extras
    def substitution_matrix(self) -> np.ndarray:
        n = len(self.alphabet)
        M = np.zeros((n, n), dtype=np.int64)
        for a, w in self.rules:
            for c in w:
                M[self._index[a], self._index[c]] += 1
        return M

    def is_primitive(self) -> bool:
        M = self.substitution_matrix()
        n = M.shape[0]
        P = np.eye(n, dtype=np.int64)
        for _ in range((n - 1) ** 2 + 1):
            P = np.minimum(P @ M, 1)
        return bool((P > 0).all())

    def fixed_point(self, seed: Optional[str] = None, offset: int = 0) -> Point:
        if self.kind != "substitution":
            raise InputError("fixed points need a substitution presentation")
        base = FixedPoint(self.rules, seed or self.seed)
        base.read(0, 1)
        return Point(Tail("", base, offset).normalized())

    def two_sided_fixed_point(self, left_seed: str, right_seed: str) -> Point:
        if self.kind != "substitution":
            raise InputError("fixed points need a substitution presentation")
        right = FixedPoint(self.rules, right_seed)
        left = FixedPoint(self.rules, left_seed, reverse=True)
        right.read(0, 1)
        left.read(0, 1)
        return Point(Tail("", right), Tail("", left))


def substitution_orbit(pres: ShiftPresentation, seed: str, offset: int = 0) -> Point:
    return pres.fixed_point(seed, offset)


# module-level spellings of the presentation methods

def is_factor(pres: ShiftPresentation, w: str) -> bool:
    return pres.is_factor(w)


def factors(pres: ShiftPresentation, n: int) -> FrozenSet[str]:
    return pres.factors(n)


def predecessors(pres: ShiftPresentation, l: int, tail) -> PredecessorSet:
    return pres.predecessors(l, tail)


GOLDEN_MEAN = ((1, 1), (1, 0))
UPPER_TRIANGULAR = ((1, 1), (0, 1))
FIBONACCI = {"a": "ab", "b": "a"}
