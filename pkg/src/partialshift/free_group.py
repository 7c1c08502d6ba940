"""Reduced words in the free group on a finite alphabet.

Letters are pairs ``(symbol, sign)`` where ``symbol`` indexes the alphabet
and ``sign`` is +1 or -1.  A :class:`ReducedWord` never contains an adjacent
cancelling pair, so structural equality is equality in the group.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Tuple


class Letter(NamedTuple):
    symbol: int
    sign: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.symbol, -self.sign)


class ReducedWord(tuple):
    """Immutable reduced word; the empty word is the neutral element."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[Letter] = ()):
        return super().__new__(cls, letters)

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return tuple(self)

    def __mul__(self, other):  # group law, not tuple repetition
        return multiply(self, other)

    def __invert__(self):
        return invert(self)

    def __repr__(self):
        return f"ReducedWord({format_word(self)})"


IDENTITY = ReducedWord()


def _check(letter, n_symbols: Optional[int]) -> Letter:
    symbol, sign = letter
    if sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
    if symbol < 0 or (n_symbols is not None and symbol >= n_symbols):
        raise ValueError(f"symbol index {symbol} outside the alphabet")
    return Letter(symbol, sign)


def reduce(raw: Iterable, n_symbols: Optional[int] = None) -> ReducedWord:
    """Free reduction with a stack; raises ``ValueError`` on a bad index."""
    stack = []
    for item in raw:
        letter = _check(item, n_symbols)
        if stack and stack[-1].symbol == letter.symbol and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return ReducedWord(stack)


def multiply(g: Sequence[Letter], h: Sequence[Letter]) -> ReducedWord:
    # only the seam between g and h can cancel
    i = len(g)
    j = 0
    while i > 0 and j < len(h) and g[i - 1].symbol == h[j].symbol and g[i - 1].sign == -h[j].sign:
        i -= 1
        j += 1
    return ReducedWord(tuple(g[:i]) + tuple(h[j:]))


def product_of(*words: Sequence[Letter]) -> ReducedWord:
    out = IDENTITY
    for w in words:
        out = multiply(out, w)
    return out


def invert(g: Sequence[Letter]) -> ReducedWord:
    return ReducedWord(Letter(s, -e) for s, e in reversed(g))


def degree(g: Sequence[Letter]) -> int:
    return sum(sign for _, sign in g)


def is_positive(g: Sequence[Letter]) -> bool:
    return all(sign == 1 for _, sign in g)


def positive_word(symbols: Iterable[int]) -> ReducedWord:
    return ReducedWord(Letter(s, 1) for s in symbols)


def symbols_of(g: Sequence[Letter]) -> Tuple[int, ...]:
    """Symbol indices of a positive word."""
    if not is_positive(g):
        raise ValueError("word is not in the positive cone")
    return tuple(s for s, _ in g)


def one_sided_normal_form(g: Sequence[Letter]) -> Optional[Tuple[ReducedWord, ReducedWord]]:
    """Return ``(mu, nu)`` with ``g = mu nu^-1`` and mu, nu positive, or None.

    For a reduced word this form exists exactly when no positive letter
    follows an inverse letter; reducedness then makes the last letters of
    mu and nu distinct.
    """
    k = 0
    while k < len(g) and g[k].sign == 1:
        k += 1
    if any(sign == 1 for _, sign in g[k:]):
        return None
    mu = ReducedWord(g[:k])
    nu = invert(g[k:])
    return mu, nu


def ball(n_symbols: int, radius: int) -> list:
    """All reduced words of length at most ``radius``, shortlex ordered."""
    letters = [Letter(s, e) for s in range(n_symbols) for e in (1, -1)]
    out = [IDENTITY]
    layer = [IDENTITY]
    for _ in range(radius):
        nxt = []
        for w in layer:
            for x in letters:
                if w and w[-1].symbol == x.symbol and w[-1].sign == -x.sign:
                    continue
                nxt.append(ReducedWord(w + (x,)))
        out.extend(nxt)
        layer = nxt
    return out


def positive_words(n_symbols: int, length: int) -> Iterator[ReducedWord]:
    for combo in product(range(n_symbols), repeat=length):
        yield positive_word(combo)


def format_word(g: Sequence[Letter], alphabet: Optional[Sequence[str]] = None) -> str:
    if not g:
        return "e"
    parts = []
    for s, e in g:
        name = alphabet[s] if alphabet is not None else f"x{s}"
        parts.append(name if e == 1 else name + "^-1")
    return "".join(parts) if alphabet is not None and all(e == 1 for _, e in g) else " ".join(parts)
