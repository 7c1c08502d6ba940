"""Brute-force reference computations, independent of the package.

Everything here works on plain strings with exhaustive enumeration; the
values the tests freeze were produced by these functions.
"""
from functools import lru_cache
from itertools import product

GM_PAIRS = {"aa", "ab", "ba"}
UT_PAIRS = {"aa", "ab", "bb"}
FULL_PAIRS = {"aa", "ab", "ba", "bb"}
FIB = {"a": "ab", "b": "a"}


def sft_words(pairs, n, alphabet="ab"):
    return {"".join(t) for t in product(alphabet, repeat=n)
            if all("".join(t)[i:i + 2] in pairs for i in range(n - 1))}


def substitution_text(rules, seed="a", length=20000):
    w = seed
    while len(w) < length:
        w = "".join(rules[c] for c in w)
    return w


@lru_cache(maxsize=None)
def fib_text():
    return substitution_text(FIB, "a", 30000)


@lru_cache(maxsize=None)
def fib_words(n):
    t = fib_text()
    return frozenset(t[i:i + n] for i in range(len(t) - n + 1))


def reduce_naive(seq):
    """Cancel adjacent inverse pairs until none remain (quadratic rescans)."""
    w = list(seq)
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i][0] == w[i + 1][0] and w[i][1] == -w[i + 1][1]:
                del w[i:i + 2]
                changed = True
                break
    return tuple(w)


def left_special_counts(words, n_max, alphabet="ab"):
    out = []
    for n in range(1, n_max + 1):
        longer = words(n + 1)
        out.append(sum(1 for w in words(n) if sum(c + w in longer for c in alphabet) >= 2))
    return out


# ---------------------------------------------------------- one-sided atoms

def sft_atoms(pairs, k, l, alphabet="ab"):
    """Atoms of a memory-one SFT: prefix w with the first tail symbol c."""
    def preds(c):
        return frozenset(u for u in sft_words(pairs, l, alphabet) if not u or u[-1] + c in pairs)

    atoms = set()
    for wc in sft_words(pairs, k + 1, alphabet):
        atoms.add((wc[:k], preds(wc[k])))
    return atoms


def fib_atoms(k, l, window=60, orbit=4000):
    """Atoms realised by sampled points: sigma^n f and short left extensions of sigma^m f."""
    t = fib_text()
    lang_l = sorted(fib_words(l)) if l else [""]

    def preds(tail):
        return frozenset(u for u in lang_l if (u + tail) in fib_words(len(u + tail)))

    points = [t[n:n + k + window] for n in range(orbit)]
    for m in range(13):
        base = t[m:m + k + window]
        for j in range(1, 7):
            for v in ("".join(x) for x in product("ab", repeat=j)):
                s = (v + base)[:k + window]
                if v + base[:window] in fib_words(len(v) + window):
                    points.append(s)
    return {(x[:k], preds(x[k:k + window])) for x in points}


# ------------------------------------------------------ invariant open sets

def ev_points(pairs, q, p, alphabet="ab"):
    """Eventually periodic one-sided points as (pre, period) words, normalised by unrolling."""
    pts = set()
    for n in range(1, p + 1):
        for per in product(alphabet, repeat=n):
            per = "".join(per)
            cyc = per * 4
            if not all(cyc[i:i + 2] in pairs for i in range(len(cyc) - 1)):
                continue
            for j in range(q + 1):
                for pre in product(alphabet, repeat=j):
                    pre = "".join(pre)
                    s = pre + cyc
                    if all(s[i:i + 2] in pairs for i in range(len(s) - 1)):
                        pts.add((pre, per))
    return pts


def _expand(pt, n):
    pre, per = pt
    return (pre + per * (n // len(per) + 2))[:n]


def invariant_open_count(pairs, q=8, p=2, alphabet="ab"):
    """Count shift- and prepend-invariant subsets of a point sample that are open.

    Points with preperiod <= q - 3 must each have an atom of resolution at
    most q - 2 whose sampled points all lie in the set.  The extra depth of
    the sample lets atoms of those resolutions see deeper points, so a
    non-isolated point is never mistaken for an isolated one.
    """
    N = 40
    depth = {}
    for pre, per in ev_points(pairs, q, p, alphabet):
        s = _expand((pre, per), N)
        depth[s] = min(depth.get(s, q), len(pre))
    strings = sorted(depth)
    index = {s: i for i, s in enumerate(strings)}
    parent = list(range(len(strings)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    by_head = {}
    for s in strings:
        by_head.setdefault(s[:N - 1], []).append(s)
    for s in strings:
        for other in by_head.get(s[1:N], ()):  # other = sigma(s) up to the window
            parent[find(index[s])] = find(index[other])
    classes = {}
    for s in strings:
        classes.setdefault(find(index[s]), []).append(s)
    cls = list(classes.values())

    res = q - 2
    words_l = {l: sft_words(pairs, l, alphabet) for l in range(res + 1)}
    preds = {(l, c): frozenset(u for u in words_l[l] if not u or u[-1] + c in pairs)
             for l in range(res + 1) for c in alphabet}
    # for each point and resolution, the sampled points sharing its atom
    blocks = {}
    for k in range(res + 1):
        for l in range(res + 1):
            groups = {}
            for s in strings:
                groups.setdefault((s[:k], preds[l, s[k]]), set()).add(s)
            for s in strings:
                blocks.setdefault(s, []).append(groups[(s[:k], preds[l, s[k]])])
    inner = [s for s in strings if depth[s] <= q - 3]

    count = 0
    for mask in range(1 << len(cls)):
        S = {s for i, c in enumerate(cls) if mask >> i & 1 for s in c}
        count += all(any(b <= S for b in blocks[s]) for s in inner if s in S)
    return count


# ------------------------------------------------------- partial action

def sft_domain(pairs, mu, nu, x):
    """x in D_{mu nu^-1} for a memory-one SFT, with x a long prefix string."""
    if not x.startswith(mu):
        return False
    s = nu + x[len(mu):]
    return all(s[i:i + 2] in pairs for i in range(len(s) - 1))
