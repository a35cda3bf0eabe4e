"""Exhaustive generation of multi de Bruijn sequences.

The cyclic and linearized searches walk candidate words in ascending base-q
order and skip every word that shares a prefix in which some k-mer (or, with
``kprime=True``, some shorter k'-mer) already occurs too often. The skip is
the same as advancing N to (N // q^i + 1) * q^i in the numeric formulation;
here it is carried out as a depth-first search so the k-mer counts update in
O(1) per symbol. :func:`scan_numeric` keeps the literal numeric loop and is
used as an oracle in the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .counting import count_W
from .ebwt import inverse_ebwt
from .sequences import Multicycle, Params, Word, all_kmers, linearized_to_linear

DEFAULT_MAX_SPACE_BITS = 32


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_space_bits: int = DEFAULT_MAX_SPACE_BITS
    limit: int | None = None

    def __post_init__(self):
        if self.max_space_bits < 1:
            raise ValueError("max_space_bits must be positive")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be positive")


def search_space(p: Params) -> int:
    """Number of candidates q^(l-k+1) scanned by the cyclic search."""
    return p.q ** (p.length - p.k + 1)


def _check_budget(space: int, budget: SearchBudget, what: str) -> None:
    if space > 2**budget.max_space_bits:
        bits = (space - 1).bit_length()
        raise BudgetExceeded(
            f"{what} needs a {bits}-bit search space, "
            f"budget allows {budget.max_space_bits} bits"
        )


def _limited(it: Iterator, budget: SearchBudget) -> Iterator:
    if budget.limit is None:
        return it
    return itertools.islice(it, budget.limit)


def _dfs(p: Params, prefix: Word, necklaces_only: bool, kprime: bool) -> Iterator[Word]:
    """Linearizations of length m*q^k starting with ``prefix`` (length k).

    With ``necklaces_only`` only words that are least among their rotations
    are produced. Requires q >= 2.
    """
    m, q, k = p.m, p.q, p.k
    n = p.length
    Q = q**k
    a = list(prefix) + [0] * (n - k)
    counts = [0] * Q

    code = 0
    for c in prefix:
        code = code * q + c
    counts[code] = 1

    # k'-mer tables: modulus q^k' and threshold m*q^(k-k')
    sub = []
    if kprime:
        for kp in range(1, k):
            mod = q**kp
            table = [0] * mod
            for i in range(k - kp + 1):
                c2 = 0
                for s in prefix[i:i + kp]:
                    c2 = c2 * q + s
                table[c2] += 1
            sub.append((mod, m * q ** (k - kp), table))
    for mod, limit, table in sub:
        if max(table) > limit:
            return

    # prenecklace period of the prefix (0 once the prefix cannot be a necklace)
    per = 1
    for j in range(1, k):
        if per:
            ref = a[j - per]
            if a[j] > ref:
                per = j + 1
            elif a[j] < ref:
                per = 0

    wrap_starts = range(n - k + 1, n)

    def leaf(per):
        if necklaces_only and not (per and n % per == 0):
            return None
        touched = []
        ok = True
        for i in wrap_starts:
            c2 = 0
            for t in range(i, i + k):
                c2 = c2 * q + a[t - n if t >= n else t]
            counts[c2] += 1
            touched.append(c2)
            if counts[c2] > m:
                ok = False
                break
        for c2 in touched:
            counts[c2] -= 1
        return tuple(a) if ok else None

    def rec(j, code, per):
        if j == n:
            w = leaf(per)
            if w is not None:
                yield w
            return
        base = (code * q) % Q
        for c in range(q):
            nc = base + c
            if counts[nc] >= m:
                continue
            bad = False
            for mod, limit, table in sub:
                if table[nc % mod] >= limit:
                    bad = True
                    break
            if bad:
                continue
            counts[nc] += 1
            for mod, _, table in sub:
                table[nc % mod] += 1
            a[j] = c
            if per:
                ref = a[j - per]
                nper = per if c == ref else (j + 1 if c > ref else 0)
            else:
                nper = 0
            yield from rec(j + 1, nc, nper)
            counts[nc] -= 1
            for mod, _, table in sub:
                table[nc % mod] -= 1

    yield from rec(k, code, per)


def scan_numeric(
    p: Params,
    prefix: Sequence[int] | None = None,
    necklaces_only: bool = True,
    prune: bool = True,
    kprime: bool = False,
) -> Iterator[Word]:
    """Literal numeric scan over N with optional prefix-skipping.

    Without ``prefix`` N runs over [0, q^(l-k+1)) as in the cyclic search;
    with a prefix y of length k, N runs over the block of words starting
    with y. Slow; intended as an oracle for small parameters.
    """
    m, q, k = p.m, p.q, p.k
    n = p.length
    if q == 1:
        yield (0,) * m
        return
    if prefix is None:
        lo, hi = 0, q ** (n - k + 1)
    else:
        head = 0
        for c in prefix:
            head = head * q + c
        lo, hi = head * q ** (n - k), (head + 1) * q ** (n - k)

    N = lo
    while N < hi:
        # string s = a_{n-1} ... a_0, s[t] = a_{n-1-t}
        s = [(N // q ** (n - 1 - t)) % q for t in range(n)]
        counts: dict[tuple, int] = {}
        subcounts: dict[tuple, int] = {}
        skip_at = None
        # k-mers a_{i+k-1}..a_i for i = n-k down to 1-k
        for i in range(n - k, -k, -1):
            start = n - 1 - (i + k - 1)
            kmer = tuple(s[(start + t) % n] for t in range(k))
            counts[kmer] = counts.get(kmer, 0) + 1
            if counts[kmer] > m:
                skip_at = i
                break
            if kprime and i > 0:
                end = start + k - 1
                over = False
                for kp in range(1, k):
                    # k'-mers ending at ``end`` (and the ones inside the first k-mer)
                    firsts = range(kp - 1, k) if start == 0 else (end,)
                    for e in firsts:
                        key = (kp,) + tuple(s[e - kp + 1:e + 1])
                        subcounts[key] = subcounts.get(key, 0) + 1
                        if subcounts[key] > m * q ** (k - kp):
                            over = True
                if over:
                    skip_at = i
                    break
        if skip_at is None:
            w = tuple(s)
            if not necklaces_only or all(w <= w[j:] + w[:j] for j in range(1, n)):
                yield w
            N += 1
        elif prune and skip_at > 0:
            step = q**skip_at
            N = (N // step + 1) * step
        else:
            N += 1


def enumerate_cyclic(
    p: Params,
    budget: SearchBudget = SearchBudget(),
    kprime: bool = True,
    prune: bool = True,
) -> Iterator[Word]:
    """Every cyclic multi de Bruijn sequence, as its least rotation, ascending.

    ``prune=False`` runs the unpruned numeric scan (oracle use only).
    """
    _check_budget(search_space(p), budget, f"cyclic enumeration of {p}")
    if p.q == 1:
        it: Iterator[Word] = iter([(0,) * p.m])
    elif not prune:
        it = scan_numeric(p, necklaces_only=True, prune=False)
    else:
        # least rotations start with 0^k since 0^k occurs
        it = _dfs(p, (0,) * p.k, necklaces_only=True, kprime=kprime)
    return _limited(it, budget)


def enumerate_linearized_starting(
    p: Params,
    y: Sequence[int] | None = None,
    budget: SearchBudget = SearchBudget(),
    kprime: bool = True,
    prune: bool = True,
) -> Iterator[Word]:
    """Linearized sequences beginning with the k-mer ``y`` (default 0^k)."""
    y = (0,) * p.k if y is None else tuple(y)
    if len(y) != p.k:
        raise ValueError(f"initial k-mer must have length k={p.k}")
    if any(not 0 <= c < p.q for c in y):
        raise ValueError(f"initial k-mer has a symbol out of range for q={p.q}")
    _check_budget(search_space(p), budget, f"linearized enumeration of {p}")
    if p.q == 1:
        it: Iterator[Word] = iter([(0,) * p.m])
    elif not prune:
        it = scan_numeric(p, prefix=y, necklaces_only=False, prune=False)
    else:
        it = _dfs(p, y, necklaces_only=False, kprime=kprime)
    return _limited(it, budget)


def enumerate_linear(p: Params, budget: SearchBudget = SearchBudget(), kprime: bool = True) -> Iterator[Word]:
    """Every linear multi de Bruijn sequence, in lexicographic order."""
    _check_budget(search_space(p), budget, f"linear enumeration of {p}")

    def gen():
        if p.q == 1:
            yield (0,) * (p.m + p.k - 1)
            return
        for y in all_kmers(p.q, p.k):
            for s in _dfs(p, y, necklaces_only=False, kprime=kprime):
                yield linearized_to_linear(s, p)

    return _limited(gen(), budget)


def codewords(m: int, q: int) -> Iterator[Word]:
    """Arrangements of 0^m 1^m ... (q-1)^m in lexicographic order."""
    n = m * q
    left = [m] * q
    word = [0] * n

    def rec(j):
        if j == n:
            yield tuple(word)
            return
        for c in range(q):
            if left[c]:
                left[c] -= 1
                word[j] = c
                yield from rec(j + 1)
                left[c] += 1

    return rec(0)


def multicyclic_pairs(p: Params, budget: SearchBudget = SearchBudget()) -> Iterator[tuple[Word, Multicycle]]:
    """Pairs (w, inverse_ebwt(w)) over w in (codewords)^(q^(k-1)), w ascending."""
    _check_budget(count_W(p), budget, f"multicyclic enumeration of {p}")
    blocks = list(codewords(p.m, p.q))

    def gen():
        for combo in itertools.product(blocks, repeat=p.q ** (p.k - 1)):
            w = tuple(itertools.chain.from_iterable(combo))
            yield w, inverse_ebwt(w)

    return _limited(gen(), budget)


def enumerate_multicyclic(p: Params, budget: SearchBudget = SearchBudget()) -> Iterator[Multicycle]:
    """Every multicyclic de Bruijn sequence, ordered by its transform."""
    return (sigma for _, sigma in multicyclic_pairs(p, budget))
