"""Extended Burrows-Wheeler transform (EBWT), its inverse via the standard
permutation or via the iterated sort table, and the classic BWT.

The EBWT maps a multiset of aperiodic cycles of total length n bijectively to
words of length n. Rows of the forward table are powers of every rotation of
every cycle, cut to the lcm of the cycle lengths, sorted; the transform is
the last column.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import lcm
from typing import Iterable, Sequence

from .sequences import (
    Multicycle,
    Word,
    canonical_multicycle,
    is_lyndon,
    is_primitive,
    least_rotation,
    root,
    rotations,
)

# above this many columns the forward transform compares rows lazily
MAX_TABLE_WIDTH = 4096


@dataclass(frozen=True)
class StandardPermutation:
    """pi(H_i + j) = position of the j-th occurrence of symbol i."""

    mapping: tuple[int, ...]
    bounds: tuple[int, ...]

    def symbol_of(self, index: int) -> int:
        """Symbol whose bucket [H_i, H_{i+1}) contains ``index``."""
        for i in range(len(self.bounds) - 1):
            if index < self.bounds[i + 1]:
                return i
        raise IndexError(index)

    def cycles(self) -> list[list[int]]:
        n = len(self.mapping)
        seen = [False] * n
        out = []
        for start in range(n):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.mapping[j]
            out.append(cyc)
        return out


def _cycles_of(sigma: Iterable[Sequence[int]]) -> list[Word]:
    cycles = [tuple(c) for c in sigma]
    for c in cycles:
        if not c or not is_primitive(c):
            raise ValueError(f"cycle {c} is not aperiodic")
    return cycles


def _forward_rows(cycles: list[Word]) -> list[Word]:
    return [r for c in cycles for r in rotations(c)]


def ebwt_table(sigma: Iterable[Sequence[int]]) -> list[Word]:
    """Sorted n x c table of rotation powers, c = lcm of cycle lengths."""
    cycles = _cycles_of(sigma)
    if not cycles:
        return []
    c = lcm(*(len(s) for s in cycles))
    rows = [r * (c // len(r)) for r in _forward_rows(cycles)]
    rows.sort()
    return rows


def _omega_cmp(u: Word, v: Word) -> int:
    # u^inf vs v^inf orders the same way as uv vs vu
    a, b = u + v, v + u
    return (a > b) - (a < b)


def ebwt(sigma: Iterable[Sequence[int]], method: str = "auto") -> Word:
    """Last column of the sorted table of rotation powers.

    ``method`` is "table" (materialize lcm-width rows), "lazy" (compare the
    periodic extensions pairwise) or "auto".
    """
    cycles = _cycles_of(sigma)
    if not cycles:
        return ()
    if method == "auto":
        width = lcm(*(len(s) for s in cycles))
        method = "table" if width <= MAX_TABLE_WIDTH else "lazy"
    if method == "table":
        return tuple(row[-1] for row in ebwt_table(cycles))
    if method == "lazy":
        rows = sorted(_forward_rows(cycles), key=cmp_to_key(_omega_cmp))
        return tuple(r[-1] for r in rows)
    raise ValueError(f"unknown method {method!r}")


def standard_permutation(w: Sequence[int], q: int | None = None) -> StandardPermutation:
    w = tuple(w)
    if q is None:
        q = max(w) + 1 if w else 1
    positions: list[list[int]] = [[] for _ in range(q)]
    for pos, a in enumerate(w):
        positions[a].append(pos)
    bounds = [0]
    for plist in positions:
        bounds.append(bounds[-1] + len(plist))
    mapping = tuple(pos for plist in positions for pos in plist)
    return StandardPermutation(mapping, tuple(bounds))


def inverse_ebwt(w: Sequence[int]) -> Multicycle:
    """Cycles of the standard permutation with entries replaced by symbols."""
    w = tuple(w)
    if not w:
        return ()
    pi = standard_permutation(w)
    # entries in bucket i are labelled by symbol i
    label = [0] * len(w)
    for i in range(len(pi.bounds) - 1):
        for j in range(pi.bounds[i], pi.bounds[i + 1]):
            label[j] = i
    return canonical_multicycle([label[j] for j in cyc] for cyc in pi.cycles())


def inverse_ebwt_table(w: Sequence[int]) -> list[Word]:
    """Prepend w as a new first column and re-sort until the last column is w."""
    w = tuple(w)
    n = len(w)
    if n == 0:
        return []
    rows: list[Word] = [()] * n
    while True:
        rows = sorted((w[i],) + rows[i] for i in range(n))
        if tuple(r[-1] for r in rows) == w:
            return rows


def inverse_ebwt_via_table(w: Sequence[int]) -> Multicycle:
    """Lyndon primitive roots of the inverse table's rows."""
    rows = inverse_ebwt_table(w)
    return tuple(sorted(r for r in (root(row) for row in rows) if is_lyndon(r)))


def power_multicycle(sigma: Iterable[Sequence[int]], d: int) -> Multicycle:
    """Multiply every cycle's multiplicity by ``d``."""
    return canonical_multicycle([tuple(c) for c in sigma for _ in range(d)])


def bwt_table(s: Sequence[int]) -> list[Word]:
    return sorted(rotations(s))


def bwt(s: Sequence[int]) -> Word:
    """Last column of the sorted square table of rotations of s."""
    return tuple(row[-1] for row in bwt_table(s))


def inverse_bwt(w: Sequence[int]) -> Word | None:
    """A word whose BWT is ``w`` (its least rotation), or None if none exists."""
    w = tuple(w)
    if not w:
        return ()
    sigma = inverse_ebwt(w)
    if len(set(sigma)) != 1:
        return None
    t = sigma[0]
    return least_rotation(t) * len(sigma)


def inverse_bwt_table(w: Sequence[int]) -> list[Word]:
    """Square inverse table: same rounds as the EBWT inverse, stopped at n columns."""
    w = tuple(w)
    n = len(w)
    rows: list[Word] = [()] * n
    for _ in range(n):
        rows = sorted((w[i],) + rows[i] for i in range(n))
    return rows


def power_word(w: Sequence[int], d: int) -> Word:
    """Repeat each symbol of w in place d times."""
    if d < 1:
        raise ValueError("power must be positive")
    return tuple(a for a in w for _ in range(d))


def is_nod(w: Sequence[int]) -> bool:
    """True unless w splits into constant blocks of some common length i > 1."""
    w = tuple(w)
    n = len(w)
    for i in range(2, n + 1):
        if n % i == 0 and all(len(set(w[j:j + i])) == 1 for j in range(0, n, i)):
            return False
    return True
