"""Words over the alphabet {0, ..., q-1}: rotations, roots, Lyndon words,
occurrence counting and membership in the multi de Bruijn classes.

Linear words are tuples of ints. A cyclic sequence is represented by its
lexicographically least rotation (also a tuple). A multicyclic sequence is a
sorted tuple of Lyndon words, repeated according to multiplicity.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

Word = tuple[int, ...]
Multicycle = tuple[Word, ...]

CLASSES = ("linear", "linearized", "cyclic", "multicyclic")


@dataclass(frozen=True)
class Params:
    """Multiplicity ``m``, alphabet size ``q`` and word size ``k``."""

    m: int
    q: int
    k: int

    def __post_init__(self):
        for name in ("m", "q", "k"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @property
    def length(self) -> int:
        """Length of a cyclic or linearized sequence, m*q^k."""
        return self.m * self.q**self.k

    @property
    def linear_length(self) -> int:
        return self.length + self.k - 1

    def __str__(self):
        return f"(m,q,k)=({self.m},{self.q},{self.k})"


def _nonempty(s: Sequence[int]) -> None:
    if len(s) == 0:
        raise ValueError("empty sequence")


def rotate(s: Sequence[int], i: int = 1) -> Word:
    """Apply the rotation that moves the last symbol to the front, ``i`` times."""
    _nonempty(s)
    n = len(s)
    i %= n
    s = tuple(s)
    return s[n - i:] + s[:n - i]


def rotations(s: Sequence[int]) -> list[Word]:
    _nonempty(s)
    s = tuple(s)
    return [s[j:] + s[:j] for j in range(len(s))]


def _smallest_period(s: Word) -> int:
    # KMP failure function; period divides len(s) iff s is a proper power
    n = len(s)
    fail = [0] * n
    j = 0
    for i in range(1, n):
        while j and s[i] != s[j]:
            j = fail[j - 1]
        if s[i] == s[j]:
            j += 1
        fail[i] = j
    p = n - fail[-1]
    return p if n % p == 0 else n


def rotation_order(s: Sequence[int]) -> int:
    """Largest d dividing |s| with s a d-th power of a word."""
    _nonempty(s)
    s = tuple(s)
    return len(s) // _smallest_period(s)


def root(s: Sequence[int]) -> Word:
    """Shortest prefix t with s = t^d."""
    _nonempty(s)
    s = tuple(s)
    return s[:_smallest_period(s)]


def is_primitive(s: Sequence[int]) -> bool:
    return rotation_order(s) == 1


def least_rotation(s: Sequence[int]) -> Word:
    """Lexicographically least rotation (Booth's algorithm)."""
    _nonempty(s)
    s = tuple(s)
    n = len(s)
    doubled = s + s
    fail = [-1] * (2 * n)
    best = 0
    for j in range(1, 2 * n):
        c = doubled[j]
        i = fail[j - best - 1]
        while i != -1 and c != doubled[best + i + 1]:
            if c < doubled[best + i + 1]:
                best = j - i - 1
            i = fail[i]
        if c != doubled[best + i + 1]:
            if c < doubled[best]:
                best = j
            fail[j - best] = -1
        else:
            fail[j - best] = i + 1
    return doubled[best:best + n]


def is_lyndon(s: Sequence[int]) -> bool:
    """Primitive and strictly smaller than each nontrivial rotation."""
    _nonempty(s)
    s = tuple(s)
    return is_primitive(s) and least_rotation(s) == s


def is_necklace(s: Sequence[int]) -> bool:
    """True when s is the least among its rotations (primitive or not)."""
    return least_rotation(s) == tuple(s)


def canonical_cycle(s: Sequence[int]) -> Word:
    """Canonical representative of the cycle (s)."""
    return least_rotation(s)


def canonical_multicycle(cycles: Iterable[Sequence[int]]) -> Multicycle:
    """Canonical form of a multiset of aperiodic cycles.

    Raises ValueError if any cycle is empty or periodic.
    """
    out = []
    for c in cycles:
        c = tuple(c)
        if not is_primitive(c):
            raise ValueError(f"cycle {format_word(c)} is not aperiodic")
        out.append(least_rotation(c))
    out.sort()
    return tuple(out)


def power(s: Sequence[int], d: int) -> Word:
    return tuple(s) * d


def _periodic_prefix(s: Word, n: int) -> Word:
    reps = -(-n // len(s))
    return (s * reps)[:n]


def count_occurrences_cyclic(c: Sequence[int], w: Sequence[int]) -> int:
    """Number of rotations of ``c`` having ``w`` as a prefix of some power."""
    w = tuple(w)
    if not w:
        raise ValueError("empty pattern")
    c = tuple(c)
    _nonempty(c)
    return sum(1 for r in rotations(c) if _periodic_prefix(r, len(w)) == w)


def count_occurrences_multicyclic(sigma: Iterable[Sequence[int]], w: Sequence[int]) -> int:
    return sum(count_occurrences_cyclic(c, w) for c in sigma)


def _cyclic_kmer_counts(c: Word, k: int) -> Counter:
    ext = _periodic_prefix(c, len(c) + k - 1)
    return Counter(ext[i:i + k] for i in range(len(c)))


def kmer_counts(x, cls: str, k: int) -> Counter:
    """Count k-mers of ``x`` under the occurrence convention of ``cls``."""
    if cls == "linear":
        x = tuple(x)
        return Counter(x[i:i + k] for i in range(len(x) - k + 1))
    if cls in ("linearized", "cyclic"):
        return _cyclic_kmer_counts(tuple(x), k)
    if cls == "multicyclic":
        total: Counter = Counter()
        for c in x:
            total.update(_cyclic_kmer_counts(tuple(c), k))
        return total
    raise ValueError(f"unknown class {cls!r}; expected one of {CLASSES}")


def _check_symbols(x, cls: str, q: int) -> None:
    words = x if cls == "multicyclic" else [x]
    for w in words:
        for a in w:
            if not 0 <= a < q:
                raise ValueError(f"symbol {a} out of range for q={q}")


def is_member(x, cls: str, p: Params) -> bool:
    """Membership of ``x`` in the multi de Bruijn class ``cls`` for ``p``.

    ``x`` is a word for linear/linearized/cyclic and an iterable of cycles
    for multicyclic.
    """
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}; expected one of {CLASSES}")
    if cls == "multicyclic":
        x = [tuple(c) for c in x]
        for c in x:
            _nonempty(c)
            if not is_primitive(c):
                raise ValueError(f"cycle {format_word(c)} is not aperiodic")
        n = sum(len(c) for c in x)
    else:
        x = tuple(x)
        n = len(x)
    _check_symbols(x, cls, p.q)

    expected = p.linear_length if cls == "linear" else p.length
    if n != expected:
        return False
    counts = kmer_counts(x, cls, p.k)
    if len(counts) != p.q**p.k:
        return False
    return all(v == p.m for v in counts.values())


def linearized_to_linear(s: Sequence[int], p: Params) -> Word:
    """Append the first k-1 symbols of the cycle to its linearization."""
    s = tuple(s)
    if not is_member(s, "linearized", p):
        raise ValueError("not a multi de Bruijn sequence")
    return s + _periodic_prefix(s, p.k - 1) if p.k > 1 else s


def linear_to_linearized(s: Sequence[int], p: Params) -> Word:
    """Drop the trailing k-1 symbols of a linear multi de Bruijn sequence."""
    s = tuple(s)
    if not is_member(s, "linear", p):
        raise ValueError("not a multi de Bruijn sequence")
    return s[:len(s) - (p.k - 1)]


def all_kmers(q: int, k: int) -> list[Word]:
    """Every word of length k in lexicographic order."""
    return list(product(range(q), repeat=k))


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def format_word(w: Sequence[int], q: int | None = None) -> str:
    """Digits for alphabets up to 10, bracketed decimals beyond that."""
    wide = (q is not None and q > 10) or any(a > 9 for a in w)
    if wide:
        return "[" + ",".join(str(a) for a in w) + "]"
    return "".join(str(a) for a in w)


def format_cycle(c: Sequence[int], q: int | None = None) -> str:
    return "(" + format_word(c, q) + ")"


def format_multicycle(sigma: Iterable[Sequence[int]], q: int | None = None) -> str:
    return "".join(format_cycle(c, q) for c in sigma)


def parse_word(text: str) -> Word:
    text = "".join(text.split())
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"unterminated bracketed word {text!r}")
        body = text[1:-1]
        if not body:
            return ()
        try:
            return tuple(int(a) for a in body.split(","))
        except ValueError:
            raise ValueError(f"bad bracketed word {text!r}") from None
    if not text.isdigit() and text:
        raise ValueError(f"bad word {text!r}")
    return tuple(int(a) for a in text)


_GROUP = re.compile(r"\(([^()]*)\)")


def parse_cycle(text: str) -> Word:
    text = text.strip()
    m = _GROUP.fullmatch(text)
    if m is None:
        raise ValueError(f"bad cycle {text!r}")
    return parse_word(m.group(1))


def parse_multicycle(text: str) -> list[Word]:
    """Parse ``(..)(..)`` groups; whitespace between groups is ignored."""
    stripped = "".join(text.split())
    groups = _GROUP.findall(stripped)
    if "".join(f"({g})" for g in groups) != stripped:
        raise ValueError(f"bad multicyclic sequence {text!r}")
    return [parse_word(g) for g in groups]
