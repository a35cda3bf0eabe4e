"""Uniform random multi de Bruijn sequences.

Linear and linearized sequences come from a uniform random Eulerian cycle
of G(m,q,k): a random arborescence (backward random walk on G(1,q,k)) fixes
the last exit from every non-root vertex, the rest of each vertex's exit
order is a uniform arrangement of the remaining symbols, and the cycle is
spelled by following the exit orders. Cyclic sequences mix over divisors r
of m with exact integer weights so that every cycle is equally likely
whatever its rotation order. Multicyclic sequences are inverse EBWTs of
q^(k-1) independent uniform codewords.

Randomness comes from :class:`random.Random` (Mersenne Twister, seeded with
an integer). ``randrange`` on an arbitrary-precision bound draws 32-bit
chunks and rejects, so integer weights are sampled exactly.
"""

from __future__ import annotations

import random
from typing import Sequence

from .counting import count_linearized_starting
from .ebwt import inverse_ebwt
from .numtheory import divisors, totient
from .sequences import Multicycle, Params, Word, canonical_cycle

# liveness guard for the backward walk; cover times here are tiny
MAX_WALK_STEPS = 10**9


def fresh_seed() -> int:
    """64-bit seed from the operating system's entropy source."""
    return random.SystemRandom().getrandbits(64)


def make_rng(seed: int) -> random.Random:
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    return random.Random(seed)


def _check_kmer(y: Sequence[int], p: Params) -> Word:
    y = tuple(y)
    if len(y) != p.k:
        raise ValueError(f"initial k-mer must have length k={p.k}")
    if any(not 0 <= c < p.q for c in y):
        raise ValueError(f"initial k-mer has a symbol out of range for q={p.q}")
    return y


def random_arborescence(q: int, k: int, root: Sequence[int], rng: random.Random) -> dict[Word, int]:
    """Uniform spanning tree of G(1,q,k) directed toward ``root``.

    Returns a map from each non-root (k-1)-mer x to the symbol b of its tree
    edge x -> x[1:]+b. Loops are allowed as incoming edges during the walk.
    """
    root = tuple(root)
    if len(root) != k - 1:
        raise ValueError(f"root must have length k-1={k - 1}")
    n = q ** (k - 1)
    tree: dict[Word, int] = {}
    if n == 1:
        return tree
    seen = {root}
    v = root
    steps = 0
    while len(seen) < n:
        steps += 1
        if steps > MAX_WALK_STEPS:
            raise RuntimeError(f"random walk did not cover G(1,{q},{k}) in {MAX_WALK_STEPS} steps")
        # incoming edge b+v comes from vertex (b+v)[:-1]
        b = rng.randrange(q)
        u = (b,) + v[:-1]
        if u not in seen:
            seen.add(u)
            tree[u] = v[-1]
        v = u
    return tree


def random_codeword(m: int, q: int, rng: random.Random, first: int | None = None, last: int | None = None) -> Word:
    """Uniform arrangement of 0^m ... (q-1)^m, optionally with a forced end."""
    pool = [c for c in range(q) for _ in range(m)]
    forced = first if first is not None else last
    if forced is not None:
        pool.remove(forced)
    rng.shuffle(pool)
    if first is not None:
        return (first, *pool)
    if last is not None:
        return (*pool, last)
    return tuple(pool)


def random_exit_orders(p: Params, y: Sequence[int], tree: dict[Word, int], rng: random.Random) -> dict[Word, Word]:
    """Exit order g(x) for every (k-1)-mer x.

    g(v) starts with the last symbol of y at the root v = y[:-1]; every other
    g(x) ends with the symbol of x's tree edge.
    """
    y = _check_kmer(y, p)
    v, a = y[:-1], y[-1]
    g = {v: random_codeword(p.m, p.q, rng, first=a)}
    for x, b in sorted(tree.items()):
        g[x] = random_codeword(p.m, p.q, rng, last=b)
    return g


def spell_from_exit_orders(p: Params, y: Sequence[int], g: dict[Word, Word]) -> Word:
    """Follow exit orders from the root and spell the linear sequence."""
    y = _check_kmer(y, p)
    v = y[:-1]
    used = dict.fromkeys(g, 0)
    out = list(v)
    x = v
    total = p.length
    for _ in range(total):
        j = used[x]
        if j >= len(g[x]):
            raise AssertionError(f"exit orders got stuck at vertex {x}")
        c = g[x][j]
        used[x] = j + 1
        out.append(c)
        x = (x + (c,))[1:]
    if used[x] != len(g[x]):
        raise AssertionError("exit orders do not describe an Eulerian cycle")
    return tuple(out)


def _sample_linear_from(p: Params, y: Word, rng: random.Random) -> Word:
    tree = random_arborescence(p.q, p.k, y[:-1], rng)
    g = random_exit_orders(p, y, tree, rng)
    return spell_from_exit_orders(p, y, g)


def random_linear(p: Params, rng: random.Random) -> Word:
    """Uniform element of the linear sequences L(m,q,k)."""
    y = tuple(rng.randrange(p.q) for _ in range(p.k))
    return _sample_linear_from(p, y, rng)


def random_linearized(p: Params, y: Sequence[int] | None, rng: random.Random) -> Word:
    """Uniform linearization starting with ``y`` (default 0^k)."""
    y = (0,) * p.k if y is None else _check_kmer(y, p)
    s = _sample_linear_from(p, y, rng)
    return s[:p.length]


def cyclic_mixture_weights(p: Params) -> dict[int, int]:
    """Integer weight phi(m/r) * |LC_y(r,q,k)| for every divisor r of m."""
    return {r: totient(p.m // r) * count_linearized_starting(Params(r, p.q, p.k)) for r in divisors(p.m)}


def random_cyclic(p: Params, rng: random.Random) -> Word:
    """Uniform cyclic multi de Bruijn sequence, as its least rotation."""
    weights = cyclic_mixture_weights(p)
    x = rng.randrange(sum(weights.values()))
    for r, w in weights.items():
        if x < w:
            break
        x -= w
    t = random_linearized(Params(r, p.q, p.k), None, rng)
    return canonical_cycle(t * (p.m // r))


def random_multicyclic(p: Params, rng: random.Random) -> Multicycle:
    """Uniform multicyclic de Bruijn sequence."""
    w: list[int] = []
    for _ in range(p.q ** (p.k - 1)):
        w.extend(random_codeword(p.m, p.q, rng))
    return inverse_ebwt(w)

