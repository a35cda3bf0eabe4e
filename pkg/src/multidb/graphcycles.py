"""Cycle partitions of directed multigraphs with edge multiplicities.

A :class:`NuGraph` is a multigraph G with a multiplicity nu_e on each edge.
Expanding it gives H, where edge e becomes nu_e distinguishable copies.
Edge successor maps of H (a bijection In(x) -> Out(x) at each vertex) are
the same thing as cycle partitions of H; projecting back to G and splitting
periodic cycles yields the multisets of aperiodic cycles counted by
:func:`count_aperiodic_multisets`.

The brute-force routines here are small-scale oracles and carry size guards.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Hashable, Iterable, Iterator

from .numtheory import exact_div
from .sequences import Params, all_kmers, canonical_multicycle

Vertex = Hashable
EdgeId = Hashable


class UnbalancedGraph(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    tail: Vertex
    head: Vertex
    id: EdgeId


@dataclass(frozen=True)
class NuGraph:
    """Directed multigraph with a nonnegative multiplicity on every edge."""

    vertices: tuple
    edges: tuple[Edge, ...]
    nu: dict = field(hash=False)

    def __post_init__(self):
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise ValueError("edge ids must be distinct")
        vs = set(self.vertices)
        for e in self.edges:
            if e.tail not in vs or e.head not in vs:
                raise ValueError(f"edge {e.id} uses an unknown vertex")
            if self.nu.get(e.id, 0) < 0:
                raise ValueError(f"negative multiplicity on edge {e.id}")

    @classmethod
    def from_edges(cls, triples: Iterable[tuple[Vertex, Vertex, EdgeId, int]]) -> "NuGraph":
        edges, nu, verts = [], {}, {}
        for tail, head, eid, mult in triples:
            edges.append(Edge(tail, head, eid))
            nu[eid] = mult
            verts.setdefault(tail, None)
            verts.setdefault(head, None)
        return cls(tuple(verts), tuple(edges), nu)

    def outdeg(self, x: Vertex) -> int:
        return sum(self.nu.get(e.id, 0) for e in self.edges if e.tail == x)

    def indeg(self, x: Vertex) -> int:
        return sum(self.nu.get(e.id, 0) for e in self.edges if e.head == x)

    def is_balanced(self) -> bool:
        return all(self.indeg(x) == self.outdeg(x) for x in self.vertices)

    def edge(self, eid: EdgeId) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise KeyError(eid)


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> NuGraph:
    """Read "tail head edge_id nu" lines; '#' starts a comment."""
    triples = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"line {lineno}: expected 'tail head edge_id nu'")
        try:
            mult = int(parts[3])
        except ValueError:
            raise ValueError(f"line {lineno}: multiplicity must be an integer") from None
        triples.append((parts[0], parts[1], parts[2], mult))
    return NuGraph.from_edges(triples)


def format_graph(g: NuGraph) -> str:
    return "".join(f"{e.tail} {e.head} {e.id} {g.nu.get(e.id, 0)}\n" for e in g.edges)


def de_bruijn_nugraph(p: Params) -> NuGraph:
    """G(1,q,k) with every edge (a k-mer) carrying multiplicity m."""
    edges = [(y[:-1], y[1:], y, p.m) for y in all_kmers(p.q, p.k)]
    g = NuGraph.from_edges(edges)
    # isolated vertices cannot occur, but keep the canonical vertex order
    return NuGraph(tuple(all_kmers(p.q, p.k - 1)), g.edges, g.nu)


def two_cycle_graph(a: int, b: int) -> NuGraph:
    """Five-vertex graph whose edges 1,2,3 carry ``a`` and 4..7 carry ``b``.

    1,2,3 and 4,5,6,7 are cycles; 1,5,6,7,4,2,3 is a closed walk. Out-degrees
    are a, a+b, b, b, a+b.
    """
    return NuGraph.from_edges([
        ("W", "Y", "1", a),
        ("Y", "Z", "2", a),
        ("Z", "W", "3", a),
        ("X", "Y", "4", b),
        ("Y", "U", "5", b),
        ("U", "W", "6", b),
        ("W", "X", "7", b),
    ])


# ---------------------------------------------------------------------------
# expansion and closed forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Expanded:
    """H: every edge of G copied nu_e times; copies are (edge_id, index)."""

    vertices: tuple
    edges: tuple[Edge, ...]

    def project(self, hid) -> EdgeId:
        return hid[0]

    def out_edges(self) -> dict:
        out = defaultdict(list)
        for e in self.edges:
            out[e.tail].append(e.id)
        return out

    def in_edges(self) -> dict:
        inn = defaultdict(list)
        for e in self.edges:
            inn[e.head].append(e.id)
        return inn

    def outdeg(self, x) -> int:
        return sum(1 for e in self.edges if e.tail == x)

    def indeg(self, x) -> int:
        return sum(1 for e in self.edges if e.head == x)

    def head(self, hid):
        return self._heads[hid]

    def tail(self, hid):
        return self._tails[hid]

    def __post_init__(self):
        object.__setattr__(self, "_heads", {e.id: e.head for e in self.edges})
        object.__setattr__(self, "_tails", {e.id: e.tail for e in self.edges})


def copy_label(hid) -> str:
    """Name a copy like 2a, 2b, ... (index beyond 25 falls back to 2#26)."""
    eid, j = hid
    return f"{eid}{chr(ord('a') + j)}" if j < 26 else f"{eid}#{j}"


def expand(g: NuGraph) -> Expanded:
    edges = tuple(
        Edge(e.tail, e.head, (e.id, j)) for e in g.edges for j in range(g.nu.get(e.id, 0))
    )
    return Expanded(g.vertices, edges)


def _require_balanced(h: Expanded) -> None:
    for x in h.vertices:
        if h.indeg(x) != h.outdeg(x):
            raise UnbalancedGraph("graph not balanced")


def count_cycle_partitions(h: Expanded) -> int:
    """prod over vertices of outdeg(x)!."""
    _require_balanced(h)
    return prod(factorial(h.outdeg(x)) for x in h.vertices)


def count_aperiodic_multisets(g: NuGraph) -> int:
    """Multisets of aperiodic cycles using each edge e exactly nu_e times."""
    if not g.is_balanced():
        raise UnbalancedGraph("graph not balanced")
    top = prod(factorial(g.outdeg(x)) for x in g.vertices)
    return exact_div(top, prod(factorial(g.nu.get(e.id, 0)) for e in g.edges))


# ---------------------------------------------------------------------------
# successor maps and cycle partitions
# ---------------------------------------------------------------------------

def enumerate_successor_maps(h: Expanded, cap: int = 10**6) -> Iterator[dict]:
    """Every edge successor map of H, as a dict from edge to next edge."""
    total = count_cycle_partitions(h)
    if total > cap:
        raise ValueError(f"{total} successor maps exceed the cap of {cap}")
    ins, outs = h.in_edges(), h.out_edges()
    per_vertex = []
    for x in h.vertices:
        inc = ins.get(x, [])
        per_vertex.append([list(zip(inc, perm)) for perm in itertools.permutations(outs.get(x, []))])
    for choice in itertools.product(*per_vertex):
        f = {}
        for pairs in choice:
            f.update(pairs)
        yield f


def partition_from_successor(f: dict) -> list[tuple]:
    """Permutation cycles of f, each starting at its smallest edge."""
    seen = set()
    cycles = []
    for start in sorted(f, key=repr):
        if start in seen:
            continue
        cyc = []
        e = start
        while e not in seen:
            seen.add(e)
            cyc.append(e)
            e = f[e]
        cycles.append(tuple(cyc))
    return cycles


def successor_from_partition(cycles: Iterable[tuple]) -> dict:
    f = {}
    for cyc in cycles:
        for i, e in enumerate(cyc):
            f[e] = cyc[(i + 1) % len(cyc)]
    return f


def _edge_period(cyc: tuple) -> int:
    n = len(cyc)
    for p in range(1, n + 1):
        if n % p == 0 and all(cyc[i] == cyc[(i + p) % n] for i in range(n)):
            return p
    return n


def _canonical_edge_cycle(cyc: tuple) -> tuple:
    # least rotation by the string form of edge ids keeps mixed id types orderable
    keys = [repr(e) for e in cyc]
    n = len(cyc)
    best = min(range(n), key=lambda j: keys[j:] + keys[:j])
    return cyc[best:] + cyc[:best]


def split_aperiodic(cycles: Iterable[tuple]) -> tuple[tuple, ...]:
    """Cut each cycle to its period, repeated n/p times, canonicalized."""
    out = []
    for cyc in cycles:
        cyc = tuple(cyc)
        p = _edge_period(cyc)
        piece = _canonical_edge_cycle(cyc[:p])
        out.extend([piece] * (len(cyc) // p))
    return tuple(sorted(out, key=lambda c: [repr(e) for e in c]))


def project(h: Expanded, cycles: Iterable[tuple]) -> list[tuple]:
    return [tuple(h.project(e) for e in cyc) for cyc in cycles]


def brute_force_aperiodic_multisets(g: NuGraph, cap: int = 10**6) -> set:
    """All Split(pi(C_f)) over successor maps f of the expansion."""
    h = expand(g)
    return {
        split_aperiodic(project(h, partition_from_successor(f)))
        for f in enumerate_successor_maps(h, cap)
    }


def equivalence_class_sizes(g: NuGraph, cap: int = 10**6) -> dict:
    """Group successor maps by their projection e -> pi(f(e))."""
    h = expand(g)
    sizes: dict = defaultdict(int)
    for f in enumerate_successor_maps(h, cap):
        key = tuple(sorted((repr(e), repr(h.project(t))) for e, t in f.items()))
        sizes[key] += 1
    return dict(sizes)


# ---------------------------------------------------------------------------
# backtracking oracles for the BEST-theorem counts
# ---------------------------------------------------------------------------

MAX_EULER_EDGES = 24
MAX_TREE_VERTICES = 12


def brute_force_eulerian_count(h: Expanded, first_edge) -> int:
    """Eulerian circuits of H (edges distinguishable) beginning with ``first_edge``."""
    n = len(h.edges)
    if n > MAX_EULER_EDGES:
        raise ValueError(f"{n} edges exceed the backtracking guard of {MAX_EULER_EDGES}")
    outs = h.out_edges()
    start = h.tail(first_edge)
    used = {first_edge}

    def rec(x, depth):
        if depth == n:
            return 1 if x == start else 0
        total = 0
        for e in outs.get(x, []):
            if e not in used:
                used.add(e)
                total += rec(h.head(e), depth + 1)
                used.remove(e)
        return total

    return rec(h.head(first_edge), 1)


def brute_force_arborescences(h: Expanded, root) -> int:
    """Spanning trees of H with every vertex directed toward ``root``."""
    others = [x for x in h.vertices if x != root]
    if len(h.vertices) > MAX_TREE_VERTICES:
        raise ValueError(f"{len(h.vertices)} vertices exceed the guard of {MAX_TREE_VERTICES}")
    outs = h.out_edges()
    choices = [[e for e in outs.get(x, []) if h.head(e) != x] for x in others]
    count = 0
    for pick in itertools.product(*choices):
        parent = {x: h.head(e) for x, e in zip(others, pick)}
        ok = True
        for x in others:
            seen = set()
            while x != root:
                if x in seen:
                    ok = False
                    break
                seen.add(x)
                x = parent[x]
            if not ok:
                break
        count += ok
    return count


def adjacency_matrix(h: Expanded) -> list[list[int]]:
    index = {x: i for i, x in enumerate(h.vertices)}
    n = len(index)
    a = [[0] * n for _ in range(n)]
    for e in h.edges:
        a[index[e.tail]][index[e.head]] += 1
    return a


def matrix_power(a: list[list[int]], e: int) -> list[list[int]]:
    n = len(a)
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(e):
        result = [[sum(result[i][t] * a[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    return result


def edge_cycles_to_words(cycles: Iterable[tuple]) -> tuple:
    """Map cycles of k-mer edges in G(1,q,k) to words via each edge's first symbol."""
    return canonical_multicycle([tuple(e[0] for e in cyc) for cyc in cycles])
