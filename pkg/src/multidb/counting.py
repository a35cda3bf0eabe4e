"""Closed-form counts of multi de Bruijn sequences and of spanning trees and
Eulerian cycles in the multi de Bruijn graph G(m,q,k).

Everything is exact integer arithmetic. Graphs are never built here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .numtheory import divisors, exact_div, mobius, multinomial_equal, totient
from .sequences import Params


@dataclass(frozen=True)
class DBGraphStats:
    """Shape of G(m,q,k): q^(k-1) vertices, each with in/out degree mq."""

    vertices: int
    out_degree: int
    edge_multiplicity: int

    @classmethod
    def of(cls, p: Params) -> "DBGraphStats":
        return cls(vertices=p.q ** (p.k - 1), out_degree=p.m * p.q, edge_multiplicity=p.m)


def _with(p: Params, m: int) -> Params:
    return Params(m, p.q, p.k)


def count_W(p: Params) -> int:
    """((mq)!/m!^q)^(q^(k-1))."""
    return multinomial_equal(p.m, p.q) ** (p.q ** (p.k - 1))


def count_linear(p: Params) -> int:
    return count_W(p)


def count_linearized(p: Params) -> int:
    return count_W(p)


def count_multicyclic(p: Params) -> int:
    return count_W(p)


def count_linearized_starting(p: Params) -> int:
    """Linearized sequences that begin with a fixed k-mer."""
    return exact_div(count_W(p), p.q**p.k)


def count_cyclic(p: Params) -> int:
    total = sum(totient(p.m // r) * count_W(_with(p, r)) for r in divisors(p.m))
    return exact_div(total, p.m * p.q**p.k)


def _check_order(p: Params, d: int) -> None:
    if d < 1 or p.m % d:
        raise ValueError("order must divide multiplicity")


def _mobius_sum(p: Params, d: int) -> int:
    md = p.m // d
    return sum(mobius(r) * count_W(_with(p, md // r)) for r in divisors(md))


def count_cyclic_order(p: Params, d: int) -> int:
    """Cyclic sequences whose rotation order is exactly ``d``."""
    _check_order(p, d)
    return exact_div(_mobius_sum(p, d), (p.m // d) * p.q**p.k)


def count_linearized_starting_order(p: Params, d: int) -> int:
    """Linearizations starting with a fixed k-mer whose order is exactly ``d``."""
    _check_order(p, d)
    return exact_div(_mobius_sum(p, d), p.q**p.k)


def count_spanning_trees(p: Params) -> int:
    """Arborescences of G(m,q,k) directed toward any fixed root."""
    n = p.q ** (p.k - 1)
    return exact_div((p.m * p.q) ** (n - 1), n)


def count_eulerian_fixed_edge(p: Params) -> int:
    """Eulerian cycles of G(m,q,k) (edges distinguishable) with a given first edge."""
    n = p.q ** (p.k - 1)
    return exact_div(factorial(p.m * p.q) ** n, p.m * p.q**p.k)


def count_eulerian_best(p: Params) -> int:
    """Same count assembled as trees times prod (outdeg-1)!."""
    n = p.q ** (p.k - 1)
    return count_spanning_trees(p) * factorial(p.m * p.q - 1) ** n


COUNTERS = {
    "linear": count_linear,
    "linearized": count_linearized,
    "linearized-start": count_linearized_starting,
    "cyclic": count_cyclic,
    "multicyclic": count_multicyclic,
    "spanning-trees": count_spanning_trees,
    "eulerian-fixed-edge": count_eulerian_fixed_edge,
}
