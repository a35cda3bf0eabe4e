"""Command-line interface: ``multidb <subcommand> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a mismatch and 2 on
argument errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from typing import Callable, Iterable

from . import counting, enumeration, randomgen
from .ebwt import bwt, ebwt, inverse_bwt, inverse_ebwt
from .enumeration import BudgetExceeded, SearchBudget
from .graphcycles import UnbalancedGraph, count_aperiodic_multisets, parse_graph
from .sequences import (
    Params,
    format_cycle,
    format_multicycle,
    format_word,
    is_member,
    parse_multicycle,
    parse_word,
    rotation_order,
)

ENV_BUDGET = "MULTIDB_MAX_SPACE_BITS"

COUNT_TYPES = (
    "linear", "linearized", "linearized-start", "cyclic", "cyclic-order",
    "multicyclic", "spanning-trees", "eulerian-fixed-edge",
)
ENUM_TYPES = ("cyclic", "linearized-start", "linear", "multicyclic")
RANDOM_TYPES = ("linear", "linearized", "cyclic", "multicyclic")


class UsageError(Exception):
    pass


def _default_bits() -> int:
    raw = os.environ.get(ENV_BUDGET)
    if raw is None:
        return enumeration.DEFAULT_MAX_SPACE_BITS
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_BUDGET} must be an integer, got {raw!r}") from None


def _params(args) -> Params:
    return Params(args.m, args.q, args.k)


def _kmer(text: str | None, p: Params):
    if text is None:
        return None
    y = parse_word(text)
    if len(y) != p.k:
        raise UsageError(f"--y must have length k={p.k}")
    return y


def _emit(args, payload: dict, lines: Iterable[str]) -> None:
    if args.format == "json":
        payload = dict(payload)
        payload["items"] = list(lines)
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def cmd_count(args) -> int:
    p = _params(args)
    if args.type == "cyclic-order":
        if args.d is None:
            raise UsageError("--d is required with --type cyclic-order")
        value = counting.count_cyclic_order(p, args.d)
    else:
        if args.d is not None:
            raise UsageError("--d only applies to --type cyclic-order")
        value = counting.COUNTERS[args.type](p)
    if args.format == "json":
        print(json.dumps({"type": args.type, "m": p.m, "q": p.q, "k": p.k, "d": args.d, "value": str(value)}))
    else:
        print(value)
    return 0


def _budget(args) -> SearchBudget:
    bits = args.max_space_bits if args.max_space_bits is not None else _default_bits()
    return SearchBudget(max_space_bits=bits, limit=args.limit)


def cmd_enumerate(args) -> int:
    p = _params(args)
    budget = _budget(args)
    if args.y is not None and args.type != "linearized-start":
        raise UsageError("--y only applies to --type linearized-start")
    if args.type == "cyclic":
        lines = (format_cycle(s, p.q) for s in enumeration.enumerate_cyclic(p, budget))
    elif args.type == "linearized-start":
        y = _kmer(args.y, p)
        lines = (format_word(s, p.q) for s in enumeration.enumerate_linearized_starting(p, y, budget))
    elif args.type == "linear":
        lines = (format_word(s, p.q) for s in enumeration.enumerate_linear(p, budget))
    else:
        lines = (format_multicycle(s, p.q) for s in enumeration.enumerate_multicyclic(p, budget))
    _emit(args, {"type": args.type, "m": p.m, "q": p.q, "k": p.k}, lines)
    return 0


def cmd_random(args) -> int:
    p = _params(args)
    if args.count < 1:
        raise UsageError("--count must be positive")
    seed = args.seed
    if seed is None:
        seed = randomgen.fresh_seed()
        print(f"seed: {seed}", file=sys.stderr)
    rng = randomgen.make_rng(seed)
    if args.y is not None and args.type != "linearized":
        raise UsageError("--y only applies to --type linearized")
    y = _kmer(args.y, p)
    draw: Callable[[], str]
    if args.type == "linear":
        draw = lambda: format_word(randomgen.random_linear(p, rng), p.q)  # noqa: E731
    elif args.type == "linearized":
        draw = lambda: format_word(randomgen.random_linearized(p, y, rng), p.q)  # noqa: E731
    elif args.type == "cyclic":
        draw = lambda: format_cycle(randomgen.random_cyclic(p, rng), p.q)  # noqa: E731
    else:
        draw = lambda: format_multicycle(randomgen.random_multicyclic(p, rng), p.q)  # noqa: E731
    _emit(args, {"type": args.type, "m": p.m, "q": p.q, "k": p.k, "seed": str(seed)},
          (draw() for _ in range(args.count)))
    return 0


def _print_result(args, value: str) -> int:
    if args.format == "json":
        print(json.dumps({"result": value}))
    else:
        print(value)
    return 0


def cmd_ebwt(args) -> int:
    return _print_result(args, format_word(ebwt(parse_multicycle(args.sigma))))


def cmd_iebwt(args) -> int:
    return _print_result(args, format_multicycle(inverse_ebwt(parse_word(args.word))))


def cmd_bwt(args) -> int:
    s = parse_word(args.word)
    if not s:
        raise UsageError("empty sequence")
    return _print_result(args, format_word(bwt(s)))


def cmd_ibwt(args) -> int:
    w = parse_word(args.word)
    if not w:
        raise UsageError("empty sequence")
    s = inverse_bwt(w)
    return _print_result(args, "NONE" if s is None else format_word(s))


def cmd_graph_count(args) -> int:
    with open(args.path, encoding="utf-8") as fh:
        g = parse_graph(fh.read())
    return _print_result(args, str(count_aperiodic_multisets(g)))


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def verify(p: Params, budget: SearchBudget) -> list[tuple[str, str, str]]:
    """Cross-check every closed form against exhaustive enumeration.

    Returns (status, name, detail) rows with status PASS, FAIL or SKIP.
    """
    from . import reference
    from .numtheory import divisors

    rows: list[tuple[str, str, str]] = []

    def check(name, ok, detail=""):
        rows.append(("PASS" if ok else "FAIL", name, detail))

    def skipped(name, err):
        rows.append(("SKIP", name, str(err)))

    check("sum over orders equals cyclic count",
          sum(counting.count_cyclic_order(p, d) for d in divisors(p.m)) == counting.count_cyclic(p))
    check("linearized-start orders sum",
          sum(counting.count_linearized_starting_order(p, d) for d in divisors(p.m))
          == counting.count_linearized_starting(p))
    check("BEST product equals Eulerian count",
          counting.count_eulerian_best(p) == counting.count_eulerian_fixed_edge(p))
    check("mixture weights total m*|C|",
          sum(randomgen.cyclic_mixture_weights(p).values()) == p.m * counting.count_cyclic(p))

    try:
        cyc = list(enumeration.enumerate_cyclic(p, budget))
        want = counting.count_cyclic(p)
        check("cyclic count", len(cyc) == want, f"enumerated {len(cyc)}, formula {want}")
        check("cyclic membership", all(is_member(s, "cyclic", p) for s in cyc))
        hist = Counter(rotation_order(s) for s in cyc)
        expect = {d: counting.count_cyclic_order(p, d) for d in divisors(p.m)}
        check("cyclic order histogram",
              all(hist.get(d, 0) == v for d, v in expect.items()) and set(hist) <= set(expect),
              f"enumerated {dict(sorted(hist.items()))}, formula {expect}")
    except BudgetExceeded as err:
        skipped("cyclic enumeration", err)
        cyc = None

    try:
        lin0 = list(enumeration.enumerate_linearized_starting(p, None, budget))
        want = counting.count_linearized_starting(p)
        check("linearized-start count", len(lin0) == want, f"enumerated {len(lin0)}, formula {want}")
        check("linearized membership", all(is_member(s, "linearized", p) for s in lin0))
    except BudgetExceeded as err:
        skipped("linearized-start enumeration", err)
        lin0 = None

    try:
        lin = list(enumeration.enumerate_linear(p, budget))
        want = counting.count_linear(p)
        check("linear count", len(lin) == want, f"enumerated {len(lin)}, formula {want}")
        check("linear membership", all(is_member(s, "linear", p) for s in lin))
    except BudgetExceeded as err:
        skipped("linear enumeration", err)
        lin = None

    try:
        pairs = list(enumeration.multicyclic_pairs(p, budget))
        want = counting.count_multicyclic(p)
        sigmas = [s for _, s in pairs]
        check("multicyclic count", len(set(sigmas)) == len(sigmas) == want,
              f"enumerated {len(set(sigmas))} distinct of {len(sigmas)}, formula {want}")
        check("multicyclic membership", all(is_member(s, "multicyclic", p) for s in sigmas))
    except BudgetExceeded as err:
        skipped("multicyclic enumeration", err)
        pairs = None

    if (p.m, p.q, p.k) == (2, 2, 2):
        if lin0 is not None:
            got = {d: sorted(format_word(s) for s in lin0 if rotation_order(s) == d) for d in (1, 2)}
            want_a = {d: sorted(v) for d, v in reference.LINEARIZED_00_2_2_2.items()}
            check("table of linearizations starting 00", got == want_a)
        if cyc is not None:
            got = {d: [format_word(s) for s in cyc if rotation_order(s) == d] for d in (1, 2)}
            check("table of cyclic sequences", got == reference.CYCLIC_2_2_2)
        if lin is not None:
            check("table of linear sequences", [format_word(s) for s in lin] == reference.LINEAR_2_2_2)
        if pairs is not None:
            got = sorted(format_multicycle(s) for _, s in pairs)
            check("table of multicyclic sequences", got == sorted(reference.MULTICYCLIC_2_2_2))
            got_pairs = [(format_word(w), format_multicycle(s)) for w, s in pairs]
            want_pairs = [(w, s) for w, s, _ in reference.EBWT_PAIRS_2_2_2]
            check("table of transform pairs", got_pairs == want_pairs)
    return rows


def cmd_verify(args) -> int:
    p = _params(args)
    rows = verify(p, _budget(args))
    failed = any(status == "FAIL" for status, _, _ in rows)
    if args.format == "json":
        print(json.dumps({"m": p.m, "q": p.q, "k": p.k, "ok": not failed,
                          "checks": [{"status": s, "name": n, "detail": d} for s, n, d in rows]}))
    else:
        print(f"verify {p}")
        for status, name, detail in rows:
            print(f"{status} {name}" + (f": {detail}" if detail else ""))
        print("FAIL" if failed else "PASS")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_params(sp) -> None:
    sp.add_argument("-m", type=int, required=True, help="multiplicity")
    sp.add_argument("-q", type=int, required=True, help="alphabet size")
    sp.add_argument("-k", type=int, required=True, help="word size")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multidb", description="Count, enumerate, sample and transform multi de Bruijn sequences.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    # also accepted after the subcommand; SUPPRESS keeps the top-level value otherwise
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[fmt])


    sp = add("count", help="closed-form counts")
    sp.add_argument("--type", choices=COUNT_TYPES, required=True)
    _add_params(sp)
    sp.add_argument("--d", type=int, help="rotation order (with --type cyclic-order)")
    sp.set_defaults(func=cmd_count)

    sp = add("enumerate", help="list every sequence, one per line")
    sp.add_argument("--type", choices=ENUM_TYPES, required=True)
    _add_params(sp)
    sp.add_argument("--y", help="initial k-mer for linearized-start (default 0^k)")
    sp.add_argument("--limit", type=int)
    sp.add_argument("--max-space-bits", type=int)
    sp.set_defaults(func=cmd_enumerate)

    sp = add("random", help="uniform random sequences")
    sp.add_argument("--type", choices=RANDOM_TYPES, required=True)
    _add_params(sp)
    sp.add_argument("--y", help="initial k-mer for linearized (default 0^k)")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--count", type=int, default=1)
    sp.set_defaults(func=cmd_random)

    sp = add("ebwt", help="extended BWT of a multicyclic sequence")
    sp.add_argument("sigma")
    sp.set_defaults(func=cmd_ebwt)
    sp = add("iebwt", help="inverse extended BWT")
    sp.add_argument("word")
    sp.set_defaults(func=cmd_iebwt)
    sp = add("bwt", help="classic BWT (no terminator)")
    sp.add_argument("word")
    sp.set_defaults(func=cmd_bwt)
    sp = add("ibwt", help="inverse BWT, or NONE")
    sp.add_argument("word")
    sp.set_defaults(func=cmd_ibwt)

    sp = add("graph-count", help="count aperiodic cycle multisets of a graph fixture")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_graph_count)

    sp = add("verify", help="cross-check formulas against enumeration")
    _add_params(sp)
    sp.add_argument("--max-space-bits", type=int)
    sp.set_defaults(func=cmd_verify, limit=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BudgetExceeded, UnbalancedGraph, ValueError, OSError) as err:
        print(f"multidb: error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
