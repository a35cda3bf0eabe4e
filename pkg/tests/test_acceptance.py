"""Acceptance criteria, one PASS/FAIL line each.

Under pytest the lines appear in an "acceptance criteria" summary section;
``python tests/test_acceptance.py`` prints them as each check finishes.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from collections import Counter
from math import comb
from pathlib import Path

from scipy.stats import chisquare

from multidb import reference
from multidb.counting import (
    count_cyclic,
    count_eulerian_fixed_edge,
    count_linearized_starting,
    count_multicyclic,
    count_spanning_trees,
)
from multidb.ebwt import (
    bwt,
    ebwt,
    inverse_bwt,
    inverse_ebwt,
    inverse_ebwt_via_table,
    power_multicycle,
    power_word,
)
from multidb.enumeration import (
    enumerate_cyclic,
    enumerate_linear,
    enumerate_linearized_starting,
    multicyclic_pairs,
    search_space,
)
from multidb.graphcycles import (
    brute_force_aperiodic_multisets,
    brute_force_arborescences,
    brute_force_eulerian_count,
    count_aperiodic_multisets,
    de_bruijn_nugraph,
    edge_cycles_to_words,
    expand,
    two_cycle_graph,
)
from multidb.randomgen import cyclic_mixture_weights, make_rng, random_cyclic, random_linearized, random_multicyclic
from multidb.sequences import Params, canonical_multicycle, format_cycle, format_multicycle, format_word, is_primitive, rotation_order

GOLDEN = Path(__file__).parent / "data" / "cyclic_2_2_3.txt"

KNOWN_CYCLIC = {
    (2, 2, 2): 5, (3, 2, 2): 34, (4, 2, 2): 309, (5, 2, 2): 3176, (6, 2, 2): 35594,
    (7, 2, 2): 420666, (8, 2, 2): 5176309, (2, 3, 2): 40512, (2, 2, 3): 82,
    (3, 2, 3): 6668, (4, 2, 3): 750354, (2, 2, 4): 52496,
}


# lines collected for the pytest terminal summary (see conftest.py)
RESULTS: list[str] = []


def report(label: str, ok: bool, detail: str, seconds: float) -> None:
    line = f"{'PASS' if ok else 'FAIL'} {label}: {detail} [{seconds:.2f}s]"
    RESULTS.append(line)
    print(line, flush=True)


def run_check(label, fn, time_limit=None):
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    if time_limit is not None and dt >= time_limit:
        ok = False
        detail += f"; runtime {dt:.2f}s over {time_limit}s"
    report(label, ok, detail, dt)
    return ok, detail


# ---------------------------------------------------------------------------

def check_known_counts():
    bad = {mqk: count_cyclic(Params(*mqk)) for mqk in KNOWN_CYCLIC}
    bad = {mqk: v for mqk, v in bad.items() if v != KNOWN_CYCLIC[mqk]}
    return not bad, f"{len(KNOWN_CYCLIC) - len(bad)}/{len(KNOWN_CYCLIC)} cyclic counts exact" + (f", wrong {bad}" if bad else "")


def small_parameter_sets(max_bits: int = 24):
    """Every (m,q,k) with q >= 2 and cyclic search space <= 2^max_bits."""
    # the exponent m*q^k - k + 1 must itself be at most max_bits since q >= 2
    out = []
    for q in range(2, max_bits + 1):
        for k in itertools.takewhile(lambda k: q**k - k + 1 <= max_bits, itertools.count(1)):
            for m in itertools.takewhile(lambda m: m * q**k - k + 1 <= max_bits, itertools.count(1)):
                if search_space(Params(m, q, k)) <= 2**max_bits:
                    out.append((m, q, k))
    return out


def check_enumeration_vs_formula():
    sets = small_parameter_sets()
    # q = 1 has a one-point search space for every m and k
    sets += [(m, 1, k) for m in range(1, 6) for k in range(1, 6)]
    mismatches = []
    for mqk in sets:
        p = Params(*mqk)
        cyc = sum(1 for _ in enumerate_cyclic(p))
        lin = sum(1 for _ in enumerate_linearized_starting(p))
        if cyc != count_cyclic(p) or lin != count_linearized_starting(p):
            mismatches.append((mqk, cyc, lin))
    golden = GOLDEN.read_text().split()
    got = [format_cycle(s) for s in enumerate_cyclic(Params(2, 2, 3))]
    golden_ok = got == golden and len(golden) == 82
    ok = not mismatches and golden_ok
    detail = (f"{len(sets) - len(mismatches)}/{len(sets)} parameter sets match (cyclic and linearized-start); "
              f"golden (2,2,3) {'matches' if golden_ok else 'differs'} ({len(got)} sequences)")
    if mismatches:
        detail += f"; mismatches {mismatches[:5]}"
    return ok, detail


def check_tables_2_2_2():
    p = Params(2, 2, 2)
    problems = []
    lin0 = list(enumerate_linearized_starting(p))
    hist_a = Counter(rotation_order(s) for s in lin0)
    want_a = sorted(reference.LINEARIZED_00_2_2_2[1] + reference.LINEARIZED_00_2_2_2[2])
    if sorted(format_word(s) for s in lin0) != want_a or hist_a != {1: 8, 2: 1}:
        problems.append(f"(A) histogram {dict(hist_a)}")
    cyc = list(enumerate_cyclic(p))
    hist_b = Counter(rotation_order(s) for s in cyc)
    want_b = {d: [format_word(s) for s in cyc if rotation_order(s) == d] for d in (1, 2)}
    if want_b != reference.CYCLIC_2_2_2 or hist_b != {1: 4, 2: 1}:
        problems.append(f"(B) histogram {dict(hist_b)}")
    if [format_word(s) for s in enumerate_linear(p)] != reference.LINEAR_2_2_2:
        problems.append("(C) differs")
    pairs = list(multicyclic_pairs(p))
    if sorted(format_multicycle(s) for _, s in pairs) != sorted(reference.MULTICYCLIC_2_2_2):
        problems.append("(D) differs")
    got = [(format_word(w), format_multicycle(s)) for w, s in pairs]
    if got != [(w, s) for w, s, _ in reference.EBWT_PAIRS_2_2_2]:
        problems.append("transform pairs differ")
    # marked rows are exactly those where sigma is one cycle or a power of one
    marked = {w for w, _, star in reference.EBWT_PAIRS_2_2_2 if star}
    powers = {format_word(w) for w, s in pairs if len(set(s)) == 1}
    power_cycles = {format_word(inverse_bwt(w)) for w, s in pairs if len(set(s)) == 1}
    if marked != powers:
        problems.append(f"marked rows {sorted(marked)} vs single-cycle rows {sorted(powers)}")
    if power_cycles != {format_word(s) for s in cyc}:
        problems.append("single-cycle rows do not invert to the cyclic sequences")
    detail = (f"(A) 9 {dict(sorted(hist_a.items()))}, (B) 5 {dict(sorted(hist_b.items()))}, (C) 36, (D) 36, "
              f"36 pairs; {len(marked)} marked rows = {len(powers)} single-cycle/power rows")
    if problems:
        detail += "; " + "; ".join(problems)
    return not problems, detail


def check_ebwt_bijection():
    total = 0
    bad = []
    for q, top in ((2, 10), (3, 6)):
        for n in range(1, top + 1):
            for w in itertools.product(range(q), repeat=n):
                total += 1
                sigma = inverse_ebwt(w)
                if ebwt(sigma) != w:
                    bad.append(("roundtrip", w))
                elif Counter(c for cyc in sigma for c in cyc) != Counter(w):
                    bad.append(("multiset", w))
                elif inverse_ebwt_via_table(w) != sigma:
                    bad.append(("table", w))
    return not bad, f"{total - len(bad)}/{total} words (binary <= 10, ternary <= 6)" + (f"; first bad {bad[0]}" if bad else "")


def check_power_theorems():
    rng = random.Random(20140101)
    bad = []
    n_t = 0
    while n_t < 500:
        q = rng.randint(1, 3)
        t = tuple(rng.randrange(q) for _ in range(rng.randint(1, 8)))
        if not is_primitive(t):
            continue
        n_t += 1
        d = rng.randint(1, 4)
        if bwt(t * d) != power_word(bwt(t), d):
            bad.append(("bwt", t, d))
    for _ in range(500):
        q = rng.randint(1, 3)
        w = tuple(rng.randrange(q) for _ in range(rng.randint(1, 8)))
        sigma = inverse_ebwt(w)
        d = rng.randint(1, 4)
        if ebwt(power_multicycle(sigma, d)) != power_word(ebwt(sigma), d):
            bad.append(("ebwt", sigma, d))
    n_w = 0
    for n in range(1, 9):
        image = {bwt(s) for s in itertools.product((0, 1), repeat=n)}
        for w in itertools.product((0, 1), repeat=n):
            n_w += 1
            sigma = inverse_ebwt(w)
            criterion = len(set(sigma)) == 1
            if criterion != (w in image) or criterion != (inverse_bwt(w) is not None):
                bad.append(("existence", w))
    detail = f"500 bwt powers, 500 ebwt powers, {n_w} existence cases"
    return not bad, detail + (f"; {len(bad)} failures, first {bad[0]}" if bad else ", all agree")


def _uniform_check(name, samples, support, target, tol):
    freq = Counter(samples)
    n = len(samples)
    outside = set(freq) - set(support)
    worst = max(abs(freq[s] / n - target) for s in support)
    pvalue = chisquare([freq[s] for s in support]).pvalue
    ok = not outside and worst <= tol and pvalue > 1e-3
    return ok, f"{name} max|f-{target:.4f}|={worst:.4f} (tol {tol}), chi2 p={pvalue:.3g}"


def check_uniform_sampling():
    p = Params(2, 2, 2)
    rng = make_rng(31415)
    parts = []
    oks = []

    support_a = [tuple(int(c) for c in s) for s in reference.LINEARIZED_00_2_2_2[1] + reference.LINEARIZED_00_2_2_2[2]]
    ok, d = _uniform_check("linearized", [random_linearized(p, None, rng) for _ in range(10**5)], support_a, 1 / 9, 0.01)
    oks.append(ok)
    parts.append(d)

    support_b = [tuple(int(c) for c in s) for s in reference.CYCLIC_2_2_2[1] + reference.CYCLIC_2_2_2[2]]
    ok, d = _uniform_check("cyclic", [random_cyclic(p, rng) for _ in range(10**5)], support_b, 1 / 5, 0.01)
    oks.append(ok)
    parts.append(d)

    support_d = [
        canonical_multicycle(tuple(int(c) for c in cyc) for cyc in s.strip("()").split(")("))
        for s in reference.MULTICYCLIC_2_2_2
    ]
    ok, d = _uniform_check("multicyclic", [random_multicyclic(p, rng) for _ in range(2 * 10**5)], support_d, 1 / 36, 0.005)
    oks.append(ok)
    parts.append(d)

    weights = cyclic_mixture_weights(p)
    wok = weights == {1: 1, 2: 9} and sum(weights.values()) == p.m * count_cyclic(p) == 10
    oks.append(wok)
    parts.append(f"weights {weights}")
    return all(oks), "; ".join(parts)


def check_graph_module():
    problems = []
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            want = comb(a + b, a) ** 2
            g = two_cycle_graph(a, b)
            if count_aperiodic_multisets(g) != want:
                problems.append(f"closed form ({a},{b})")
            if a <= 2 and b <= 2 and len(brute_force_aperiodic_multisets(g)) != want:
                problems.append(f"brute force ({a},{b})")
    p = Params(2, 2, 2)
    g = de_bruijn_nugraph(p)
    found = {edge_cycles_to_words(ms) for ms in brute_force_aperiodic_multisets(g)}
    mcdb = {s for _, s in multicyclic_pairs(p)}
    if not (len(found) == 36 == count_multicyclic(p) and found == mcdb):
        problems.append(f"G(1,2,2) nu=2 gives {len(found)} multisets")
    h = expand(g)
    euler = brute_force_eulerian_count(h, h.edges[0].id)
    if euler != 72 or count_eulerian_fixed_edge(p) != 72:
        problems.append(f"eulerian {euler}")
    h1 = expand(de_bruijn_nugraph(Params(1, 2, 2)))
    trees = brute_force_arborescences(h1, h1.vertices[0])
    if trees != 1 or count_spanning_trees(Params(1, 2, 2)) != 1:
        problems.append(f"arborescences {trees}")
    detail = (f"two-cycle graph binom^2 for A,B in 1..3 (100 at 3,2: {count_aperiodic_multisets(two_cycle_graph(3, 2))}), "
              f"brute force A,B in 1..2; G(1,2,2) nu=2: {len(found)} = MCDB; eulerian {euler}; arborescences {trees}")
    if problems:
        detail += "; problems " + ", ".join(problems)
    return not problems, detail


def check_negative_controls():
    c3 = count_cyclic(Params(2, 2, 3))
    c4 = count_cyclic(Params(2, 2, 4))
    ok = c3 != 72 and c4 != 43768 and c3 == 82 and c4 == 52496
    return ok, f"|C(2,2,3)|={c3} (not 72), |C(2,2,4)|={c4} (not 43768)"


CRITERIA = [
    ("1 closed-form counts", check_known_counts, 1.0),
    ("2 enumeration vs closed form, golden (2,2,3)", check_enumeration_vs_formula, 60.0),
    ("3 tables for (2,2,2)", check_tables_2_2_2, None),
    ("4 EBWT bijection", check_ebwt_bijection, 30.0),
    ("5 power theorems", check_power_theorems, None),
    ("6 uniform sampling", check_uniform_sampling, 60.0),
    ("7 graph module", check_graph_module, 60.0),
    ("8 negative controls", check_negative_controls, None),
]


def _make_test(label, fn, limit):
    def test():
        ok, detail = run_check(label, fn, limit)
        assert ok, detail

    test.__name__ = "test_criterion_" + label.split()[0]
    return test


for _label, _fn, _limit in CRITERIA:
    _t = _make_test(_label, _fn, _limit)
    globals()[_t.__name__] = _t


if __name__ == "__main__":
    results = [run_check(label, fn, limit)[0] for label, fn, limit in CRITERIA]
    sys.exit(0 if all(results) else 1)
