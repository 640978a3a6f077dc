"""Exit criteria, one test per criterion; each prints a PASS/FAIL line."""
import math
import random
import time
from dataclasses import replace

import numpy as np
import pytest

from nisat.counter import apply_corrections, count, run_with_matrix
from nisat.formula import Formula, complementary_occurrences, conflict_set, is_interlaced, permute
from nisat.oracle import GeneratorParams, brute_force_count, random_formula
from nisat.paths import build_base_matrix, path_column_matpow, path_value_dp
from nisat.reorder import find_order_enum, find_order_exact

from conftest import ACCEPTANCE, PAPER_INTERLACED, PAPER_PERMUTED


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    ACCEPTANCE.append(line)
    assert ok, line


def range_and_zeroing(f, res, m):
    """Criterion 7 checks on one non-interlaced run."""
    if not 0 <= res.pi_s_t <= math.prod(f.widths):
        return False
    return all(m[m.occ(i, a), m.occ(i + 1, b)] == 0
               for i in range(1, f.k) for a, b in complementary_occurrences(f, i, i + 1))


SEVEN: dict[str, int] = {"runs": 0, "bad": 0}


def test_1_paper_counterexample():
    t0 = time.perf_counter()
    res = count(PAPER_INTERLACED)
    gamma = brute_force_count(PAPER_INTERLACED)
    dt = time.perf_counter() - t0
    ok = res.interlaced and res.pi_s_t == -1 and gamma == 0 and dt < 1
    report(1, ok, f"interlaced={res.interlaced} pi(s,t)={res.pi_s_t} gamma={gamma} ({dt:.4f}s)")


def test_2_paper_permuted_example():
    t0 = time.perf_counter()
    res, m, _ = run_with_matrix(PAPER_PERMUTED)
    d = conflict_set(PAPER_PERMUTED)
    gamma = brute_force_count(PAPER_PERMUTED)
    dt = time.perf_counter() - t0
    SEVEN["runs"] += 1
    SEVEN["bad"] += not range_and_zeroing(PAPER_PERMUTED, res, m)
    ok = (not res.interlaced and d.sorted() == [(1, 4), (2, 3)]
          and res.pi_s_t == 0 == gamma and dt < 1)
    report(2, ok, f"delta={d.sorted()} pi(s,t)={res.pi_s_t} gamma={gamma} ({dt:.4f}s)")


def test_3_theorem_property_suite():
    trials, t0 = 10_000, time.perf_counter()
    mismatches, ks = [], [0] * 9
    for n in range(trials):
        k = 1 + n % 8
        p = GeneratorParams(clauses=(k, k), width=3, variables=6, seed=3000 ^ n,
                            mode="noninterlaced")
        f = random_formula(p)
        res, m, _ = run_with_matrix(f)
        assert not res.interlaced
        ks[f.k] += 1
        if res.pi_s_t != brute_force_count(f):
            mismatches.append(f)
        SEVEN["runs"] += 1
        SEVEN["bad"] += not range_and_zeroing(f, res, m)
    dt = time.perf_counter() - t0
    report(3, not mismatches and dt < 300,
           f"{trials - len(mismatches)}/{trials} exact agreements, per-k {ks[1:]} ({dt:.1f}s)")


def test_4_dual_path_value():
    t0, rng = time.perf_counter(), random.Random(4)
    matrices = queries = bad = 0
    for n in range(500):
        f = random_formula(GeneratorParams(clauses=(1, 8), width=3, variables=6, seed=4000 ^ n))
        m = build_base_matrix(f)
        stages = [m.copy()]
        apply_corrections(f, m)
        stages.append(m)
        for st in stages:
            matrices += 1
            targets = {st.sink, rng.randrange(st.n), rng.randrange(st.n)}
            for y in sorted(targets):
                col = path_column_matpow(st, y)
                for x in range(st.n):
                    queries += 1
                    bad += int(col[x]) != path_value_dp(st, x, y)
    dt = time.perf_counter() - t0
    report(4, matrices == 1000 and bad == 0 and dt < 120,
           f"{matrices} matrices, {queries} (x,y) queries, {bad} mismatches ({dt:.1f}s)")


def test_5_order_independence():
    t0 = time.perf_counter()
    bad = 0
    for n in range(500):
        k = 1 + n % 8
        f = random_formula(GeneratorParams(clauses=(k, k), width=3, variables=6,
                                           seed=5000 ^ n, mode="noninterlaced"))
        m1, m2 = build_base_matrix(f), build_base_matrix(f)
        e1 = apply_corrections(f, m1)
        e2 = apply_corrections(f, m2, rng=random.Random(n))
        a1 = {(e.src, e.dst): e.alpha for e in e1}
        a2 = {(e.src, e.dst): e.alpha for e in e2}
        pi1 = path_value_dp(m1, m1.source, m1.sink)
        pi2 = path_value_dp(m2, m2.source, m2.sink)
        bad += a1 != a2 or pi1 != pi2
    dt = time.perf_counter() - t0
    report(5, bad == 0 and dt < 120, f"500 formulas, {bad} order-dependent ({dt:.1f}s)")


def chain(k):
    """Clause i is (v_i, -v_{i+1}): conflicts only between neighbours; Gamma = k + 1."""
    return Formula.of([[i, -(i + 1)] for i in range(1, k + 1)])


def test_6_scaling_smoke():
    sizes, times, ok = (50, 100, 200), [], True
    for k in sizes:
        f = chain(k)
        best = math.inf
        for _ in range(3):
            t0 = time.perf_counter()
            res = count(f)
            best = min(best, time.perf_counter() - t0)
        ok &= (not res.interlaced and res.pi_s_t == k + 1 and best < 10)
        times.append(best)
    slope = np.polyfit(np.log(sizes), np.log(times), 1)[0]
    ok &= slope <= 3.5
    detail = ", ".join(f"k={k}: {t * 1e3:.1f}ms" for k, t in zip(sizes, times))
    report(6, bool(ok), f"{detail}; log-log slope {slope:.2f} (limit 3.5)")


def test_7_range_and_zeroing():
    # aggregates the runs of criteria 2 and 3, which precede it in file order
    if SEVEN["runs"] == 0:
        pytest.skip("criteria 2 and 3 not run in this session")
    report(7, SEVEN["bad"] == 0,
           f"{SEVEN['runs']} non-interlaced runs, {SEVEN['bad']} range/zeroing violations")


def test_8_reorder():
    t0 = time.perf_counter()
    disagree = unsound = found = 0
    for n in range(200):
        k = 1 + n % 7
        f = random_formula(GeneratorParams(clauses=(k, k), width=3, variables=6, seed=8000 ^ n))
        r = find_order_exact(f)
        ref = find_order_enum(f)
        disagree += r.budget_exhausted or r.found != (ref is not None)
        if r.found:
            found += 1
            g = permute(f, r.sigma)
            unsound += is_interlaced(conflict_set(g)) or count(g).pi_s_t != brute_force_count(f)
    dt = time.perf_counter() - t0
    report(8, disagree == 0 and unsound == 0 and dt < 300,
           f"200 formulas, {found} orderable, {disagree} disagreements, "
           f"{unsound} unsound orders ({dt:.1f}s)")


def test_9_gamma_permutation_invariance():
    t0, rng, bad = time.perf_counter(), random.Random(9), 0
    for n in range(500):
        f = random_formula(GeneratorParams(clauses=(1, 8), width=3, variables=6, seed=9000 ^ n))
        sigma = list(range(1, f.k + 1))
        rng.shuffle(sigma)
        bad += brute_force_count(f) != brute_force_count(permute(f, sigma))
    dt = time.perf_counter() - t0
    report(9, bad == 0 and dt < 60, f"500 formulas, {bad} differences ({dt:.1f}s)")
