"""Acceptance gate: one test per criterion, at the stated tolerances."""

import csv
import functools
import io
import itertools
import time

from combdim import checks
from combdim.checks import field_triple
from combdim.cyclic_graph import cdim, fcdim, fundamental_failure, gamma, gamma_full
from combdim.oracle import NONE_CERTAIN
from combdim.towers import (AdmSeq, build, char2_report, search, tilde_graph, truncation_purity)
from combdim.trivext import Algebra, Ideal, free_module, goldie_dim, in_decomposition_domain


@functools.lru_cache(maxsize=None)
def _bound_suite():
    return checks.bound_suite(200, seed=0)


def _line(n, ok, detail):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}")


def test_criterion_1_discrete_examples():
    t0 = time.perf_counter()
    t = field_triple(2, 2, [v for v in itertools.product(range(2), repeat=2) if any(v)])
    G = gamma(t, Ideal.whole(Algebra(2, 0)))
    Z = gamma(t, Ideal.zero(Algebra(2, 0)))
    elapsed = time.perf_counter() - t0
    ok = len(G) == 3 and G.to_graph().is_discrete() and Z.to_graph().is_discrete() and elapsed < 1
    _line(1, ok, f"{len(G)} vertices, {len(G.edges)} edges, {elapsed:.3f}s")
    assert len(G) == 3 and not G.edges
    assert len(Z) == 3 and not Z.edges
    assert elapsed < 1


def test_criterion_2_three_components():
    t0 = time.perf_counter()
    A = Algebra(2, 2)
    J = Ideal.soc(A)
    c1 = cdim(free_module(A, 1), J)
    c2 = cdim(free_module(A, 2), J)
    elapsed = time.perf_counter() - t0
    _line(2, (c1, c2) == (1, 3) and elapsed < 1, f"cdim(A)={c1}, cdim(A^2)={c2}, {elapsed:.3f}s")
    assert (c1, c2) == (1, 3)
    assert elapsed < 1


def test_criterion_3_indecomposable_constructions():
    t0 = time.perf_counter()
    failures = []
    for n in (2, 3):
        A = Algebra(3, n)
        J = Ideal.soc(A)
        for i in range(1, n):
            lvl = build(AdmSeq(3, n, (i,)))
            M = lvl.module
            if not in_decomposition_domain(M, J):
                failures.append(f"M_{i} (n={n}) not in the decomposition domain")
            if goldie_dim(M) != n + i:
                failures.append(f"Gdim M_{i} (n={n}) = {goldie_dim(M)}, expected {n + i}")
            if not tilde_graph(lvl).is_complete():
                failures.append(f"tilde-graph of M_{i} (n={n}) not complete")
    n = 3
    J = Ideal.soc(Algebra(3, n))
    for i in (1, 2):
        lvl = build(AdmSeq(3, n, (n - 1, i)))
        M = lvl.module
        if goldie_dim(M) != 2 * n + i - 1:
            failures.append(f"Gdim M_(2,{i}) = {goldie_dim(M)}, expected {2 * n + i - 1}")
        G = gamma_full(M, J)
        pair = [lvl.sigma[0], lvl.sigma[2]]
        why = fundamental_failure(M, J, pair, G)
        if why is not None:
            failures.append(f"pair in M_(2,{i}) not fundamental: {why}")
        elif fcdim(M, J, pair, G) != 1:
            failures.append(f"fcdim of the pair in M_(2,{i}) is {fcdim(M, J, pair, G)}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 30:
        failures.append(f"took {elapsed:.1f}s")
    _line(3, not failures, "; ".join(failures) or f"{elapsed:.2f}s")
    assert not failures, "\n".join(failures)


def test_criterion_4_char2_orthogonality():
    rep = char2_report(4, 1)
    asserted = [c for c in rep.claims if c.asserted]
    names = {c.name for c in asserted}
    recorded = [c for c in rep.claims if not c.asserted]
    ok = rep.ok and "extend [] by 3: orthogonality" in names and "M_[3] in decomposition domain of Soc" in names
    _line(4, ok, "; ".join(c.line() for c in rep.claims))
    assert "extend [] by 3: orthogonality" in names
    assert "M_[3] in decomposition domain of Soc" in names
    assert rep.ok
    assert {c.name for c in recorded} == {"extend [] by 1: orthogonality", "extend [] by 2: orthogonality"}


def test_criterion_5_bound_suite():
    t0 = time.perf_counter()
    bounds, _, records = _bound_suite()
    elapsed = time.perf_counter() - t0
    assert len(records) == 200 and all(r["d"] <= 8 and r["p"] in (2, 3) for r in records)
    _line(5, bounds.passed and elapsed < 300,
          f"{bounds.trials} modules, {bounds.violations} violations, "
          f"{sum(r['fcdim'] is not None for r in records)} with a fundamental set, {elapsed:.1f}s")
    assert bounds.passed, bounds.render()
    assert elapsed < 300


def test_criterion_6_pure_submodules_and_sums():
    r24 = checks.pure_submodule_suite(100, seed=0)
    r28 = checks.direct_sum_suite(100, seed=0)
    _line(6, r24.passed and r28.passed, f"{r24.summary()}; {r28.summary()}")
    assert r24.trials == 100 and r28.trials == 100
    assert r24.passed, r24.render()
    assert r28.passed, r28.render()


def test_criterion_7_fundamental_components_coincide():
    res = checks.fundamental_coincidence_suite(100, seed=0)
    _line(7, res.passed and res.trials > 0, res.summary())
    assert res.trials > 0
    assert res.passed, res.render()


def test_criterion_8_categorical_suite():
    co, un, lim = checks.categorical_suite(50, seed=0)
    prod = checks.product_counterexample()
    eq = checks.equalizer_counterexample()
    ok = co.passed and un.passed and lim.passed and prod["reproduced"] and eq["reproduced"]
    _line(8, ok, f"{co.summary()}; {un.summary()}; {lim.summary()}; product {prod['graph_product_vertices']} "
                 f"vs {prod['gamma_of_product_vertices']}; equalizer {eq['gamma_of_equalizer_vertices']} "
                 f"vs {eq['graph_equalizer_vertices']}")
    for r in (co, un, lim):
        assert r.trials == 50 and r.passed, r.render()
    assert (prod["graph_product_vertices"], prod["gamma_of_product_vertices"]) == (1, 2)
    assert eq["reproduced"]


def test_criterion_9_ideal_families():
    rz, rk = checks.directed_family_suite(50, seed=0)
    r72 = checks.intersection_suite(100, seed=0)
    rw = checks.z_criterion(100, seed=0)
    results = (rz, rk, r72, rw)
    _line(9, all(r.passed for r in results), "; ".join(r.summary() for r in results))
    assert [r.trials for r in results] == [50, 50, 100, 100]
    for r in results:
        assert r.passed, r.render()


def test_criterion_10_oracle_soundness():
    _, sound, _ = _bound_suite()
    _line(10, sound.passed, sound.summary())
    assert sound.trials == 200
    assert sound.passed, sound.render()


def test_criterion_11_search_harness():
    t0 = time.perf_counter()
    rep = search(3, 3, 4, 50)
    elapsed = time.perf_counter() - t0
    text = rep.to_csv()
    rows = list(csv.DictReader(io.StringIO(text)))
    bad = []
    for row in rows:
        seq = tuple(int(x) for x in row["seq"].split())
        if int(row["gdim"]) != 3 + sum(seq):
            bad.append(f"{seq}: gdim {row['gdim']}")
        if not truncation_purity(build(AdmSeq(3, 3, seq))):
            bad.append(f"{seq}: truncation not pure")
    rerun = search(3, 3, 4, 50).to_csv()
    ok = not bad and elapsed < 60 and rerun.encode() == text.encode() and max(len(r["seq"].split()) for r in rows) == 4
    _line(11, ok, f"{len(rows)} rows, {elapsed:.1f}s, byte-identical rerun: {rerun == text}")
    assert not bad, bad
    assert elapsed < 60
    assert rerun.encode("utf-8") == text.encode("utf-8")
