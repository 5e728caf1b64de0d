"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest -s tests/test_acceptance.py`` to see the lines, or
``python tests/test_acceptance.py`` for the report alone.
"""
from __future__ import annotations

import itertools
import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import properties as PROP  # noqa: E402
from tripledimer import fixtures as F  # noqa: E402
from tripledimer import probability as P  # noqa: E402
from tripledimer import scaling as S  # noqa: E402
from tripledimer.oracle import oracle_check, sample_reduction  # noqa: E402
from tripledimer.skein import pairing_matrices  # noqa: E402

N_RANDOM = 20
REPORT: list[str] = []      # collected lines, echoed in the pytest terminal summary


def report(k: int, ok: bool, detail: str) -> None:
    line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'} {detail}"
    REPORT.append(line)
    print(line, flush=True)


# -- 1: reduction tables -------------------------------------------------------------------

def criterion_1():
    bad = []
    for types, (_, printed) in F.PRINTED_TABLES.items():
        if F.table_in_printed_order(types) != printed:
            bad.append(types)
        # the figure correspondence is a bijection onto our classes
        from tripledimer.skein import reduction_matrix
        if sorted(F.FIGURE_CLASSES[types]) != reduction_matrix(types).classes:
            bad.append(types + " (figure map)")
    return not bad, f"tables {list(F.PRINTED_TABLES)}; mismatches {bad}"


# -- 2: pairing matrices -------------------------------------------------------------------

def criterion_2():
    M, E, rm = pairing_matrices("wbwbwb")
    labels = [t.label() for t in rm.partitions]
    cols = [labels.index(lab) for lab in F.E_COLUMN_LABELS]
    E_printed_cols = [[r[j] for j in cols] for r in E]
    MP = [[sum(M[i][k] * rm.matrix[k][j] for k in range(len(M))) for j in range(len(E[0]))]
          for i in range(len(M))]
    checks = {"M": M == F.PRINTED_M, "E": E_printed_cols == F.PRINTED_E, "MP=E": MP == E}
    return all(checks.values()), f"{checks}"


# -- 3: the four-node worked example -------------------------------------------------------

def criterion_3(seed: int = 5):
    rng = random.Random(seed)
    l1, l2 = F.FIGURE_CLASSES["wbwb"]
    failures = []
    for trial in range(N_RANDOM):
        w = {k: Fraction(rng.randint(1, 9), rng.randint(1, 5)) for k in "abdefghk"}
        a, b, d, e, f, g, h, k = (w[x] for x in "abdefghk")
        G = F.four_node(w)
        m = P.build_model(G)
        D = e * g + f * h
        ref = [[-a * b * g / D, b * k * h / D], [-a * d * f / D, -k * d * e / D]]
        X = m.X
        gauge_ok = any(all(X[i, j] == r[i] * s[j] * ref[i][j] for i in range(2) for j in range(2))
                       for r in itertools.product((1, -1), repeat=2)
                       for s in itertools.product((1, -1), repeat=2))
        C = P.c_lambda_all(G, m)
        res = {
            "X": gauge_ok,
            "Delta": abs(m.delta) == D,
            "Z(1)": P.partition_function(G, (1, 1, 1, 1)) == a * b * d * k * D ** 2,
            "Z(c')": P.partition_function(G, (1, 2, 2, 1)) == (a * b * g) * (d * e * k) * D,
            "C1": C.get(l1) == a * b * d * e * e * g * g * k + a * b * d * e * f * g * h * k,
            "C2": C.get(l2) == a * b * d * f * f * h * h * k + a * b * d * e * f * g * h * k,
        }
        failures += [(trial, n) for n, ok in res.items() if not ok]
    return not failures, f"{N_RANDOM} random weightings; failures {failures[:5]}"


# -- 4: brute-force oracle -----------------------------------------------------------------

def criterion_4():
    t0 = time.time()
    bad, n_ids = [], 0
    for name in F.ORACLE_FIXTURES:
        g = F.fixture_graph(name)
        if len(g.edges) > 30:
            bad.append(f"{name} has {len(g.edges)} edges")
        for ident in oracle_check(g):
            n_ids += 1
            if not ident.ok:
                bad.append(f"{name}: {ident.name} {ident.detail}")
    dt = time.time() - t0
    return not bad and dt < 300, f"{n_ids} identities on {F.ORACLE_FIXTURES} in {dt:.1f}s; failures {bad[:3]}"


# -- 5: closed forms ------------------------------------------------------------------------

def criterion_5(seed: int = 9):
    rng = random.Random(seed)
    cases = [(f"lgv start {s}", "wbwbwb", lambda g, m, s=s: P.lgv_parallel(g, s, m),
              lambda t, s=s: P.parallel_class(t, s)) for s in range(6)]
    cases += [
        ("crossbar [1,2]", "wbbbww", lambda g, m: P.crossbar_p(g, [1, 2], 0, m),
         lambda t: P.crossbar_class(t, [1, 2], 0)),
        ("T1", "wbwbwb", lambda g, m: P.honeycomb_p(g, 1, "T", m), lambda t: P.honeycomb_class(t, 1, "T")),
        ("T'1", "www", lambda g, m: P.honeycomb_p(g, 1, "Tprime", m),
         lambda t: P.honeycomb_class(t, 1, "Tprime")),
        ("T'2", "wwwwww", lambda g, m: P.honeycomb_p(g, 2, "Tprime", m),
         lambda t: P.honeycomb_class(t, 2, "Tprime")),
        ("T2", "wb6", lambda g, m: P.honeycomb_p(g, 2, "T", m), lambda t: P.honeycomb_class(t, 2, "T")),
    ]
    bad = []
    for label, name, closed, code_of in cases:
        g0 = F.fixture_graph(name)
        g = F.reweighted(g0, F.random_weights(g0, rng))
        m = P.build_model(g)
        value = closed(g, m)
        if value == 0 or value != m.p_values().get(code_of(g.type_vector)):
            bad.append(label)
    return not bad, f"{[c[0] for c in cases]}; failures {bad}"


# -- 6: printed polynomials -----------------------------------------------------------------

def _poly_signs(name, types, poly, col_of, rng):
    signs = set()
    g0 = F.fixture_graph(name)
    for _ in range(N_RANDOM):
        g = F.reweighted(g0, F.random_weights(g0, rng))
        m = P.build_model(g)
        pv = m.p_values()
        for code, p in zip(F.FIGURE_CLASSES[types], poly):
            value = F.eval_poly(p, m.X, col_of)
            signs.add(pv.get(code, Fraction(0)) / value if value else None)
    return signs


def criterion_6(seed: int = 6):
    rng = random.Random(seed)
    cases = [("4node", "wbwb", F.POLY_4N, None), ("2by3", "wwbb", F.POLY_2BY3, None),
             ("bwwww", "bwwww", F.POLY_BWWWW, None)]
    cases += [(t, t, F.POLY_SIX_NODE[t], F.printed_to_x_column(t)) for t in F.POLY_SIX_NODE]
    bad, seen = [], {}
    for name, types, poly, col_of in cases:
        s = _poly_signs(name, types, poly, col_of, rng)
        seen[types] = sorted(str(x) for x in s)
        if len(s) != 1 or next(iter(s)) not in (1, -1):
            bad.append(types)
    return not bad, f"P / printed polynomial per type {seen}; failures {bad}"


# -- 7: sampler ---------------------------------------------------------------------------------

def criterion_7(n: int = 10 ** 4, seed: int = 0):
    g = F.four_node()
    res = sample_reduction(g, (1, 1, 1, 1), n, seed)
    again = sample_reduction(g, (1, 1, 1, 1), n, seed)
    bad = []
    for code, p in res.exact.items():
        sigma = math.sqrt(float(p * (1 - p)) / n)
        f = res.counts.get(code, 0) / n
        if p != Fraction(1, 2) or abs(f - 0.5) > 3 * sigma:
            bad.append((code, f, str(p)))
    det_ok = res.counts == again.counts
    return not bad and det_ok, f"counts {dict(res.counts)}, deterministic {det_ok}, outliers {bad}"


# -- 8: scaling limit -------------------------------------------------------------------------

def criterion_8():
    t0 = time.time()
    z = [0.0, 1.0, 2.0, 3.0, 4.0, 5.0]
    p = S.six_point_probs(z)
    sum_ok = abs(sum(p) - 1) <= 1e-12
    exact_ok = abs(p[0] - 135 / 256) < 1e-12 and abs(p[5] - 5 / 128) < 1e-12
    seq = S.lattice_entry_sequence(4)
    devs = [c.deviation for c in seq]
    ratio_ok = 0.9 <= seq[-1].ratio <= 1.1
    shrink_ok = all(b < a for a, b in zip(devs, devs[1:]))
    dt = time.time() - t0
    ok = sum_ok and exact_ok and ratio_ok and shrink_ok and dt < 600
    return ok, (f"sum {sum(p)!r}, Pr1 {p[0]}, Pr6 {p[5]}, ratios {[round(float(c.ratio), 4) for c in seq]}, "
                f"{dt:.1f}s")


# -- 9: property suites -------------------------------------------------------------------------

def criterion_9():
    results = {}
    for f in (PROP.check_confluence, PROP.check_trace_preservation, PROP.check_reidemeister,
              PROP.check_gauge_invariance, PROP.check_b_star_invariance):
        results[f.__name__] = f()
    ok = all(r[0] for r in results.values())
    return ok, "; ".join(f"{n}: {d}" for n, (_, d) in results.items())


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("k", range(1, 10))
def test_criterion(k):
    ok, detail = CRITERIA[k - 1]()
    report(k, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    for k, crit in enumerate(CRITERIA, 1):
        report(k, *crit())
