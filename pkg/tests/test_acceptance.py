"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line with its runtime, then asserts.
Run standalone with ``python3 tests/test_acceptance.py`` or through pytest.
"""

import csv
import io
import random
import sys
import time
from contextlib import redirect_stdout
from fractions import Fraction

import networkx as nx
import pytest

from topocode.cli import run
from topocode.code import distance, distance_report, from_embedding, is_isotropic, min_undetectable
from topocode.errors import NoLogicalQubitsError
from topocode.families import (
    complete_selfdual,
    connected_sum_chain,
    is_self_dual,
    kitaev_toric,
    optimal_toric,
    planar_holed,
)
from topocode.homology import (
    homology_summary,
    min_nontrivial_cocycle,
    min_nontrivial_cocycle_oracle,
    min_nontrivial_cycle,
    min_nontrivial_cycle_oracle,
)
from topocode.pauli import symplectic_product
from topocode.rates import hamming_bound_rate
from topocode.surface import Edge, EmbeddedGraph, connected_sum, euler_characteristic, to_networkx, trace_faces

_capsys = None


@pytest.fixture(autouse=True)
def _grab_capsys(capsys):
    global _capsys
    _capsys = capsys
    yield
    _capsys = None


def report(number, ok, elapsed, limit, detail):
    ok = ok and elapsed < limit
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {detail} ({elapsed:.2f}s, limit {limit:g}s)"
    if _capsys is not None:
        with _capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


def instances():
    """Every generated instance used by the identity, detection and oracle checks."""
    out = [(f"kitaev_toric(d={d})", kitaev_toric(d)) for d in (2, 3, 4, 5)]
    out += [(f"optimal_toric(d={d})", optimal_toric(d)) for d in (3, 5, 7)]
    out += [(f"complete_selfdual(s={s})", complete_selfdual(s)) for s in (5, 9)]
    out += [(f"planar_holed(h={h},d={d})", planar_holed(h, d)) for h in (1, 2, 4) for d in (2, 3, 5)]
    o3 = optimal_toric(3)
    out.append(("optimal_toric(3)#optimal_toric(3)", connected_sum(o3, 0, o3, 0)))
    return out


def random_embedding(rng):
    V = rng.randint(1, 6)
    pairs = [(rng.randrange(v), v) for v in range(1, V)]
    pairs += [(rng.randrange(V), rng.randrange(V)) for _ in range(rng.randint(0 if V > 1 else 1, 6))]
    at = [[] for _ in range(V)]
    for i, (a, b) in enumerate(pairs):
        at[a].append(2 * i)
        at[b].append(2 * i + 1)
    for darts in at:
        rng.shuffle(darts)
    edges = [Edge(a, b, rng.randint(0, 1)) for a, b in pairs]
    c = trace_faces(EmbeddedGraph(V, edges, at))
    if rng.random() < 0.5:
        c = c.with_open_faces(rng.sample(range(c.F), rng.randint(1, c.F)))
    return c


def test_criterion_01_kitaev_toric():
    t0 = time.perf_counter()
    got = [(lambda c: (c.n, c.k, distance(c)))(from_embedding(kitaev_toric(d))) for d in (2, 3, 4, 5)]
    want = [(2 * d * d, 2, d) for d in (2, 3, 4, 5)]
    report(1, got == want, time.perf_counter() - t0, 10, f"kitaev toric d=2..5 -> {got}")


def test_criterion_02_optimal_toric():
    t0 = time.perf_counter()
    ok, got = True, []
    for d in (3, 5, 7):
        c = optimal_toric(d)
        code = from_embedding(c)
        params = (code.n, code.k, distance(code))
        got.append(params)
        ok &= params == (d * d + 1, 2, d) and is_self_dual(c) and code.connectivity_c == 4
    k5 = nx.is_isomorphic(nx.Graph(to_networkx(optimal_toric(3).graph)), nx.complete_graph(5))
    report(2, ok and k5, time.perf_counter() - t0, 30, f"optimal toric {got}, self-dual, c=4, d=3 graph is K5: {k5}")


def test_criterion_03_complete_graph():
    t0 = time.perf_counter()
    rows = []
    for s, genus in ((5, 1), (9, 10)):
        c = complete_selfdual(s)
        code = from_embedding(c)
        rows.append(((code.n, code.k, distance(code)), c.info().genus, genus))
    ok = [r[0] for r in rows] == [(10, 2, 3), (36, 20, 3)] and all(g == w for _, g, w in rows)
    report(3, ok, time.perf_counter() - t0, 120, f"K5, K9 -> {[(p, f'genus {g}') for p, g, _ in rows]}")


def test_criterion_04_rate_trend():
    t0 = time.perf_counter()
    ss = list(range(5, 86, 4))
    rates = []
    for s in ss:
        n = s * (s - 1) // 2
        rates.append(Fraction(n - 2 * (s - 1), n))
    exact = all(r == 1 - Fraction(4, s) for r, s in zip(rates, ss))
    increasing = all(a < b for a, b in zip(rates, rates[1:]))
    high = rates[ss.index(81)] > Fraction(95, 100)
    report(4, exact and increasing and high, time.perf_counter() - t0, 1,
           f"k/n = 1-4/s for s=5..85: {exact}, increasing: {increasing}, s=81 rate {float(rates[ss.index(81)]):.4f}")


def test_criterion_05_planar():
    t0 = time.perf_counter()
    ok, ratios = True, []
    for h in (1, 2, 4):
        for d in (2, 3, 5):
            code = from_embedding(planar_holed(h, d))
            ok &= code.k == h and distance(code) == d
            ratios.append(code.n / (h * d * d))
    bounded = max(ratios) < 12
    report(5, ok and bounded, time.perf_counter() - t0, 60,
           f"planar k=h, d exact on 3x3 grid: {ok}, n/(h d^2) in [{min(ratios):.2f}, {max(ratios):.2f}]")


def test_criterion_06_identities():
    t0 = time.perf_counter()
    rng = random.Random(6)
    cases = instances() + [(f"random#{i}", random_embedding(rng)) for i in range(300)]
    bad = []
    for name, c in cases:
        code = from_embedding(c)
        chi = euler_characteristic(c)
        want_k = 2 - chi if not c.open_faces else 1 - chi
        hs = homology_summary(c)
        ok = code.k == want_k == hs.h1_dim == hs.h1co_dim and is_isotropic(code)
        gens = code.generators
        ok &= all(symplectic_product(a, b) == 0 for i, a in enumerate(gens) for b in gens[i + 1:])
        if not ok:
            bad.append(name)
    report(6, not bad, time.perf_counter() - t0, 30,
           f"k = 2-chi / 1-chi, commuting stabilizers, h1 = k on {len(cases)} embeddings; failures: {bad}")


def test_criterion_07_detection():
    t0 = time.perf_counter()
    checked, bad = [], []
    for name, c in instances():
        code = from_embedding(c)
        if code.n > 20 or code.k == 0:
            continue
        d = distance(code)
        ok = min_undetectable(code, d - 1) is None
        w = min_undetectable(code, d)
        ok &= w is not None and w.weight() == d
        checked.append(f"{name}[n={code.n},d={d}]")
        if not ok:
            bad.append(name)
    report(7, not bad and len(checked) >= 4, time.perf_counter() - t0, 120,
           f"exhaustive detection below d, witness at d: {', '.join(checked)}; failures: {bad}")


def test_criterion_08_oracle():
    t0 = time.perf_counter()
    compared, bad = 0, []
    for name, c in instances():
        hs = homology_summary(c)
        if hs.h1_dim == 0:
            continue
        if hs.z1_dim <= 20:
            compared += 1
            if min_nontrivial_cycle(c)[0] != min_nontrivial_cycle_oracle(c):
                bad.append(name + " cycles")
        if hs.z1co_dim <= 20:
            compared += 1
            if min_nontrivial_cocycle(c)[0] != min_nontrivial_cocycle_oracle(c):
                bad.append(name + " cocycles")
    report(8, not bad and compared >= 10, time.perf_counter() - t0, 300,
           f"fast search = enumeration on {compared} cycle/cocycle spaces of dim <= 20; failures: {bad}")


def test_criterion_09_connected_sum():
    t0 = time.perf_counter()
    o3 = optimal_toric(3)
    c = connected_sum(o3, 0, o3, 0)
    code = from_embedding(c)
    got = (euler_characteristic(c), code.n, code.k, distance_report(code).d)
    report(9, got == (-2, 20, 4, 3), time.perf_counter() - t0, 10,
           f"optimal_toric(3) # optimal_toric(3): chi, n, k, d = {got}; 20 <= 10 + 10")


def test_criterion_10_figure1():
    t0 = time.perf_counter()
    buf = io.StringIO()
    with redirect_stdout(buf):
        status = run(["rates", "--figure1"])
    rows = list(csv.DictReader(io.StringIO(buf.getvalue())))
    points = {(Fraction(r["t_over_n_exact"]), Fraction(r["k_over_n_exact"])) for r in rows}
    k5 = (Fraction(1, 10), Fraction(1, 5)) in points
    toric = all((Fraction(t, (2 * t + 1) ** 2 + 1), Fraction(2, (2 * t + 1) ** 2 + 1)) in points for t in range(2, 22))
    complete = all(
        (Fraction(1, s * (s - 1) // 2), 1 - Fraction(4, s)) in points for s in range(9, 86, 4)
    )
    under = all(
        float(Fraction(r["k_over_n_exact"])) <= hamming_bound_rate(Fraction(r["t_over_n_exact"])) + 1e-9
        for r in rows
    )
    ok = status == 0 and k5 and toric and complete and under
    report(10, ok, time.perf_counter() - t0, 5,
           f"{len(rows)} rows; K5 point (0.1, 0.2): {k5}, optimal toric t=2..21: {toric}, K_(4l+1): {complete}, below bound: {under}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
