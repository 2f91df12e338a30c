"""Acceptance suite.  Run with ``pytest tests/test_acceptance.py``; the
terminal summary lists one PASS/FAIL line per criterion."""

import random
import time

import pytest

from conftest import random_graph
from minmin.coalition import cmin_bruteforce, coalition_number_bruteforce
from minmin.corpus import enumerate_labeled_graphs, enumerate_labeled_trees, open_corpus
from minmin.generators import (
    K1,
    K2_BAR,
    complete,
    complete_multipartite,
    cycle,
    heawood,
    path,
    petersen,
    star,
)
from minmin.graph import is_complete, join_graphs, universal_vertices
from minmin.graph6 import graph6_encode
from minmin.recognizers import (
    cmin_dispatch,
    family_M_derivations,
    generate_family_F,
    is_family_F,
    is_family_M,
    test_cmin_eq_2 as eq2,
    test_cmin_ge_3 as ge3,
    test_cmin_ge_4 as ge4,
)
from minmin.verify import run_verification

SEED = 20240611


def cmin(G):
    return cmin_bruteforce(G).value


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@pytest.mark.criterion(1, "cycle values for n = 3..10")
def test_cycles():
    with Timer() as t:
        got = tuple(cmin(cycle(n)) for n in range(3, 11))
    assert got == (3, 4, 3, 2, 2, 2, 2, 2)
    assert t.seconds <= 30


@pytest.mark.criterion(2, "paths P_4..P_10 have value 2")
def test_paths():
    with Timer() as t:
        got = [cmin(path(n)) for n in range(4, 11)]
    assert got == [2] * 7
    assert t.seconds <= 10


@pytest.mark.criterion(3, "stars give 3, every other tree on n <= 8 gives 2")
def test_trees(note):
    with Timer() as t:
        assert [cmin(star(r)) for r in range(2, 8)] == [3] * 6
        bad, count = [], 0
        trees = [T for n in range(2, 8) for T in enumerate_labeled_graphs(n, "tree")]
        for T in trees + list(enumerate_labeled_trees(8)):
            is_star = T.n >= 3 and universal_vertices(T) != 0
            count += 1
            if cmin(T) != (3 if is_star else 2):
                bad.append(T)
    note(f"criterion 3 checked {count} labelled trees on 2..8 vertices")
    assert not bad
    assert t.seconds <= 120


@pytest.mark.criterion(4, "K_{2,2} = 4 and K_{2,2,2} = 6")
def test_upper_sharpness():
    assert cmin(complete_multipartite([2, 2])) == 4
    assert cmin(complete_multipartite([2, 2, 2])) == 6


@pytest.mark.criterion(5, "Heawood and Petersen both have value 2")
def test_heawood_and_petersen(note):
    problems = []
    for name, G, limit in (("heawood", heawood(), 60), ("petersen", petersen(), 10)):
        if eq2(G) is None:
            problems.append(f"{name}: no closed neighbourhood fails to dominate")
        with Timer() as t:
            value = cmin(G)
        note(f"criterion 5 {name}: brute force value {value} in {t.seconds:.2f}s")
        if value != 2:
            problems.append(f"{name}: brute force value {value}, expected 2")
        if t.seconds > limit:
            problems.append(f"{name}: {t.seconds:.1f}s exceeds {limit}s")
    assert not problems, "; ".join(problems)


def _m_graphs():
    C4 = join_graphs(K2_BAR, K2_BAR)
    figures = [join_graphs(K2_BAR, C4), join_graphs(K1, join_graphs(K1, C4)),
               join_graphs(K1, join_graphs(K2_BAR, C4))]
    return [d.build() for d in family_M_derivations(7)] + figures


@pytest.mark.criterion(6, "family M graphs of order <= 7 have value n and are recognised")
def test_family_M(note):
    with Timer() as t:
        graphs = _m_graphs()
        bad = [G for G in graphs if cmin(G) != G.n or is_family_M(G) is None]
    note(f"criterion 6 checked {len(graphs)} family M graphs")
    assert not bad
    assert t.seconds <= 120


def _threshold_failures(n):
    out = {"eq2": [], "ge3": [], "ge4": []}
    for G in enumerate_labeled_graphs(n, "no_universal"):
        c = cmin(G)
        if (c == 2) != (eq2(G) is not None):
            out["eq2"].append(G)
        if (c >= 3) != ge3(G):
            out["ge3"].append(G)
        if (c >= 4) != ge4(G):
            out["ge4"].append(G)
    return out


@pytest.mark.criterion(7, "threshold equivalences on graphs without universal vertices, n <= 6")
def test_thresholds(note):
    failures = {"eq2": [], "ge3": [], "ge4": []}
    with Timer() as small:
        for n in range(1, 6):
            for key, graphs in _threshold_failures(n).items():
                failures[key] += graphs
    with Timer() as extended:
        for key, graphs in _threshold_failures(6).items():
            failures[key] += graphs
    for key, graphs in failures.items():
        edgeless = sum(1 for G in graphs if G.m == 0)
        note(f"criterion 7 {key}: {len(graphs)} counterexamples ({edgeless} edgeless)")
    note(f"criterion 7 timing: n <= 5 {small.seconds:.1f}s, n = 6 {extended.seconds:.1f}s")
    assert small.seconds <= 120 and extended.seconds <= 1800
    assert not any(failures.values()), {k: [graph6_encode(G) for G in v]
                                         for k, v in failures.items() if v}


def test_thresholds_hold_once_an_edge_exists(note):
    # Informational companion to criterion 7: the only counterexamples are edgeless.
    for n in range(2, 7):
        for graphs in _threshold_failures(n).values():
            assert all(G.m == 0 for G in graphs)
    note("threshold equivalences hold on every graph with at least one edge, n <= 6")


@pytest.mark.criterion(8, "delta = 2 graphs with value 4 are exactly family F")
def test_family_F(note):
    rng = random.Random(SEED)
    with Timer() as t:
        bad, count = [], 0
        for n in range(3, 7):
            for G in enumerate_labeled_graphs(n, "no_universal,min_degree=2"):
                count += 1
                if (cmin(G) == 4) != (is_family_F(G) is not None):
                    bad.append(G)
        for _ in range(20):
            u = rng.randint(1, 4)
            U = [(i, j) for i in range(u) for j in range(i + 1, u) if rng.random() < 0.5]
            G = generate_family_F(u, U)
            if cmin(G) != 4 or is_family_F(G) is None:
                bad.append(G)
    note(f"criterion 8 checked {count} labelled graphs and 20 generated instances")
    assert not bad
    assert t.seconds <= 600


@pytest.mark.criterion(9, "joining K_k adds exactly k for random residuals")
def test_reduction():
    rng = random.Random(SEED)
    with Timer() as t:
        bad, done = [], 0
        while done < 50:
            R = random_graph(rng, rng.randint(1, 6), rng.random())
            if is_complete(R):
                continue
            done += 1
            base = cmin(R)
            for k in (1, 2):
                if cmin(join_graphs(complete(k), R)) != base + k:
                    bad.append((R, k))
    assert not bad
    assert t.seconds <= 120


@pytest.mark.criterion(10, "structural properties on all labelled graphs n <= 5")
def test_structure():
    failed = {}
    for suite in ("definitions", "bounds"):
        report = run_verification(suite, open_corpus("labeled:1-5"), corpus="labeled:1-5")
        assert report.graphs == 1 + 2 + 8 + 64 + 1024
        failed.update({c.name: c.failed for c in report.checks if c.failed})
    for G in enumerate_labeled_graphs(4):
        assert cmin(G) <= coalition_number_bruteforce(G).value
    assert not failed


@pytest.mark.criterion(11, "dispatcher agrees with brute force on all labelled graphs n <= 7")
def test_dispatcher(note):
    with Timer() as t:
        bad, missing, count = [], 0, 0
        for n in range(1, 8):
            for G in enumerate_labeled_graphs(n):
                count += 1
                expected = cmin(G)
                missing += expected is None
                if cmin_dispatch(G, check=False).value != expected:
                    bad.append(G)
    note(f"criterion 11 compared {count} graphs in {t.seconds:.0f}s; "
         f"{missing} lack a c-partition")
    assert count == sum(2 ** (n * (n - 1) // 2) for n in range(1, 8))
    assert not bad
    assert t.seconds <= 1800
