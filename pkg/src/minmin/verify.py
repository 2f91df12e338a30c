"""Theorem verification sweeps over graph corpora.

Each check looks at one graph and either declines (out of scope) or
returns (ok, expected, actual).  A report counts passes and failures per
check and keeps every counterexample as graph6 so it can be re-run.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import islice
from typing import Any, Callable, Iterable

from .coalition import (
    c_partitions,
    certificate_is_valid,
    cmin_bruteforce,
    coalition_number_bruteforce,
    is_c_partition,
    is_minimal_c_partition,
    merge_blocks,
)
from .domination import domination_number, is_dominating_set, undominated_vertices
from .generators import K1, K2
from .graph import Graph, is_complete, is_connected, join_graphs, universal_vertices
from .graph6 import graph6_decode, graph6_encode
from .recognizers import (
    GE4_DEGREE_CAP,
    cmin_dispatch,
    cmin_formula_cycle,
    cmin_formula_tree,
    is_cycle,
    is_family_F,
    is_family_M,
    is_tree,
    property_star,
    strip_universal,
    test_cmin_eq_2,
    test_cmin_ge_3,
    test_cmin_ge_4,
)

SCHEMA = 1

# Orders above these skip the expensive checks.
SUBSET_SCAN_MAX = 8
CNUM_MAX = 9
ALL_PARTITIONS_MAX = 7


class Facts:
    """Per-graph lazily computed quantities shared between checks."""

    def __init__(self, G: Graph):
        self.G = G

    @cached_property
    def brute(self):
        return cmin_bruteforce(self.G)

    @cached_property
    def cmin(self) -> int | None:
        return self.brute.value

    @cached_property
    def cnum(self) -> int | None:
        return coalition_number_bruteforce(self.G).value

    @cached_property
    def universal(self) -> int:
        return universal_vertices(self.G)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.G)


CheckFn = Callable[[Facts], Any]


def _roundtrip(f: Facts):
    text = graph6_encode(f.G)
    back = graph6_decode(text)
    return back == f.G, text, graph6_encode(back)


def _domination_consistency(f: Facts):
    G = f.G
    if G.n > SUBSET_SCAN_MAX:
        return None
    for S in range(1 << G.n):
        dom = is_dominating_set(G, S)
        if dom != (undominated_vertices(G, S) == 0):
            return False, "dominating iff nothing undominated", S
        if dom:
            for v in range(G.n):
                if not is_dominating_set(G, S | 1 << v):
                    return False, "supersets of dominating sets dominate", S | 1 << v
    return True, None, None


def _gamma_one(f: Facts):
    if f.G.n > SUBSET_SCAN_MAX:
        return None
    gamma = domination_number(f.G)
    return (gamma == 1) == bool(f.universal), bool(f.universal), gamma


def _c_partition_exists(f: Facts):
    return f.cmin is not None, "some c-partition", f.cmin


def _certificate_sound(f: Facts):
    if f.brute.certificate is None:
        return None
    ok = certificate_is_valid(f.G, f.brute.certificate) and f.brute.certificate.order == f.cmin
    return ok, f.cmin, f.brute.certificate.partition.text()


def _witness_minimal(f: Facts):
    if f.brute.certificate is None:
        return None
    P = f.brute.certificate.partition
    return is_minimal_c_partition(f.G, P), "minimal", P.text()


def _merge_observation(f: Facts):
    if f.G.n > CNUM_MAX:
        return None
    res = coalition_number_bruteforce(f.G)
    if res.certificate is None:
        return None
    P = res.certificate.partition
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            if is_dominating_set(f.G, P.blocks[i] | P.blocks[j]):
                continue
            merged = merge_blocks(f.G, P, i, j)
            if is_c_partition(f.G, merged) is None or f.cmin > len(merged):
                return False, "merged c-partition", merged.text()
    return True, None, None


def _cmin_le_cnum(f: Facts):
    if f.G.n > CNUM_MAX or f.cmin is None:
        return None
    return f.cmin <= f.cnum, f"<= {f.cnum}", f.cmin


def _bracket(f: Facts):
    if f.G.n < 2 or f.cmin is None:
        return None
    return 2 <= f.cmin <= f.G.n, f"in [2, {f.G.n}]", f.cmin


def _below_every_c_partition(f: Facts):
    if f.G.n > ALL_PARTITIONS_MAX or f.cmin is None:
        return None
    smallest = min(len(c.partition) for c in c_partitions(f.G))
    return f.cmin <= smallest, f"<= {smallest}", f.cmin


def _strip(f: Facts):
    if not f.universal or is_complete(f.G) or f.cmin is None:
        return None
    red = strip_universal(f.G)
    inner = cmin_bruteforce(red.residual).value
    if inner is None:
        return False, f.cmin, None
    return f.cmin == inner + red.stripped, inner + red.stripped, f.cmin


def _join_with(H: Graph, k: int) -> CheckFn:
    def check(f: Facts):
        if is_complete(f.G) or f.cmin is None or f.G.n + k > 12:
            return None
        joined = cmin_bruteforce(join_graphs(H, f.G)).value
        return joined == f.cmin + k, f.cmin + k, joined
    return check


def _m_iff(f: Facts):
    if f.G.n < 3 or not f.connected:
        return None
    member = is_family_M(f.G) is not None
    return member == (f.cmin == f.G.n), f.cmin == f.G.n, member


def _star_iff(f: Facts):
    if f.G.n < 3 or not f.connected:
        return None
    star = property_star(f.G)
    return star == (f.cmin == f.G.n), f.cmin == f.G.n, star


def _m_replay(f: Facts):
    der = is_family_M(f.G)
    if der is None:
        return None
    H = der.build()
    ok = (H.n == f.G.n and sorted(H.degrees()) == sorted(f.G.degrees())
          and is_family_M(H) == der)
    return ok, der.text(), H.n


def _no_universal(fn: CheckFn) -> CheckFn:
    def check(f: Facts):
        if f.universal or f.cmin is None:
            return None
        return fn(f)
    return check


@_no_universal
def _f_iff(f: Facts):
    if min(f.G.degrees()) != 2:
        return None
    member = is_family_F(f.G) is not None
    return member == (f.cmin == 4), f.cmin == 4, member


@_no_universal
def _eq2(f: Facts):
    witness = test_cmin_eq_2(f.G) is not None
    return witness == (f.cmin == 2), f.cmin == 2, witness


@_no_universal
def _ge3(f: Facts):
    got = test_cmin_ge_3(f.G)
    return got == (f.cmin >= 3), f.cmin >= 3, got


@_no_universal
def _ge4(f: Facts):
    if f.G.max_degree() > GE4_DEGREE_CAP:
        return None
    got = test_cmin_ge_4(f.G)
    return got == (f.cmin >= 4), f.cmin >= 4, got


def _cycle_formula(f: Facts):
    if not is_cycle(f.G):
        return None
    want = cmin_formula_cycle(f.G.n)
    return f.cmin == want, want, f.cmin


def _tree_formula(f: Facts):
    if f.G.n < 2 or not is_tree(f.G):
        return None
    want = cmin_formula_tree(f.G)
    return f.cmin == want, want, f.cmin


def _dispatch(f: Facts):
    got = cmin_dispatch(f.G, check=False).value
    return got == f.cmin, f.cmin, got


SUITES: dict[str, list[tuple[str, CheckFn]]] = {
    "definitions": [
        ("graph6_roundtrip", _roundtrip),
        ("domination_consistency", _domination_consistency),
        ("gamma_one_iff_universal", _gamma_one),
        ("c_partition_exists", _c_partition_exists),
        ("certificate_sound", _certificate_sound),
        ("witness_minimal", _witness_minimal),
        ("merge_observation", _merge_observation),
    ],
    "bounds": [
        ("cmin_le_coalition_number", _cmin_le_cnum),
        ("cmin_between_2_and_n", _bracket),
        ("cmin_le_every_c_partition", _below_every_c_partition),
    ],
    "reduction": [
        ("strip_universal", _strip),
        ("join_one_universal", _join_with(K1, 1)),
        ("join_two_universal", _join_with(K2, 2)),
    ],
    "familyM": [
        ("M_iff_cmin_n", _m_iff),
        ("star_iff_cmin_n", _star_iff),
        ("M_derivation_replay", _m_replay),
    ],
    "familyF": [
        ("F_iff_cmin_4", _f_iff),
    ],
    "thresholds": [
        ("cmin_eq_2", _eq2),
        ("cmin_ge_3", _ge3),
        ("cmin_ge_4", _ge4),
    ],
    "formulas": [
        ("cycle_formula", _cycle_formula),
        ("tree_formula", _tree_formula),
        ("dispatch_agrees", _dispatch),
    ],
}
SUITE_NAMES = tuple(SUITES) + ("all",)
CHECKS: dict[str, CheckFn] = {name: fn for checks in SUITES.values() for name, fn in checks}


def suite_checks(suite: str) -> list[str]:
    if suite == "all":
        return list(CHECKS)
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    return [name for name, _ in SUITES[suite]]


def run_check(name: str, G: Graph):
    """Run one named check on one graph; None when out of scope."""
    return CHECKS[name](Facts(G))


def _jsonable(x: Any) -> Any:
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def evaluate(G: Graph, names: list[str]) -> list[tuple[Any, float]]:
    facts = Facts(G)
    out = []
    for name in names:
        start = time.perf_counter()
        res = CHECKS[name](facts)
        out.append((res, time.perf_counter() - start))
    return out


def _evaluate_text(args: tuple[str, list[str]]):
    text, names = args
    return text, evaluate(graph6_decode(text), names)


@dataclass
class CheckReport:
    name: str
    passed: int = 0
    failed: int = 0
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        out = {"name": self.name, "pass": self.passed, "fail": self.failed,
               "counterexamples": self.counterexamples}
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out


@dataclass
class VerificationReport:
    corpus: str
    suite: str
    checks: list[CheckReport]
    graphs: int = 0

    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.checks)

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        return {"schema": SCHEMA, "suite": self.suite, "corpus": self.corpus,
                "graphs": self.graphs,
                "checks": [c.to_json(timing) for c in self.checks]}

    def text(self) -> str:
        lines = [f"corpus {self.corpus}: {self.graphs} graphs, suite {self.suite}"]
        for c in self.checks:
            status = "PASS" if c.failed == 0 else "FAIL"
            lines.append(f"  {status} {c.name}: {c.passed} pass, {c.failed} fail "
                         f"({c.seconds:.2f}s)")
            for ce in c.counterexamples[:5]:
                lines.append(f"    {ce['graph6']} expected={ce['expected']} actual={ce['actual']}")
        return "\n".join(lines)


def _chunks(it: Iterable, size: int):
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


def run_verification(suite: str, graphs: Iterable[Graph], corpus: str = "",
                     jobs: int = 1) -> VerificationReport:
    """Run a suite over a corpus.  Results merge in corpus order for any ``jobs``."""
    names = suite_checks(suite)
    report = VerificationReport(corpus, suite, [CheckReport(n) for n in names])

    def absorb(text: str, results) -> None:
        report.graphs += 1
        for rep, (res, dt) in zip(report.checks, results):
            rep.seconds += dt
            if res is None:
                continue
            ok, expected, actual = res
            if ok:
                rep.passed += 1
            else:
                rep.failed += 1
                rep.counterexamples.append({
                    "graph6": text, "check": rep.name,
                    "expected": _jsonable(expected), "actual": _jsonable(actual)})

    if jobs <= 1:
        for G in graphs:
            absorb(graph6_encode(G), evaluate(G, names))
        return report
    texts = (graph6_encode(G) for G in graphs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for chunk in _chunks(texts, 4096):
            for text, results in pool.map(_evaluate_text, [(t, names) for t in chunk],
                                          chunksize=64):
                absorb(text, results)
    return report
