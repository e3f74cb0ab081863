"""
Named verification checks run by `main.py verify`.

Each check reproduces one proven property on a corpus of small graphs and
returns a CheckResult. A check that hits a size guard is reported as
skipped, never as passed.
"""

import math
import random
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, Field

from src import __version__
from src.admissible_groebner import basis_stats, groebner_basis
from src.betti_oracle import verify_cor37, verify_general_remark
from src.buchberger_oracle import STRATEGIES, edge_generators, oracle_diff, reduced_groebner
from src.caterpillar_labeling import PATH_START, algorithm1_labeling, bridge_compose
from src.closedness import (
    closure_number,
    cycle_closure_value,
    cycle_labeling,
    has_interval_facets,
    is_closed_labeling,
    is_weakly_closed,
    m_of_labeling,
    tree_is_3closed,
)
from src.exceptions import GuardError, MClosedError
from src.graph_core import (
    apply_labeling,
    build_graph,
    is_connected,
    longest_induced_cycle_length,
    longest_induced_path_length,
    satisfies_distance_bound,
    split_at_bridge,
)
from src.logger_config import mclosed_logger
from src.models import CheckResult, ClosureReport, Graph, VerifyReport
from src.prime_decomposition import caterpillar_minimal_primes, krull_dimension, minimal_primes
from src.utils import ProgressTracker, settings
from src.utils.corpus import (
    all_labelings,
    connected_graphs_up_to,
    cycle_graph,
    labeling_sample,
    non_path_trees_up_to,
    random_caterpillar,
    random_caterpillar_pair,
    random_central_vertex,
)
from src.utils.graph_io import load_graph

# Expected labels of the bundled fig3 and fig4 instances, indexed by vertex id
FIG3_LABELS = (12, 11, 1, 7, 3, 6, 5, 10, 9, 8, 2, 4)
FIG4_LABELS = tuple(13 - label for label in FIG3_LABELS) + (21, 20, 13, 17, 15, 16, 23, 22, 19, 18, 14)
FIG3_START = 3
FIG4_BRIDGE = (3, 15)


class VerifyOptions(BaseModel):
    """Scope of one verification run."""

    max_n: Optional[int] = Field(
        None, ge=1, description="Caps every exhaustive corpus; None keeps each check's own default size")
    seed: int = Field(42, description="Seed for every random corpus")
    oracle: bool = Field(False, description="Run the Buchberger certification check")
    samples: int = Field(1000, ge=1, description="Labelings sampled per graph in the closedness cross-check")
    caterpillars: int = Field(200, ge=1, description="Size of each random caterpillar corpus")
    oracle_max_n: int = Field(4, ge=1, description="Exhaustive oracle corpus bound")
    workers: int = Field(1, ge=1, description="Processes for the closure-number searches")


class _Check:
    """Accumulates cases and failures for one named check."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failures: List[str] = []
        self.details: Dict[str, object] = {}

    def expect(self, condition: bool, message: str) -> None:
        self.cases += 1
        if not condition:
            self.failures.append(message)

    def result(self) -> CheckResult:
        return CheckResult(
            name=self.name,
            ran=True,
            passed=not self.failures,
            cases=self.cases,
            details=self.details,
            failures=self.failures[:20],
        )


def _corpus_bound(options: VerifyOptions, nominal: int) -> int:
    return nominal if options.max_n is None else min(nominal, options.max_n)


def _closure_report(g: Graph, options: VerifyOptions) -> ClosureReport:
    # full search: the cycle bound is one of the statements under test
    return closure_number(g, max_n=g.n, workers=options.workers, use_cycle_bound=False)


def _closure(g: Graph, options: VerifyOptions) -> int:
    return _closure_report(g, options).m


class _ClosureCache:
    """Closure numbers by isomorphism class, bucketed by WL hash."""

    def __init__(self, options: VerifyOptions):
        self.options = options
        self._buckets: Dict[str, List[Tuple[nx.Graph, int]]] = {}

    def get(self, g: Graph) -> int:
        nxg = g.to_networkx()
        key = nx.weisfeiler_lehman_graph_hash(nxg)
        bucket = self._buckets.setdefault(key, [])
        for other, m in bucket:
            if nx.is_isomorphic(nxg, other):
                return m
        m = _closure(g, self.options)
        bucket.append((nxg, m))
        return m


def _with_edges(graphs) -> List[Graph]:
    return [g for g in graphs if g.edge_count > 0]


def check_cycle_closure_numbers(options: VerifyOptions) -> CheckResult:
    """closure_number(C_n) and the constructed cycle labelings attain n/2+1 or (n+1)/2+1."""
    check = _Check("cycle_closure_numbers")
    top = max(5, _corpus_bound(options, 9))
    for n in range(4, top + 1):
        c = cycle_graph(n)
        expected = cycle_closure_value(n)
        report = _closure_report(c, options)
        check.expect(report.exhaustive, f"C{n}: search did not rule out smaller values")
        check.expect(report.m == expected, f"C{n}: closure number {report.m}, expected {expected}")
        built = m_of_labeling(apply_labeling(c, cycle_labeling(n)))
        check.expect(built == expected, f"C{n}: constructed labeling gives {built}, expected {expected}")
    check.details["n_range"] = [4, top]
    return check.result()


def check_degree_gap_example(options: VerifyOptions) -> CheckResult:
    """The ex25 basis has a degree-5 element and no degree-4 element."""
    check = _Check("degree_gap_example")
    stats = basis_stats(groebner_basis(load_graph("ex25")))
    check.expect(stats.degree_histogram.get(5, 0) >= 1, "no element of degree 5")
    check.expect(stats.degree_histogram.get(4, 0) == 0, "an element of degree 4 is present")
    check.details["degree_histogram"] = {str(k): v for k, v in stats.degree_histogram.items()}
    return check.result()


def check_spider_not_3closed(options: VerifyOptions) -> CheckResult:
    """The 16-vertex spider is not 3-closed."""
    check = _Check("spider_not_3closed")
    started = time.time()
    answer = tree_is_3closed(load_graph("fig1")).answer
    elapsed = time.time() - started
    check.expect(not answer, "tree_is_3closed(fig1) returned true")
    check.details["seconds"] = round(elapsed, 3)
    check.details["under_one_second"] = elapsed < 1.0
    return check.result()


def check_fig2_dimension(options: VerifyOptions) -> CheckResult:
    check = _Check("fig2_dimension")
    dim = krull_dimension(load_graph("fig2"))
    check.expect(dim == 19, f"krull_dimension(fig2) = {dim}, expected 19")
    check.details["dimension"] = dim
    return check.result()


def _s_family(components) -> List[Tuple[int, ...]]:
    return sorted(pc.s for pc in components)


def check_caterpillar_primes(options: VerifyOptions) -> CheckResult:
    """The central-path rule for minimal primes agrees with brute-force enumeration."""
    check = _Check("caterpillar_minimal_primes")
    rng = random.Random(options.seed)
    corpus = [load_graph("fig2")] + [random_caterpillar(rng, 3, 14) for _ in range(options.caterpillars)]
    tracker = ProgressTracker("caterpillars", report_every=50)
    tracker.start_processing()
    for k, t in enumerate(corpus, start=1):
        case_start = time.time()
        rule = _s_family(caterpillar_minimal_primes(t))
        brute = _s_family(minimal_primes(t))
        check.expect(rule == brute, f"{t}: rule {rule} vs enumeration {brute}")
        if rule != brute:
            tracker.increment_failures()
        tracker.track_case(case_start)
        tracker.report_progress(k, len(corpus))
    tracker.report_metrics("Minimal prime comparison")
    check.details["corpus_size"] = len(corpus)
    return check.result()


def check_oracle_certification(options: VerifyOptions) -> CheckResult:
    """Buchberger completion equals the admissible-path basis."""
    check = _Check("oracle_certification")
    if not options.oracle:
        return CheckResult(name=check.name, ran=False, passed=False,
                           skipped_reason="Buchberger oracle not requested (--oracle or --all)")
    bound = _corpus_bound(options, options.oracle_max_n)
    for g in _with_edges(connected_graphs_up_to(bound, min_n=2)):
        for lab in all_labelings(g.n):
            labeled = apply_labeling(g, lab)
            diff = oracle_diff(labeled, max_n=bound)
            check.expect(not diff["extra"] and not diff["missing"], f"{labeled}: {diff}")

    named = [load_graph("ex25"), load_graph("c5"), load_graph("fig3")]
    for g in named:
        diff = oracle_diff(g, max_n=g.n)
        check.expect(not diff["extra"] and not diff["missing"], f"{g}: {diff}")

    ex25 = load_graph("ex25")
    runs = [frozenset(reduced_groebner(edge_generators(ex25), strategy=s)) for s in STRATEGIES]
    check.expect(all(run == runs[0] for run in runs), "pair selection strategies disagree on ex25")
    check.details["exhaustive_bound"] = bound
    return check.result()


def check_closed_cross_check(options: VerifyOptions) -> CheckResult:
    """is_closed_labeling agrees with m_of_labeling = 2 and with interval facets."""
    check = _Check("closedness_cross_check")
    rng = random.Random(options.seed)
    bound = _corpus_bound(options, 6)
    graphs = _with_edges(connected_graphs_up_to(bound, min_n=2))
    tracker = ProgressTracker("graphs", report_every=25)
    tracker.start_processing()
    for k, g in enumerate(graphs, start=1):
        any_closed = False
        sample = labeling_sample(g.n, options.samples, rng)
        for lab in sample:
            labeled = apply_labeling(g, lab)
            closed = is_closed_labeling(labeled)
            any_closed = any_closed or closed
            check.expect(closed == (m_of_labeling(labeled) == 2), f"{labeled}: closed={closed}")
            if closed:
                check.expect(has_interval_facets(labeled), f"{labeled}: closed but a facet is not an interval")
        if len(sample) == math.factorial(g.n):
            m = _closure(g, options)
            check.expect((m == 2) == any_closed, f"{g}: closure {m}, some labeling closed = {any_closed}")
        tracker.report_progress(k, len(graphs))
    check.details.update({"max_n": bound, "graphs": len(graphs), "samples_per_graph": options.samples})
    return check.result()


def check_tree_criterion(options: VerifyOptions) -> CheckResult:
    """For non-path trees, a labeling with d(i, i+1) <= 2 exists iff the closure number is 3."""
    check = _Check("tree_criterion")
    bound = _corpus_bound(options, 9)
    count = 0
    for t in non_path_trees_up_to(bound):
        count += 1
        result = tree_is_3closed(t)
        m = _closure(t, options)
        check.expect(result.answer == (m == 3), f"{t}: tree_is_3closed={result.answer}, closure {m}")
        if result.witness is not None:
            check.expect(satisfies_distance_bound(apply_labeling(t, result.witness)),
                         f"{t}: witness violates the distance bound")

    # labelings with d(i, i+1) <= 2 that are not 3-closed labelings
    remark = build_graph(5, [(1, 2), (2, 4), (1, 3), (3, 4), (2, 5)])
    check.expect(satisfies_distance_bound(remark) and m_of_labeling(remark) > 3,
                 "remark graph: expected distance bound with a basis element of degree above 3")
    c5 = load_graph("c5")
    check.expect(satisfies_distance_bound(c5) and _closure(c5, options) == 4,
                 "c5: expected distance bound with closure number 4")
    check.details.update({"max_n": bound, "trees": count})
    return check.result()


def check_weakly_closed_bound(options: VerifyOptions) -> CheckResult:
    """Weakly closed graphs have closure number at most 4; caterpillars are weakly closed."""
    check = _Check("weakly_closed_bound")
    bound = _corpus_bound(options, 7)
    weakly = 0
    for g in _with_edges(connected_graphs_up_to(bound, min_n=2)):
        if is_weakly_closed(g, max_n=g.n):
            weakly += 1
            m = _closure(g, options)
            check.expect(m <= 4, f"{g}: weakly closed with closure number {m}")

    rng = random.Random(options.seed + 1)
    for _ in range(options.caterpillars):
        t = random_caterpillar(rng, 3, 9)
        check.expect(is_weakly_closed(t, max_n=t.n), f"{t}: caterpillar not weakly closed")
    check.details.update({"max_n": bound, "weakly_closed_graphs": weakly})
    return check.result()


def check_basis_size_identities(options: VerifyOptions) -> CheckResult:
    """|G| = n - 1 + β13(I(T*)) for 3-closed trees and the general formula for 3-closed labelings."""
    check = _Check("basis_size_identities")
    bound = _corpus_bound(options, 9)
    for t in non_path_trees_up_to(bound):
        witness = tree_is_3closed(t).witness
        if witness is None:
            continue
        identity = verify_cor37(apply_labeling(t, witness))
        check.expect(identity.equal, f"{t}: {identity.lhs} != {identity.rhs}")

    rng = random.Random(options.seed + 2)
    for _ in range(options.caterpillars):
        t = random_caterpillar(rng, 3, 14)
        start = random_central_vertex(rng, t)
        labeled = apply_labeling(t, algorithm1_labeling(t, start, PATH_START))
        identity = verify_cor37(labeled)
        check.expect(identity.equal, f"{t} from {start}: {identity.lhs} != {identity.rhs}")

    general_bound = _corpus_bound(options, 6)
    named = [build_graph(3, [(1, 2), (2, 3), (1, 3)]), cycle_graph(4)]
    witnesses = []
    for g in _with_edges(connected_graphs_up_to(general_bound, min_n=2)):
        report = _closure_report(g, options)
        if report.m <= 3:
            witnesses.append(apply_labeling(g, report.witness))
    for g in named + witnesses:
        identity = verify_general_remark(g)
        check.expect(identity.equal, f"{g}: {identity.lhs} != {identity.rhs}")
    check.details.update({"tree_max_n": bound, "general_max_n": general_bound,
                          "general_cases": len(named) + len(witnesses)})
    return check.result()


def check_figure_labelings(options: VerifyOptions) -> CheckResult:
    """alg1 on fig3 from v3 and the bridge join on fig4 reproduce the expected labels."""
    check = _Check("figure_labelings")
    fig3 = load_graph("fig3")
    lab3 = algorithm1_labeling(fig3, FIG3_START, PATH_START)
    check.expect(lab3.perm == FIG3_LABELS, f"fig3 labels {list(lab3.perm)}")
    check.expect(satisfies_distance_bound(apply_labeling(fig3, lab3)), "fig3 labeling violates the distance bound")

    fig4 = load_graph("fig4")
    h1, map1, h2, map2 = split_at_bridge(fig4, FIG4_BRIDGE)
    u, v = map1[FIG4_BRIDGE[0]], map2[FIG4_BRIDGE[1]]
    lab1 = algorithm1_labeling(h1, u, PATH_START)
    lab2 = algorithm1_labeling(h2, v, PATH_START)
    joined, lab4 = bridge_compose(h1, lab1, h2, lab2, (u, v))
    check.expect(set(joined.edges) == set(fig4.edges), "bridge join does not rebuild fig4")
    check.expect(lab4.perm == FIG4_LABELS, f"fig4 labels {list(lab4.perm)}")
    check.expect(satisfies_distance_bound(apply_labeling(joined, lab4)), "fig4 labeling violates the distance bound")
    return check.result()


def check_closure_propositions(options: VerifyOptions) -> CheckResult:
    """Induced path bound, induced subgraph monotonicity, chordless cycle bound and bridge joins."""
    check = _Check("closure_propositions")
    cache = _ClosureCache(options)
    bound = _corpus_bound(options, 7)
    for g in _with_edges(connected_graphs_up_to(bound, min_n=2)):
        m = cache.get(g)
        ell = longest_induced_path_length(g, max_n_guard=g.n)
        check.expect(m <= ell + 1, f"{g}: closure {m} above induced path bound {ell + 1}")
        longest_cycle = longest_induced_cycle_length(g, max_n_guard=g.n)
        check.expect(longest_cycle <= 2 * m - 2, f"{g}: chordless {longest_cycle}-cycle with closure {m}")

    sub_bound = _corpus_bound(options, 6)
    for g in _with_edges(connected_graphs_up_to(sub_bound, min_n=3)):
        m = cache.get(g)
        for keep in _vertex_subsets(g.n):
            h, _ = g.induced_subgraph(keep)
            if h.edge_count == 0 or not is_connected(h):
                continue
            check.expect(cache.get(h) <= m, f"{g}: induced subgraph on {list(keep)} has larger closure number")

    rng = random.Random(options.seed + 3)
    for _ in range(options.caterpillars):
        t1, t2 = random_caterpillar_pair(rng, 8)
        u, v = random_central_vertex(rng, t1), random_central_vertex(rng, t2)
        lab1 = algorithm1_labeling(t1, u, PATH_START)
        lab2 = algorithm1_labeling(t2, v, PATH_START)
        m1 = m_of_labeling(apply_labeling(t1, lab1))
        m2 = m_of_labeling(apply_labeling(t2, lab2))
        joined, lab = bridge_compose(t1, lab1, t2, lab2, (u, v))
        m = m_of_labeling(apply_labeling(joined, lab))
        check.expect(m <= max(m1, m2), f"bridge join of {t1} and {t2}: {m} > max({m1}, {m2})")
    check.details.update({"max_n": bound, "subgraph_max_n": sub_bound})
    return check.result()


def _vertex_subsets(n: int):
    for mask in range(1, (1 << n) - 1):
        yield [v for v in range(1, n + 1) if mask >> (v - 1) & 1]


CHECKS: Sequence[Tuple[str, Callable[[VerifyOptions], CheckResult]]] = (
    ("cycle_closure_numbers", check_cycle_closure_numbers),
    ("degree_gap_example", check_degree_gap_example),
    ("spider_not_3closed", check_spider_not_3closed),
    ("fig2_dimension", check_fig2_dimension),
    ("caterpillar_minimal_primes", check_caterpillar_primes),
    ("oracle_certification", check_oracle_certification),
    ("closedness_cross_check", check_closed_cross_check),
    ("tree_criterion", check_tree_criterion),
    ("weakly_closed_bound", check_weakly_closed_bound),
    ("basis_size_identities", check_basis_size_identities),
    ("figure_labelings", check_figure_labelings),
    ("closure_propositions", check_closure_propositions),
)


def run_verification(options: VerifyOptions, only: Optional[Sequence[str]] = None) -> VerifyReport:
    """
    Run the named checks (all of them by default) and collect a VerifyReport.

    A check stopped by a size guard is recorded as skipped with the reason.
    """
    selected = [(name, fn) for name, fn in CHECKS if only is None or name in only]
    results: List[CheckResult] = []
    for index, (name, fn) in enumerate(selected, start=1):
        mclosed_logger.step_start(f"Check {index}/{len(selected)}: {name}", (fn.__doc__ or "").strip())
        try:
            result = fn(options)
        except GuardError as e:
            result = CheckResult(name=name, ran=False, passed=False, skipped_reason=str(e))
        except MClosedError as e:
            result = CheckResult(name=name, ran=True, passed=False, failures=[f"{type(e).__name__}: {e}"])
        results.append(result)
        if not result.ran:
            mclosed_logger.warning(f"⏭️  {name} skipped: {result.skipped_reason}")
        elif result.passed:
            mclosed_logger.step_complete(name, {"Cases": result.cases})
        else:
            mclosed_logger.step_error(name, f"{len(result.failures)} failing cases, first: {result.failures[0]}")

    guards = {
        "max_n": options.max_n,
        "oracle_max_n": options.oracle_max_n,
        "samples": options.samples,
        "caterpillars": options.caterpillars,
        "closure_max_n": settings.closure_max_n(),
        "primes_max_n": settings.primes_max_n(),
    }
    return VerifyReport(version=__version__, seed=options.seed, guards=guards, checks=results)
