"""
Main entry point for the m-closed graph toolkit.
Parses a graph, dispatches one verb to the analysis modules and renders the
report as a table or as JSON.
"""

import argparse
import json
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

from dotenv import load_dotenv
from pydantic import ValidationError

# Add project root to Python path for imports
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, project_root)

from src import __version__  # noqa: E402
from src.admissible_groebner import groebner_basis, labeling_report  # noqa: E402
from src.betti_oracle import beta13_edge_ideal, verify_cor37, verify_general_remark  # noqa: E402
from src.caterpillar_labeling import (  # noqa: E402
    PATH_START,
    VARIANTS,
    algorithm1_result,
    bridge_compose,
    compose_T1_B_T2,
    sweep_labeling,
)
from src.closedness import (  # noqa: E402
    closure_number,
    cycle_labeling,
    find_weakly_closed_labeling,
    has_interval_facets,
    is_closed_labeling,
    m_of_labeling,
    tree_is_3closed,
)
from src.exceptions import GraphParseError, GuardError, MClosedError, VerificationFailure  # noqa: E402
from src.graph_core import (  # noqa: E402
    apply_labeling,
    classify,
    consecutive_distances,
    longest_induced_path_length,
    satisfies_distance_bound,
    star_transform,
)
from src.logger_config import mclosed_logger  # noqa: E402
from src.models import Graph, Labeling  # noqa: E402
from src.prime_decomposition import (  # noqa: E402
    caterpillar_minimal_primes,
    dimension_witness,
    minimal_primes,
)
from src.utils import settings, write_report  # noqa: E402
from src.utils.corpus import cycle_graph  # noqa: E402
from src.utils.graph_io import FORMATS, load_graph, parse_labeling  # noqa: E402
from src.verification import CHECKS, VerifyOptions, run_verification  # noqa: E402

EXIT_OK = 0
EXIT_USAGE = 64


class UsageErrorParser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage code instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _graph_options() -> argparse.ArgumentParser:
    parent = UsageErrorParser(add_help=False)
    parent.add_argument("--input", "-i", required=True,
                        help="Graph file, or a bundled instance name (fig1..fig4, ex25, c5, k3, c4.txt)")
    parent.add_argument("--format", "-f", default="auto", choices=FORMATS, help="Input format (default: auto)")
    parent.add_argument("--labeling", "-l", help="Inline labeling applied first, e.g. 3,1,2 (entry v = label of v)")
    return parent


def _output_options() -> argparse.ArgumentParser:
    parent = UsageErrorParser(add_help=False)
    parent.add_argument("--json", action="store_true", help="Print the report as JSON")
    parent.add_argument("--pretty", action="store_true", help="Indent JSON output")
    parent.add_argument("--output", "-o", help="Also write the JSON report to this file")
    parent.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    parent.add_argument("--quiet", "-q", action="store_true", help="Warnings and errors only")
    return parent


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per verb."""
    parser = UsageErrorParser(
        prog="main.py",
        description="m-closed graphs - Gröbner bases of binomial edge ideals, closure numbers, "
                    "caterpillar labelings and minimal primes",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Verbs:
  analyze        structure, distances and basis statistics of the given labeling
  groebner       reduced Gröbner basis from admissible paths
  mclosed        exact closure number with a witness labeling
  closed-check   closed condition, interval facets and m of the given labeling
  weakly-closed  search for a weakly closed labeling
  tree3          3-closedness of a tree (Hamiltonian path in its square)
  label          caterpillar labelings: sweep, alg1, bridge, t1bt2
  cycle-label    labeling of C_n attaining its closure number
  primes         minimal prime components P_S(G)
  dim            Krull dimension of R/J_G with a witness S
  betti          β13 certificates and the basis size identities
  verify         run the verification checks

Examples:
  python src/main.py mclosed --input c5                     # m = 4
  python src/main.py dim --input fig2                       # 19
  python src/main.py label --input fig3 --algo alg1 --start 3
  python src/main.py cycle-label 7 --json
  python src/main.py verify --all --max-n 6 --seed 42
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")
    graph, output = _graph_options(), _output_options()

    sub.add_parser("analyze", parents=[graph, output], help="structure and basis statistics")
    p = sub.add_parser("groebner", parents=[graph, output], help="admissible-path Gröbner basis")
    p.add_argument("--max-vertices", type=int, help="Only paths with at most this many vertices")

    p = sub.add_parser("mclosed", parents=[graph, output], help="exact closure number")
    p.add_argument("--max-n", type=int, help="Size guard (default MCLOSED_CLOSURE_MAX_N)")
    p.add_argument("--workers", type=int, help="Worker processes (default MCLOSED_WORKERS)")
    p.add_argument("--prune", action="store_true", help="Fix label 1 to one vertex per automorphism orbit")
    p.add_argument("--cycle-bound", action="store_true",
                   help="Stop at the chordless-cycle bound (faster; the report is then not marked exhaustive)")

    sub.add_parser("closed-check", parents=[graph, output], help="closed condition of the given labeling")
    p = sub.add_parser("weakly-closed", parents=[graph, output], help="find a weakly closed labeling")
    p.add_argument("--max-n", type=int, help="Size guard (default MCLOSED_CLOSURE_MAX_N)")
    sub.add_parser("tree3", parents=[graph, output], help="3-closedness of a tree")

    p = sub.add_parser("label", parents=[graph, output], help="caterpillar labelings")
    p.add_argument("--algo", choices=("sweep", "alg1", "bridge", "t1bt2"), default="alg1")
    p.add_argument("--start", type=int, help="Start vertex for alg1")
    p.add_argument("--variant", choices=VARIANTS, default=PATH_START)
    p.add_argument("--input2", help="Second caterpillar (bridge) or the middle piece b (t1bt2)")
    p.add_argument("--input3", help="Third caterpillar t2 (t1bt2)")
    p.add_argument("--bridge", help="u,v: u in --input, v in --input2 (bridge)")
    p.add_argument("--joins", help="x1,a;x2,z (t1bt2)")

    p = sub.add_parser("cycle-label", parents=[output], help="labeling of C_n")
    p.add_argument("n", type=int, help="Cycle length (>= 4)")

    p = sub.add_parser("primes", parents=[graph, output], help="minimal prime components")
    p.add_argument("--max-n", type=int, help="Size guard (default MCLOSED_PRIMES_MAX_N)")
    p.add_argument("--caterpillar", action="store_true", help="Use the central-path rule for caterpillars")
    p = sub.add_parser("dim", parents=[graph, output], help="Krull dimension")
    p.add_argument("--max-n", type=int, help="Size guard (default MCLOSED_PRIMES_MAX_N)")

    p = sub.add_parser("betti", parents=[graph, output], help="β13 and basis size identities")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--cor37", action="store_true", help="|G| = n - 1 + β13(I(T*)) for a labeled tree")
    mode.add_argument("--general", action="store_true", help="|G| = |E| + β13(I(G*)) - 2 K3(G)")

    p = sub.add_parser("verify", parents=[output], help="run the verification checks")
    p.add_argument("--all", action="store_true", help="Every check, the Buchberger oracle included")
    p.add_argument("--oracle", action="store_true", help="Include the Buchberger oracle check")
    p.add_argument("--check", action="append", choices=[name for name, _ in CHECKS],
                   help="Run only this check (repeatable)")
    p.add_argument("--max-n", type=int,
                   help="Cap on every exhaustive corpus (default: each check's own size, up to 9)")
    p.add_argument("--seed", type=int, help="Random corpus seed (default MCLOSED_SEED)")
    p.add_argument("--samples", type=int, default=1000, help="Labelings sampled per graph (default: 1000)")
    p.add_argument("--caterpillars", type=int, default=200, help="Random caterpillars per corpus (default: 200)")
    p.add_argument("--workers", type=int, help="Worker processes (default MCLOSED_WORKERS)")
    return parser


def _default_guards() -> Dict[str, int]:
    return {
        "closure_max_n": settings.closure_max_n(),
        "primes_max_n": settings.primes_max_n(),
        "induced_path_max_n": settings.induced_path_max_n(),
        "oracle_max_n": settings.oracle_max_n(),
    }


def _load(args, path: Optional[str] = None) -> Graph:
    g = load_graph(path or args.input, args.format)
    if getattr(args, "labeling", None) and path is None:
        g = apply_labeling(g, parse_labeling(args.labeling, g.n))
    return g


def _pair(text: str, flag: str) -> tuple:
    try:
        a, b = (int(part) for part in text.split(","))
    except ValueError:
        raise GraphParseError(f"expected two comma-separated integers, got {text!r}", flag)
    return a, b


def _labeled_summary(g: Graph, lab: Labeling) -> Dict[str, Any]:
    labeled = apply_labeling(g, lab)
    return {
        "labeling": list(lab.perm),
        "vertex_order": list(lab.vertex_order()),
        "distance_bound": satisfies_distance_bound(labeled),
        "max_admissible_degree": m_of_labeling(labeled),
    }


def cmd_analyze(args) -> Dict[str, Any]:
    g = _load(args)
    report = labeling_report(g)
    result: Dict[str, Any] = {
        "graph": g.as_json(),
        "classification": classify(g).model_dump(),
        "consecutive_distances": [d if d != float("inf") else None for d in consecutive_distances(g)],
        "distance_bound": satisfies_distance_bound(g),
        "basis": report.model_dump(),
    }
    try:
        result["longest_induced_path"] = longest_induced_path_length(g)
    except GuardError as e:
        mclosed_logger.warning(f"longest induced path skipped: {e}")
        result["longest_induced_path"] = None
    return result


def cmd_groebner(args) -> Dict[str, Any]:
    g = _load(args)
    basis = groebner_basis(g, args.max_vertices)
    return {
        "n": g.n,
        "elements": [element.to_text() for element in basis],
        "paths": [list(element.path.vertices) for element in basis],
        "stats": labeling_report(g).stats.model_dump() if args.max_vertices is None else None,
    }


def cmd_mclosed(args) -> Dict[str, Any]:
    g = _load(args)
    report = closure_number(g, max_n=args.max_n, prune=args.prune, workers=args.workers,
                            use_cycle_bound=args.cycle_bound)
    return {
        "m": report.m,
        "witness": list(report.witness.perm),
        "exhaustive": report.exhaustive,
        "searched": report.searched,
        "lower_bound": report.lower_bound,
        "cycle_bound": report.cycle_bound,
        "symmetry_pruning": report.symmetry_pruning,
        "guards": {"max_n": report.max_n},
    }


def cmd_closed_check(args) -> Dict[str, Any]:
    g = _load(args)
    return {
        "closed": is_closed_labeling(g),
        "interval_facets": has_interval_facets(g),
        "m": m_of_labeling(g),
    }


def cmd_weakly_closed(args) -> Dict[str, Any]:
    g = _load(args)
    guard = settings.closure_max_n() if args.max_n is None else args.max_n
    witness = find_weakly_closed_labeling(g, guard)
    return {
        "weakly_closed": witness is not None,
        "witness": list(witness.perm) if witness is not None else None,
        "guards": {"max_n": guard},
    }


def cmd_tree3(args) -> Dict[str, Any]:
    t = _load(args)
    result = tree_is_3closed(t)
    return {"three_closed": result.answer,
            "witness": list(result.witness.perm) if result.witness is not None else None}


def cmd_label(args) -> Dict[str, Any]:
    notes: List[str] = []
    if args.algo == "sweep":
        g = _load(args)
        lab = sweep_labeling(g)
    elif args.algo == "alg1":
        if args.start is None:
            raise GraphParseError("--start is required for --algo alg1", "--start")
        g = _load(args)
        result = algorithm1_result(g, args.start, args.variant)
        lab, notes = result.labeling, result.notes
    elif args.algo == "bridge":
        if not (args.input2 and args.bridge):
            raise GraphParseError("--input2 and --bridge are required for --algo bridge", "--bridge")
        h1, h2 = _load(args), _load(args, args.input2)
        u, v = _pair(args.bridge, "--bridge")
        lab1 = algorithm1_result(h1, u, PATH_START).labeling
        lab2 = algorithm1_result(h2, v, PATH_START).labeling
        g, lab = bridge_compose(h1, lab1, h2, lab2, (u, v))
    else:
        if not (args.input2 and args.input3 and args.joins):
            raise GraphParseError("--input2, --input3 and --joins are required for --algo t1bt2", "--joins")
        first, second = args.joins.split(";") if ";" in args.joins else (args.joins, "")
        joins = (_pair(first, "--joins"), _pair(second, "--joins"))
        g, lab = compose_T1_B_T2(_load(args), _load(args, args.input2), _load(args, args.input3), joins)

    summary = _labeled_summary(g, lab)
    summary["notes"] = notes
    if args.algo in ("bridge", "t1bt2"):
        summary["graph"] = g.as_json()
    return summary


def cmd_cycle_label(args) -> Dict[str, Any]:
    lab = cycle_labeling(args.n)
    return _labeled_summary(cycle_graph(args.n), lab)


def cmd_primes(args) -> Dict[str, Any]:
    g = _load(args)
    guard = settings.primes_max_n() if args.max_n is None else args.max_n
    components = caterpillar_minimal_primes(g) if args.caterpillar else minimal_primes(g, guard)
    return {
        "components": [pc.as_json() for pc in components],
        "text": [pc.to_text() for pc in components],
        "guards": {"max_n": guard},
    }


def cmd_dim(args) -> Dict[str, Any]:
    g = _load(args)
    guard = settings.primes_max_n() if args.max_n is None else args.max_n
    witness = dimension_witness(g, guard)
    return {"dim": witness.dim_contribution, "witness": witness.as_json(), "guards": {"max_n": guard}}


def cmd_betti(args) -> Dict[str, Any]:
    g = _load(args)
    if args.cor37:
        return verify_cor37(g).model_dump()
    if args.general:
        return verify_general_remark(g).model_dump()
    return beta13_edge_ideal(star_transform(g)).model_dump()


def cmd_verify(args) -> Dict[str, Any]:
    options = VerifyOptions(
        max_n=args.max_n,
        seed=settings.default_seed() if args.seed is None else args.seed,
        oracle=args.all or args.oracle,
        samples=args.samples,
        caterpillars=args.caterpillars,
        workers=settings.default_workers() if args.workers is None else args.workers,
    )
    report = run_verification(options, args.check)
    result = report.model_dump()
    result["status"] = report.status
    result["skipped"] = report.skipped
    return result


COMMANDS = {
    "analyze": cmd_analyze,
    "groebner": cmd_groebner,
    "mclosed": cmd_mclosed,
    "closed-check": cmd_closed_check,
    "weakly-closed": cmd_weakly_closed,
    "tree3": cmd_tree3,
    "label": cmd_label,
    "cycle-label": cmd_cycle_label,
    "primes": cmd_primes,
    "dim": cmd_dim,
    "betti": cmd_betti,
    "verify": cmd_verify,
}


def render_table(verb: str, result: Dict[str, Any]) -> str:
    """Human-readable rendering of a report."""
    lines = [f"{verb} (mclosed {__version__})"]
    if verb == "verify":
        for check in result["checks"]:
            state = "PASS" if check["passed"] else ("SKIP" if not check["ran"] else "FAIL")
            extra = check["skipped_reason"] or (check["failures"][0] if check["failures"] else "")
            lines.append(f"  {state:<5} {check['name']:<28} cases={check['cases']:<6} {extra}")
        lines.append(f"status: {result['status']}")
        return "\n".join(lines)
    if verb == "primes":
        lines.extend(f"  {text}" for text in result["text"])
        return "\n".join(lines)
    for key, value in result.items():
        if key == "graph":
            continue
        lines.append(f"  {key:<24} {json.dumps(value) if isinstance(value, (dict, list)) else value}")
    if "max_admissible_degree" in result:
        lines.append(f"max admissible degree = {result['max_admissible_degree']}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one verb and return the process exit code.

    0 success, 1 domain error, 2 size guard, 3 verification failure,
    64 usage error, 65 malformed input.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    # Load environment variables
    load_dotenv()
    mclosed_logger.set_level(settings.log_level())
    if args.verbose:
        mclosed_logger.set_level("DEBUG")
    elif args.quiet:
        mclosed_logger.set_level("WARNING")

    mclosed_logger.run_start(f"m-closed graphs - {args.verb}")
    try:
        result = COMMANDS[args.verb](args)
    except MClosedError as e:
        mclosed_logger.step_error(args.verb, str(e))
        mclosed_logger.run_complete(success=False)
        return e.exit_code
    except ValidationError as e:
        mclosed_logger.step_error(args.verb, str(e))
        mclosed_logger.run_complete(success=False)
        return 1

    guards = {**_default_guards(), **result.pop("guards", {})}
    result = {"version": __version__, "command": args.verb, "guards": guards, **result}
    if args.output:
        write_report(result, args.output)
    if args.json:
        print(json.dumps(result, indent=2 if args.pretty else None, ensure_ascii=False))
    else:
        print(render_table(args.verb, result))

    failed = args.verb == "verify" and result["status"] == "fail"
    mclosed_logger.run_complete(success=not failed)
    return VerificationFailure.exit_code if failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
