import argparse
import logging
import sys

from curvilinearguard.config.graph_loader import (
    dominating_set_from_data,
    dominating_set_to_data,
    dump_json,
    graph_from_data,
    graph_to_data,
    load_graph,
    read_json_file,
    write_json_file,
)
from curvilinearguard.config.guarding_config_loader import (
    GuardingConfig,
    load_guarding_config,
)
from curvilinearguard.config.polygon_loader import (
    guard_set_from_data,
    guard_set_to_data,
    load_guard_set,
    load_polygon,
    polygon_from_data,
    polygon_to_data,
)
from curvilinearguard.document.report_writer import (
    sigma_table,
    write_csv,
    write_report_yaml,
)
from curvilinearguard.document.svg_renderer import render_graph_svg, render_polygon_svg
from curvilinearguard.dominate.algorithm_registry import ALGORITHMS, algorithm_for
from curvilinearguard.errors import (
    DominationError,
    FormatError,
    GeneratorError,
    GeometryError,
    GraphError,
    MonotoneError,
    NotMonotone,
)
from curvilinearguard.geometry.constrained_triangulator import build_constrained_triangulation
from curvilinearguard.geometry.guard_pipeline import Strategy, run_guard_pipeline
from curvilinearguard.geometry.visibility_checker import verify_guard_set
from curvilinearguard.lowerbounds.graph_lower_bound_generator import (
    gen_diag_lb,
    gen_edge_lb,
    gen_edge_lb_glued,
)
from curvilinearguard.lowerbounds.polygon_lower_bound_generator import (
    gen_fan_polygon,
    gen_monotone_lb,
    gen_spike_polygon,
    random_monotone_polygon,
)
from curvilinearguard.monotone.monotone_decomposer import decompose
from curvilinearguard.monotone.monotone_guard_selector import monotone_edge_guards
from curvilinearguard.oracle.exhaustive_checker import MAX_EXHAUSTIVE_SIZE, check_bound_exhaustive
from curvilinearguard.tracking_decorator import configure_logging
from curvilinearguard.trigraph.triangulation_graph import Mode

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FORMAT = 1
EXIT_INVALID = 2
EXIT_NOT_MONOTONE = 3
EXIT_VIOLATION = 4


def _emit(content, out_path):
    if out_path:
        write_json_file(out_path, content)
    else:
        sys.stdout.write(dump_json(content))


def cmd_dominate(args, config: GuardingConfig):
    graph = load_graph(args.input)
    algorithm = algorithm_for(args.algo)
    result = algorithm.run(graph)
    logger.info(f"{algorithm.name} n={graph.n}: {len(result)} members, bound {algorithm.bound(graph.n)}")
    _emit(dominating_set_to_data(result), args.out)
    if args.svg:
        render_graph_svg(graph, result, out_path=args.svg, rendering=config.rendering)
    return EXIT_OK


def cmd_guard(args, config: GuardingConfig):
    polygon = load_polygon(args.input)
    report = run_guard_pipeline(polygon, Strategy(args.strategy))
    _emit(guard_set_to_data(report.guard_set), args.out)
    if args.report:
        write_report_yaml(report.summary(), args.report, quiet=True)
    if args.svg:
        render_polygon_svg(
            polygon, report.guard_set, out_path=args.svg, rendering=config.rendering
        )
    return EXIT_OK


def cmd_monotone(args, config: GuardingConfig):
    polygon = load_polygon(args.input)
    decomposition = decompose(polygon)
    guard_set = monotone_edge_guards(polygon)
    table = sigma_table(decomposition)
    if args.csv:
        write_csv(table, args.csv, quiet=True)
    else:
        sys.stderr.write(table.to_string(index=False) + "\n")
    _emit(guard_set_to_data(guard_set), args.out)
    return EXIT_OK


def generate_instance(args):
    """Lower bound instance picked by the family name, as JSON data"""
    family = args.family
    if family == "diag":
        return graph_to_data(gen_diag_lb(args.m, args.variant))
    if family == "edge":
        return graph_to_data(gen_edge_lb(args.m, args.residue))
    if family == "glued":
        return graph_to_data(gen_edge_lb_glued(args.m))
    if family == "gamma7":
        return graph_to_data(gen_edge_lb_glued(1))
    if family == "spikes":
        return polygon_to_data(gen_spike_polygon(args.k))
    if family == "fan":
        return polygon_to_data(gen_fan_polygon(args.n))
    if family == "monotone":
        return polygon_to_data(gen_monotone_lb(args.variant, args.m))
    return polygon_to_data(random_monotone_polygon(args.n, args.seed))


def cmd_genlb(args, config: GuardingConfig):
    if args.seed is None:
        args.seed = config.random.seed
    _emit(generate_instance(args), args.out)
    return EXIT_OK


def cmd_verify(args, config: GuardingConfig):
    if args.exhaustive is not None:
        mode = Mode(args.mode or config.exhaustive.mode)
        report = check_bound_exhaustive(
            args.exhaustive,
            mode,
            algorithm=args.algo or config.exhaustive.algorithm,
            with_optimum=args.optimum,
            quiet=args.json,
            max_n=config.exhaustive.max_n or MAX_EXHAUSTIVE_SIZE,
        )
        if args.csv:
            report.write_csv(args.csv)
        if args.json:
            sys.stdout.write(dump_json(report.to_dict()))
        else:
            print(report.summary())
        return EXIT_VIOLATION if report.violations or report.exception else EXIT_OK

    if args.polygon is None or args.guards is None:
        raise FormatError("verify needs a polygon and a guard set, or --exhaustive n")

    polygon = load_polygon(args.polygon)
    guard_set = load_guard_set(args.guards)
    density = args.density or config.verification.density
    report = verify_guard_set(
        polygon, guard_set, density=density, arc_samples=config.verification.arc_samples
    )
    content = {
        "covered": report.covered,
        "samples": report.samples,
        "witnesses": [list(w) for w in report.witnesses],
        "caveat": report.caveat,
    }
    if args.json:
        sys.stdout.write(dump_json(content))
    else:
        print(f"covered={str(report.covered).lower()} samples={report.samples}")
        for witness in report.witnesses[:10]:
            print(f"✗️ Unguarded point ({witness[0]:.6f}, {witness[1]:.6f})")
    return EXIT_OK if report.covered else EXIT_VIOLATION


def cmd_render(args, config: GuardingConfig):
    data = read_json_file(args.input)
    result = read_json_file(args.result) if args.result else None

    if isinstance(data, dict) and "n" in data:
        graph = graph_from_data(data)
        dominating_set = dominating_set_from_data(result) if result is not None else None
        render_graph_svg(graph, dominating_set, out_path=args.out, rendering=config.rendering)
        return EXIT_OK

    polygon = polygon_from_data(data)
    guard_set = guard_set_from_data(result) if result is not None else None
    diagonals = ()
    if args.triangulation:
        diagonals = build_constrained_triangulation(polygon).graph.diagonals
    render_polygon_svg(
        polygon, guard_set, diagonals, out_path=args.out, rendering=config.rendering
    )
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curvilinear-guard",
        description="Guards for piecewise-convex polygons through 2-dominating sets of triangulation graphs",
    )
    parser.add_argument("--config", default=None, help="directory holding guarding-config.yml")
    parser.add_argument("--log", default=None, help="log level, overrides GG_LOG")
    subparsers = parser.add_subparsers(dest="command", required=True)

    dominate = subparsers.add_parser("dominate", help="2-dominating set of a triangulation graph")
    dominate.add_argument("input")
    dominate.add_argument("--algo", choices=sorted(ALGORITHMS), default="diag-linear")
    dominate.add_argument("--out", default=None)
    dominate.add_argument("--svg", default=None)
    dominate.set_defaults(handler=cmd_dominate)

    guard = subparsers.add_parser("guard", help="guard set of a piecewise-convex polygon")
    guard.add_argument("input")
    guard.add_argument("--strategy", choices=[s.value for s in Strategy], default="mobile")
    guard.add_argument("--out", default=None)
    guard.add_argument("--svg", default=None)
    guard.add_argument("--report", default=None, help="YAML file for the pipeline report")
    guard.set_defaults(handler=cmd_guard)

    monotone = subparsers.add_parser("monotone", help="sorted chains and edge guards of an x-monotone polygon")
    monotone.add_argument("input")
    monotone.add_argument("--csv", default=None)
    monotone.add_argument("--out", default=None)
    monotone.set_defaults(handler=cmd_monotone)

    genlb = subparsers.add_parser("genlb", help="lower bound instances")
    genlb.add_argument(
        "family",
        choices=["diag", "edge", "glued", "gamma7", "spikes", "fan", "monotone", "random-monotone"],
    )
    genlb.add_argument("--m", type=int, default=2)
    genlb.add_argument("--variant", type=int, default=1)
    genlb.add_argument("--residue", type=int, default=0)
    genlb.add_argument("--k", type=int, default=3)
    genlb.add_argument("--n", type=int, default=9)
    genlb.add_argument("--seed", type=int, default=None)
    genlb.add_argument("--out", default=None)
    genlb.set_defaults(handler=cmd_genlb)

    verify = subparsers.add_parser("verify", help="exhaustive bound checks or sampled guard verification")
    verify.add_argument("polygon", nargs="?")
    verify.add_argument("guards", nargs="?")
    verify.add_argument("--exhaustive", type=int, default=None, metavar="N")
    verify.add_argument("--mode", choices=[m.value for m in Mode], default=None)
    verify.add_argument("--algo", choices=sorted(ALGORITHMS), default=None)
    verify.add_argument(
        "--no-optimum",
        dest="optimum",
        action="store_false",
        help="skip the comparison with the oracle optimum",
    )
    verify.add_argument("--density", type=int, default=None)
    verify.add_argument("--csv", default=None)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    render = subparsers.add_parser("render", help="SVG drawing of a graph or polygon")
    render.add_argument("input")
    render.add_argument("result", nargs="?")
    render.add_argument("--out", required=True)
    render.add_argument("--triangulation", action="store_true")
    render.set_defaults(handler=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log)

    if args.config is not None:
        config = load_guarding_config(args.config)
    else:
        config = GuardingConfig()

    try:
        return args.handler(args, config)
    except FormatError as e:
        print(f"✗️ Exception: {str(e)}", file=sys.stderr)
        return EXIT_FORMAT
    except NotMonotone as e:
        print(f"✗️ Exception: {str(e)}", file=sys.stderr)
        return EXIT_NOT_MONOTONE
    except (GraphError, DominationError, GeometryError, GeneratorError, MonotoneError) as e:
        print(f"✗️ Exception: {str(e)}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
