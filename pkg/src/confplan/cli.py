"""
confplan command line - entry point and subcommand dispatch.

Pattern: Front-end Layer
- Only parses arguments, reads and writes files, maps failures to exit codes
- No geometry (delegates to services)

Exit codes: 0 success, 1 usage or input error, 2 collision found,
3 complexity query outside the covered regimes.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

import numpy as np

from . import __version__
from .complexity_formulas import SpaceQuery
from .config import ConfplanConfig
from .config_space import (
    Configuration,
    Permutation,
    StratumId,
    enumerate_partitions,
    realize_stratum,
)
from .errors import ArgumentError, ConfplanError, UncoveredCaseError
from .fixtures import figure_configuration, swap_pair, swap_stacks
from .models import (
    dump_json,
    parse_configuration,
    parse_path,
    parse_retract_input,
    path_payload,
)
from .piecewise import PiecewisePath
from .planner import StackStrategy, TransferMode, approach_path, p_line, transfer_path
from .retractions import GroupSpec, UnitTuple
from .services import PlanningService, TopologyService, VerificationService
from .svg_export import export_svg

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COLLISION = 2
EXIT_UNCOVERED = 3


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def _write_text(target: str, text: str) -> None:
    Path(target).write_text(text, encoding="utf-8")
    logger.info("Wrote %s", target)


def _emit(payload: object) -> None:
    print(dump_json(payload))


def _rows_csv(rows: Sequence[dict[str, object]]) -> str:
    """Uncovered cells are written empty."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def _write_path_outputs(
    args: argparse.Namespace,
    config: ConfplanConfig,
    path: PiecewisePath,
    lines: Sequence[float] = (),
) -> None:
    if getattr(args, "output", None):
        _write_text(args.output, dump_json(path_payload(path)))
    if getattr(args, "svg", None):
        svg = export_svg(path, config.svg_samples, args.projection, lines)
        _write_text(args.svg, svg)


def _cmd_classify(args: argparse.Namespace, config: ConfplanConfig) -> int:
    x = parse_configuration(_read_text(args.config))
    _emit(PlanningService(config).classify(x))
    return EXIT_OK


def _cmd_plan(args: argparse.Namespace, config: ConfplanConfig) -> int:
    x = parse_configuration(_read_text(args.start))
    y = parse_configuration(_read_text(args.goal))
    result = PlanningService(config).plan(x, y)
    report = VerificationService(config).verify(result.path)
    _write_path_outputs(args, config, result.path, result.line_abscissas)
    _emit(
        {
            "plan": PlanningService.plan_summary(result),
            "verification": report.to_dict(),
            "path": path_payload(result.path),
        }
    )
    return EXIT_COLLISION if report.colliding else EXIT_OK


def _cmd_plan_multi(args: argparse.Namespace, config: ConfplanConfig) -> int:
    waypoints = [parse_configuration(_read_text(source)) for source in args.waypoints]
    path = PlanningService(config).plan_multi(waypoints)
    report = VerificationService(config).verify(path)
    _write_path_outputs(args, config, path)
    _emit(
        {
            "waypoints": len(waypoints),
            "verification": report.to_dict(),
            "path": path_payload(path),
        }
    )
    return EXIT_COLLISION if report.colliding else EXIT_OK


def _cmd_verify(args: argparse.Namespace, config: ConfplanConfig) -> int:
    path = parse_path(_read_text(args.path))
    summary = VerificationService(config).summary(path)
    _emit(summary)
    return EXIT_COLLISION if summary["colliding"] else EXIT_OK


def _cmd_retract(args: argparse.Namespace, config: ConfplanConfig) -> int:
    item = parse_retract_input(_read_text(args.input))
    dim = item.dim
    if dim != args.dim:
        raise ArgumentError(f"Input lives in R^{dim}, --dim says {args.dim}")
    punctured = args.mode == "punctured"
    service = TopologyService(config)
    if isinstance(item, UnitTuple):
        group = GroupSpec(args.group or GroupSpec.ORTHOGONAL.value)
        _emit(service.retract_vectors(item, punctured, group))
    else:
        group = GroupSpec(args.group or GroupSpec.TRIVIAL.value)
        _emit(service.retract_configuration(item, punctured, group))
    return EXIT_OK


def _cmd_cover(args: argparse.Namespace, config: ConfplanConfig) -> int:
    x = parse_configuration(_read_text(args.config))
    service = PlanningService(config)
    payload = service.cover(x)
    status = EXIT_OK
    if args.emit_path or args.output or args.svg:
        path = service.contract(x)
        report = VerificationService(config).verify(path)
        _write_path_outputs(args, config, path)
        payload["verification"] = report.to_dict()
        if args.emit_path:
            payload["path"] = path_payload(path)
        status = EXIT_COLLISION if report.colliding else EXIT_OK
    _emit(payload)
    return status


def _cmd_tc(args: argparse.Namespace, config: ConfplanConfig) -> int:
    service = TopologyService(config)
    if args.table:
        rows = service.table(args.k_max)
        if args.format == "csv":
            sys.stdout.write(_rows_csv(rows))
        else:
            _emit(rows)
        return EXIT_OK
    if args.dim is None or args.k is None:
        raise ArgumentError("tc needs --dim and --k (or --table)")
    query = SpaceQuery(args.dim, args.k, args.r, group_free_odd=args.group_free)
    try:
        value = service.complexity(query, args.order)["value"]
    except UncoveredCaseError as exc:
        logger.warning("%s", exc)
        _emit("uncovered")
        return EXIT_UNCOVERED
    _emit(value)
    return EXIT_OK


def _random_configuration(rng: np.random.Generator, k: int) -> Configuration:
    partitions = enumerate_partitions(k)
    partition = partitions[int(rng.integers(len(partitions)))]
    order = Permutation.from_indices(rng.permutation(k).tolist())
    return realize_stratum(StratumId(partition, order), 2, rng)


def _cmd_demo(args: argparse.Namespace, config: ConfplanConfig) -> int:
    planning = PlanningService(config)
    verification = VerificationService(config)
    figure = figure_configuration()
    figure_line = p_line(figure, figure) + 1.0
    figure_approach = approach_path(figure, figure_line, StackStrategy.DISTANCE)

    x, y = swap_pair()
    swap_plan = planning.plan(x, y)
    left, right = swap_stacks()
    naive = transfer_path(left, right, TransferMode.SIMULTANEOUS)
    careful = transfer_path(left, right, TransferMode.SEQUENTIAL)

    rng = np.random.default_rng(args.seed)
    random_plan = planning.plan(
        _random_configuration(rng, args.k), _random_configuration(rng, args.k)
    )

    traces = {
        "figure_approach": (figure_approach, (figure_line,)),
        "swap_plan": (swap_plan.path, swap_plan.line_abscissas),
        "swap_simultaneous": (naive, (0.0, 1.0)),
        "swap_sequential": (careful, (0.0, 1.0)),
        "random_plan": (random_plan.path, random_plan.line_abscissas),
    }
    payload: dict[str, object] = {
        "figure": planning.classify(figure),
        "seed": args.seed,
    }
    reports = verification.verify_many([path for path, _ in traces.values()])
    for name, report in zip(traces, reports):
        payload[name] = report.to_dict()
    payload["random_plan_summary"] = PlanningService.plan_summary(random_plan)

    if args.output_dir:
        directory = Path(args.output_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for name, (path, lines) in traces.items():
            svg = export_svg(path, config.svg_samples, None, lines)
            _write_text(str(directory / f"{name}.svg"), svg)
            _write_text(str(directory / f"{name}.json"), dump_json(path_payload(path)))
    _emit(payload)
    return EXIT_OK


def _cmd_config(args: argparse.Namespace, config: ConfplanConfig) -> int:
    _emit({"version": __version__, **config.describe()})
    return EXIT_OK


def _add_planning_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--mode", choices=[m.value for m in TransferMode], help="transfer mode"
    )
    sub.add_argument(
        "--strategy",
        choices=[s.value for s in StackStrategy],
        help="stacking strategy",
    )
    _add_output_options(sub)


def _add_output_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("-o", "--output", help="write the path JSON to this file")
    sub.add_argument("--svg", help="write an SVG trace to this file")
    sub.add_argument(
        "--projection",
        nargs=2,
        type=int,
        metavar=("I", "J"),
        help="0-based coordinate pair drawn in the SVG (required for n > 2)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confplan",
        description="Explicit motion planners on configuration spaces F(R^n, k).",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="more logging"
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="errors only")
    parser.add_argument(
        "--eps", type=float, help="collision tolerance (overrides CONFPLAN_EPS)"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser(
        "classify", help="stratum and level structure of a configuration"
    )
    sub.add_argument("config", help="configuration JSON file ('-' for stdin)")
    sub.set_defaults(handler=_cmd_classify)

    sub = commands.add_parser(
        "plan", help="plan a collision-free path between two configurations"
    )
    sub.add_argument("start")
    sub.add_argument("goal")
    _add_planning_options(sub)
    sub.set_defaults(handler=_cmd_plan)

    sub = commands.add_parser("plan-multi", help="plan through a list of waypoints")
    sub.add_argument("waypoints", nargs="+")
    _add_planning_options(sub)
    sub.set_defaults(handler=_cmd_plan_multi)

    sub = commands.add_parser(
        "verify", help="exact collision check of a path JSON file"
    )
    sub.add_argument("path")
    sub.set_defaults(handler=_cmd_verify)

    sub = commands.add_parser("retract", help="sphere-product retraction round trip")
    sub.add_argument("--mode", choices=["plain", "punctured"], default="plain")
    sub.add_argument("--dim", type=int, required=True)
    sub.add_argument("--input", default="-", help="unit tuple or configuration JSON")
    sub.add_argument("--group", choices=[g.value for g in GroupSpec])
    sub.set_defaults(handler=_cmd_retract)

    sub = commands.add_parser("cover", help="categorical cover index and contraction")
    sub.add_argument("config")
    sub.add_argument(
        "--emit-path", action="store_true", help="include the contraction path"
    )
    _add_output_options(sub)
    sub.set_defaults(handler=_cmd_cover)

    sub = commands.add_parser("tc", help="closed-form TC, TC_s and cat values")
    sub.add_argument("--dim", type=int)
    sub.add_argument("--k", type=int)
    sub.add_argument("--r", type=int, default=0)
    sub.add_argument("--group-free", action="store_true")
    sub.add_argument("--order", type=int, default=2)
    sub.add_argument("--table", action="store_true")
    sub.add_argument("--k-max", type=int, default=6)
    sub.add_argument("--format", choices=["json", "csv"], default="json")
    sub.set_defaults(handler=_cmd_tc)

    sub = commands.add_parser("demo", help="run the built-in fixtures")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--k", type=int, default=4)
    sub.add_argument("--output-dir")
    sub.set_defaults(handler=_cmd_demo)

    sub = commands.add_parser("config", help="show the effective settings")
    sub.set_defaults(handler=_cmd_config)
    return parser


def _configure(args: argparse.Namespace) -> ConfplanConfig:
    config = ConfplanConfig.from_env()
    if args.eps is not None:
        if args.eps < 0:
            raise ArgumentError("--eps must be >= 0")
        config.collision_eps = args.eps
    if getattr(args, "mode", None) in {m.value for m in TransferMode}:
        config.transfer_mode = TransferMode(args.mode)
    if getattr(args, "strategy", None):
        config.stack_strategy = StackStrategy(args.strategy)

    level = config.log_level
    if args.quiet:
        level = "ERROR"
    elif args.verbose:
        level = "DEBUG" if args.verbose > 1 else "INFO"
    config.log_level = level
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("confplan").setLevel(level)
    return config


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, dispatch, and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        config = _configure(args)
        return args.handler(args, config)
    except UncoveredCaseError as exc:
        logger.error("%s", exc)
        return EXIT_UNCOVERED
    except (ConfplanError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
