#!/usr/bin/env python3
"""
Main application for Cartesian Lab.
Command line front end: one subcommand per library operation, JSON reports
on stdout (or --output), progress through the command bus and logging.
"""

import argparse
import logging
import sys
from typing import Dict, List, Optional

import config
from cli.reports import ExperimentConfig, write_report
from commands import EXIT_USAGE, create_commands
from tools import OPERATION_SPECS

logger = logging.getLogger("cartesian_lab")

# argparse dest -> polynomial role
POLYNOMIAL_ARGS = {"poly": "F", "poly2": "F2", "g": "G", "k": "K", "gamma": "gamma", "kappa": "kappa"}
# argparse dest -> point-set role
POINT_ARGS = {"points": "P", "points_q": "Q"}
# argparse dests copied into ExperimentConfig.options
OPTION_ARGS = ("preset", "mode", "order", "precedence", "a", "b", "q", "reduce", "subset_budget",
               "emit_pairs", "check", "topology", "workers", "chunk_size", "s", "t", "budget", "M",
               "list_values", "write_P", "write_Q", "seed", "timing")

EXTRA_ARGS: Dict[str, List[tuple]] = {
    "cartesian-test": [
        (("--mode",), {"choices": ["two-dimensional", "one-dimensional", "self"],
                       "help": "two-dimensional (F, G, K), one-dimensional (f, g(x), k(y)) or self (F - a, G)"}),
        (("--order",), {"choices": list(config.ORDER_KINDS), "help": "monomial order for the division"}),
        (("--precedence",), {"help": "variable precedence, e.g. x,y,s,t"}),
        (("--a",), {"help": "value a for --mode self"}),
        (("--reduce",), {"action": "store_true", "help": "replace non-squarefree g, k by their squarefree parts"}),
    ],
    "grid-witness": [
        (("--subset-budget",), {"type": int, "help": "cap on curve-fitting subsets"}),
    ],
    "count": [
        (("--emit-pairs",), {"metavar": "FILE", "help": "write incident pairs as CSV"}),
        (("--check",), {"action": "store_true", "help": "cross-check with the brute-force double loop"}),
    ],
    "incidence": [
        (("--s",), {"type": int, "help": "points in the K_{s,t} search (default 2)"}),
        (("--t",), {"type": int, "help": "curves in the K_{s,t} search (default 2)"}),
        (("--budget",), {"type": int, "help": "K_{s,t} search budget"}),
    ],
    "partition": [
        (("--M",), {"type": int, "required": True, "help": "richness parameter, threshold 2*deg(F)*M"}),
        (("--budget",), {"type": int, "help": "K_{s,t} budget of the verification pass"}),
    ],
    "values": [
        (("--mode",), {"choices": ["repeated", "distinct", "fiber", "image"], "help": "what to count"}),
        (("--a",), {"help": "value a (repeated, fiber)"}),
        (("--b",), {"help": "value b (fiber)"}),
        (("--list-values",), {"action": "store_true", "help": "list the distinct values"}),
    ],
    "construct": [
        (("--write-P",), {"metavar": "FILE", "help": "write P as CSV"}),
        (("--write-Q",), {"metavar": "FILE", "help": "write Q as CSV"}),
    ],
    "probe": [
        (("--mode",), {"choices": ["trivial", "degenerate", "fiber", "split"], "help": "what to probe"}),
        (("--q",), {"help": "point u,v for --mode fiber"}),
    ],
}

PARALLEL_COMMANDS = ("count", "values", "construct")


def _common_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--poly", help="polynomial F (or F1)")
    parent.add_argument("--poly2", help="second polynomial F2")
    parent.add_argument("--preset", help="named polynomial F")
    parent.add_argument("--g", help="polynomial G in x, y")
    parent.add_argument("--k", help="polynomial K in s, t")
    parent.add_argument("--gamma", help="gamma(x) for --construct saturation:n")
    parent.add_argument("--kappa", help="kappa(s) for --construct saturation:n")
    parent.add_argument("--points", metavar="CSV", help="point set P (or I)")
    parent.add_argument("--points-q", metavar="CSV", help="point set Q (or J)")
    parent.add_argument("--construct", metavar="SPEC", help="construction, e.g. elekes:3,3")
    parent.add_argument("--seed", type=int, help="seed for random constructions")
    parent.add_argument("--config", metavar="JSON", help="run a stored experiment config")
    parent.add_argument("--save-config", metavar="JSON", help="store this run's config")
    parent.add_argument("--output", metavar="JSON", help="write the report here instead of stdout")
    parent.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    parent.add_argument("--explain", action="store_true", help="describe the statement behind the command")
    return parent


def create_parser() -> argparse.ArgumentParser:
    """Create command line argument parser."""
    parser = argparse.ArgumentParser(
        description="Cartesian Lab - exact Cartesian polynomials and incidence counting",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py count --poly "x*s-y+t" --construct elekes:3,3
  python main.py cartesian-test --poly "x*s+y*t" --g "x" --k "t"
  python main.py values --mode repeated --poly "(x-s)^2+(y-t)^2" --a 1 --points grid3.csv
  python main.py --list-commands
        """
    )
    parser.add_argument("--verbose", action="store_true", help="Enable verbose logging")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("--list-commands", action="store_true", help="List available commands")
    parser.add_argument("--list-operations", action="store_true", help="List library operations")

    parent = _common_parent()
    subparsers = parser.add_subparsers(dest="command")
    for name, command in create_commands().items():
        sub = subparsers.add_parser(name, parents=[parent], help=command.description,
                                    description=command.description)
        for flags, kwargs in EXTRA_ARGS.get(name, []):
            sub.add_argument(*flags, **kwargs)
        if name in PARALLEL_COMMANDS:
            sub.add_argument("--topology", choices=list(config.TOPOLOGIES), help="counting workflow topology")
            sub.add_argument("--workers", type=int, help="worker count")
            sub.add_argument("--chunk-size", type=int, help="Q classes per chunk")
    return parser


def experiment_from_args(args: argparse.Namespace) -> ExperimentConfig:
    """Build the run's ExperimentConfig from a stored config or the flags."""
    if args.config:
        experiment = ExperimentConfig.load(args.config)
        if experiment.command != args.command:
            raise ValueError(f"config is for '{experiment.command}', not '{args.command}'")
        return experiment
    values = vars(args)
    options = {}
    for dest in OPTION_ARGS:
        value = values.get(dest)
        if value is not None and value is not False:
            options[dest] = value
    return ExperimentConfig(
        command=args.command,
        polynomials={role: values[dest] for dest, role in POLYNOMIAL_ARGS.items() if values.get(dest) is not None},
        points={role: values[dest] for dest, role in POINT_ARGS.items() if values.get(dest) is not None},
        construct=args.construct,
        options=options,
    )


def configure_logging(args: argparse.Namespace):
    level = logging.DEBUG if args.debug else logging.INFO if args.verbose else getattr(logging, config.LOG_LEVEL)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def run_command(experiment: ExperimentConfig, output: Optional[str] = None) -> int:
    """Run one experiment, write its report (stdout without a path) and return the exit code."""
    commands = create_commands()
    if experiment.command not in commands:
        raise ValueError(f"unknown command '{experiment.command}'")
    report, code = commands[experiment.command].execute(experiment)
    write_report(report, output)
    if code:
        logger.info("%s finished with exit code %d", experiment.command, code)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point with CLI argument handling."""
    parser = create_parser()
    args = parser.parse_args(argv)
    configure_logging(args)
    commands = create_commands()

    if args.list_commands:
        for name, command in commands.items():
            print(f"{name}: {command.description}")
        return 0
    if args.list_operations:
        for spec in OPERATION_SPECS:
            print(f"{spec['name']}: {spec['description']}")
        return 0
    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    command = commands[args.command]
    if args.explain:
        print(command.explanation)
        return 0

    try:
        experiment = experiment_from_args(args)
        if args.save_config:
            experiment.save(args.save_config)
        return run_command(experiment, args.output)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.exception("unexpected failure in %s", args.command)
        print(f"Fatal error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
