"""
Main application entry point.
Runs a configured engine cycle, sweeps one of its parameters, or self-checks it.

Exit codes: 0 ok, 1 usage or configuration error, 2 no convergence, 3 bound violation.
"""
import argparse
import logging
import sys
from typing import List, Optional

from src.exceptions import ConfigError, IntegrationError, LimitCycleError
from src.harness.config import load_config
from src.harness.runner import EXIT_NONCONVERGENCE, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, run_single, run_verify
from src.harness.sweep import run_sweep, write_sweep_csv
from src.settings import VERSION, Settings, load_settings
from src.storage.file_manager import FileManager

logger = logging.getLogger(__name__)


class CliArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; 2 is reserved for non-convergence here."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = CliArgumentParser(prog="qdot-engine",
                               description="Finite-time quantum-dot heat engine simulator and bound checker.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run one cycle to its limit cycle and report its ledger")
    run.add_argument("--config", required=True, help="JSON run configuration")
    run.add_argument("--out", help="write the ledger row to this CSV file")

    sweep = commands.add_parser("sweep", help="sweep one parameter over a grid")
    sweep.add_argument("--config", required=True, help="JSON run configuration with a sweep section")
    sweep.add_argument("--out", required=True, help="CSV file for the sweep rows")
    sweep.add_argument("--workers", type=int, default=settings.workers, help="worker processes")

    check = commands.add_parser("verify", help="run the self-check suite on one configuration")
    check.add_argument("--config", required=True, help="JSON run configuration")
    return parser


def _sweep(args, config, manager: FileManager) -> int:
    if args.workers < 1:
        print("--workers must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    rows = run_sweep(config, workers=args.workers)
    written = write_sweep_csv(rows, config, args.out, manager)
    print(f"{len(rows)} sweep rows written to {written}")
    violating = [row for row in rows if row.violations]
    for row in violating:
        print(f"bound violation at value {row.value:.17g}: {', '.join(row.violations)}")
    return EXIT_VIOLATION if violating else EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    settings = load_settings()
    logging.basicConfig(level=settings.log_level, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser(settings).parse_args(argv)
    manager = FileManager(settings.results_dir)

    try:
        config = load_config(args.config)
        if args.command == "run":
            if config.sweep is not None:
                raise ConfigError(f"{args.config}: has a sweep section; use the sweep command")
            return run_single(config, args.out, manager, sys.stdout)
        if args.command == "sweep":
            if config.sweep is None:
                raise ConfigError(f"{args.config}: has no sweep section")
            return _sweep(args, config, manager)
        return run_verify(config, sys.stdout)
    except ConfigError as e:
        print(f"configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (LimitCycleError, IntegrationError) as e:
        print(f"no convergence: {e}", file=sys.stderr)
        return EXIT_NONCONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
