"""Command-line front end"""
import argparse
import sys
from typing import List, Optional

from .run_config import Command, RunConfig
from ..reports.csv_report import ReportGenerator
from ..services.crosscheck_service import CrosscheckService
from ..services.figure_service import FigureService, log_grid
from ..services.filter_service import FilterService
from ..utils.exceptions import EXIT_INPUT, EXIT_OK, FilteringError, ToleranceExceededError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

FIGURE_HELP = {
    Command.FIG1: "R_M versus <n> at squeezing ratios 0, 0.2, 0.9 and 1",
    Command.FIG2: "Optimal displacement/squeezing split and its gain over the squeezed vacuum",
    Command.FIG3: "R_M of every probe strategy",
    Command.THRESHOLDS: "Minimum required power <n>_min of every probe",
}


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the input-error code"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _common_flags() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pac", dest="p_ac", type=float, help="Acceptance probability (default 0.5)")
    common.add_argument("--nmin", dest="n_min", type=float, help="Smallest <n> of the log grid")
    common.add_argument("--nmax", dest="n_max", type=float, help="Largest <n> of the log grid")
    common.add_argument("--points", type=int, help="Number of grid points")
    common.add_argument("--trunc-bound", dest="trunc_bound", type=float, help="Fock truncation norm bound")
    common.add_argument("--rel-tol", dest="rel_tol", type=float, help="Relative eigenvalue cutoff for supports")
    common.add_argument("--tolerance", type=float, help="Crosscheck tolerance")
    common.add_argument("--seed", type=int, help="Random seed")
    common.add_argument("--workers", type=int, help="Threads for grid evaluation")
    common.add_argument("--out", help="Output file (default: stdout)")
    common.add_argument("--config", help="JSON config file; flags override its values")
    return common


def build_parser() -> argparse.ArgumentParser:
    """
    Argument parser with one subcommand per task

    Returns:
        ArgumentParser
    """
    parser = _Parser(
        prog="qfilter",
        description="Unambiguous quantum state filtering and loss sensing",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()

    for command, help_text in FIGURE_HELP.items():
        subparsers.add_parser(command.value, parents=[common], help=help_text)

    subparsers.add_parser(
        Command.CROSSCHECK.value, parents=[common],
        help="Compare every closed form with the numeric Fock pipeline",
    )

    filter_parser = subparsers.add_parser(
        Command.FILTER.value, parents=[common],
        help="Optimal filter for rho0 against one or more states",
    )
    filter_parser.add_argument("states", nargs="+", help="rho0 file followed by the files of the states to reject")
    filter_parser.add_argument("--simulate", type=int, help="Monte Carlo trials per state")
    return parser


def run(config: RunConfig) -> int:
    """
    Execute a validated run

    Args:
        config: RunConfig

    Returns:
        Exit code
    """
    logger.info(f"Running {config.command.value}")

    if config.command in FIGURE_HELP:
        service = FigureService(config.p_ac, log_grid(config.n_min, config.n_max, config.points), config.workers)
        table = {
            Command.FIG1: service.fig1,
            Command.FIG2: service.fig2,
            Command.FIG3: service.fig3,
            Command.THRESHOLDS: service.thresholds,
        }[config.command]()
        ReportGenerator.write_csv(table, config.out)
        return EXIT_OK

    if config.command == Command.CROSSCHECK:
        report = CrosscheckService(
            truncation_bound=config.trunc_bound,
            rel_tol=config.rel_tol,
            tolerance=config.tolerance,
            seed=config.seed,
            workers=config.workers,
        ).run()
        ReportGenerator.write_csv(report.summary(), config.out)
        if not report.passed:
            raise ToleranceExceededError(report.deviations, config.tolerance)
        return EXIT_OK

    payload = FilterService.run(
        config.states[0],
        config.states[1:],
        rel_tol=config.rel_tol,
        simulate=config.simulate,
        seed=config.seed,
    )
    ReportGenerator.write_json(payload, config.out)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run, and map errors to exit codes"""
    args = vars(build_parser().parse_args(argv))
    command = args.pop("command")
    config_file = args.pop("config", None)

    try:
        config = RunConfig.from_sources(command, args, config_file)
        return run(config)
    except ToleranceExceededError as e:
        logger.error(str(e))
        return e.exit_code
    except FilteringError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_INPUT
