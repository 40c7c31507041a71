"""
The ``modrep`` command.

Data goes to standard output as JSON Lines, everything else (logs, progress bars)
goes to standard error. The exit code is 0 if every requested check passed, 1 if one
failed, and 2 for a usage error.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from rich.console import Console
from rich.logging import RichHandler

from .client import ModRep
from .config import Config
from .data_model import *
from .exceptions import *
from .util import parse_limit, to_json_line
from .version import VERSION

__all__ = ["main", "build_parser"]

logger = logging.getLogger("modrep")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _positive_int(value: str) -> int:
    try:
        return parse_limit(value)
    except InvalidArgumentError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=_positive_int, help="Number of worker processes.")
    common.add_argument("--table", dest="table_path", help="Use this polynomial table file.")
    common.add_argument("--prime-max", type=_positive_int, help="Prime bound for scans and checks.")
    common.add_argument("--quiet", action="store_true", help="Don't show progress bars.")
    common.add_argument(
        "-v", "--verbose", dest="verbosity", action="count", default=0, help="Log more."
    )

    parser = argparse.ArgumentParser(
        prog="modrep",
        description="Check mod-ell Galois representation polynomials and search for tau(p) = 0.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    tau_parser = subparsers.add_parser(
        Command.tau.value, parents=[common], help="Coefficients of Delta_k."
    )
    tau_parser.add_argument("--k", type=int, default=12, help="The weight (12, 16, 18, 20, 22).")
    tau_parser.add_argument("--n", type=_positive_int, help="Print tau_k(n).")
    tau_parser.add_argument(
        "--modulus", type=_positive_int, help="Print residues modulo this instead of exact values."
    )
    tau_parser.add_argument(
        "--check",
        choices=["691", "125", "nonzero"],
        help="Check a congruence at every prime up to --prime-max, "
        "or that tau(n) != 0 for n up to --prime-max.",
    )

    verify_parser = subparsers.add_parser(
        Command.verify_table.value, parents=[common], help="Integrity checks on every table entry."
    )
    verify_parser.add_argument("--chebotarev-bound", type=_positive_int)
    verify_parser.add_argument("--witness-bound", type=_positive_int)
    verify_parser.add_argument("--sigma", type=float)
    verify_parser.add_argument(
        "--skip-chebotarev", action="store_true", help="Skip the pattern frequency check."
    )

    consistency_parser = subparsers.add_parser(
        Command.consistency.value,
        parents=[common],
        help="Compare factorization patterns with the predicted Frobenius cycle types.",
    )
    consistency_parser.add_argument("--k", type=int, help="Only this weight.")
    consistency_parser.add_argument("--ell", type=int, help="Only this prime.")

    lehmer_parser = subparsers.add_parser(
        Command.lehmer.value, parents=[common], help="Search for primes with tau(p) = 0."
    )
    lehmer_parser.add_argument(
        "--limit", type=_positive_int, required=True, help="Largest p, e.g. 1e20."
    )
    lehmer_parser.add_argument("--checkpoint", help="Record progress here and resume from it.")
    lehmer_parser.add_argument("--output", help="Write records here instead of standard output.")

    return parser


def _setup_logging(verbosity: int):
    handler = RichHandler(console=Console(stderr=True), show_path=verbosity > 1)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.handlers = [handler]
    logger.setLevel(logging.DEBUG if verbosity > 0 else logging.WARNING)
    logger.propagate = False


def _run_config(args: argparse.Namespace, config: Config) -> RunConfig:
    return RunConfig(
        command=args.command,
        k=getattr(args, "k", None),
        ell=getattr(args, "ell", None),
        n=getattr(args, "n", None),
        prime_max=config.prime_max,
        limit=getattr(args, "limit", None),
        workers=config.workers,
        table_path=config.table_path,
        checkpoint=getattr(args, "checkpoint", None),
        output=getattr(args, "output", None),
        chebotarev_bound=config.chebotarev_bound,
        witness_bound=config.witness_bound,
        sigma=config.sigma,
        check=getattr(args, "check", None),
        quiet=args.quiet,
        verbosity=args.verbosity,
    )


def _overrides(args: argparse.Namespace) -> Dict[str, object]:
    overrides = {}
    for name in (
        "workers",
        "table_path",
        "prime_max",
        "chebotarev_bound",
        "witness_bound",
        "sigma",
    ):
        value = getattr(args, name, None)
        if value is not None:
            overrides[name] = value
    return overrides


def _run_tau(modrep: ModRep, run: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    assert run.k is not None
    if run.check is not None:
        if run.check == "nonzero":
            nonvanishing = modrep.forms.nonvanishing(run.prime_max)
            out.write(to_json_line(nonvanishing.to_json()) + "\n")
            return EXIT_OK if nonvanishing.ok else EXIT_CHECK_FAILED
        congruence = modrep.forms.congruence(run.check, run.prime_max)
        out.write(to_json_line(congruence.to_json()) + "\n")
        if not congruence.ok:
            logger.error("Congruence mod %s fails at p = %s", run.check, congruence.failures)
            return EXIT_CHECK_FAILED
        return EXIT_OK

    if run.n is not None:
        values = [modrep.forms.tau(run.k, run.n, args.modulus)]
    else:
        values = modrep.forms.tau_at_primes(run.k, run.prime_max, args.modulus)
    for value in values:
        out.write(to_json_line(value.to_json()) + "\n")
    return EXIT_OK


def _run_verify_table(
    modrep: ModRep, run: RunConfig, args: argparse.Namespace, out: TextIO
) -> int:
    try:
        reports = modrep.verify.table(
            witness_bound=run.witness_bound,
            chebotarev_bound=run.chebotarev_bound,
            sigma=run.sigma,
            skip_chebotarev=args.skip_chebotarev,
            quiet=run.quiet,
        )
    except TableError as e:
        logger.error("Table failed to load: %s: %s", type(e).__name__, e)
        return EXIT_CHECK_FAILED
    for report in reports:
        out.write(to_json_line(report.to_json()) + "\n")
    failed = [report for report in reports if not report.ok]
    for report in failed:
        logger.error("P_{%d,%d} failed: %s", report.k, report.ell, ", ".join(report.failed_checks))
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _run_consistency(
    modrep: ModRep, run: RunConfig, args: argparse.Namespace, out: TextIO
) -> int:
    del args
    try:
        entries = [
            entry
            for entry in modrep.table.entries()
            if (run.k is None or entry.k == run.k) and (run.ell is None or entry.ell == run.ell)
        ]
    except TableError as e:
        logger.error("Table failed to load: %s: %s", type(e).__name__, e)
        return EXIT_CHECK_FAILED
    if not entries:
        raise EntryNotFound(f"no table entry matches k={run.k}, ell={run.ell}")
    status = EXIT_OK
    for entry in entries:
        report = modrep.frobenius.consistency(entry, run.prime_max, quiet=run.quiet)
        out.write(to_json_line(report.to_json()) + "\n")
        if not report.ok:
            for violation in report.violations:
                logger.error(
                    "%s at p = %d: observed %s, predicted %s (%s)",
                    entry,
                    violation.p,
                    violation.observed,
                    " or ".join(violation.predicted),
                    violation.kind,
                )
            status = EXIT_CHECK_FAILED
    return status


def _run_lehmer(modrep: ModRep, run: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    del args
    assert run.limit is not None
    target = run.output.open("w") if run.output is not None else out
    try:

        def emit(line: str):
            target.write(line + "\n")
            target.flush()

        hits = modrep.lehmer.scan(run.limit, checkpoint=run.checkpoint, emit=emit, quiet=run.quiet)
    finally:
        if target is not out:
            target.close()
    logger.info("%d primes found up to %d", len(hits), run.limit)
    return EXIT_OK


_COMMANDS: Dict[Command, Callable[[ModRep, RunConfig, argparse.Namespace, TextIO], int]] = {
    Command.tau: _run_tau,
    Command.verify_table: _run_verify_table,
    Command.consistency: _run_consistency,
    Command.lehmer: _run_lehmer,
}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Run the command line and return the exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK
    _setup_logging(args.verbosity)
    out = out or sys.stdout

    try:
        config = Config.from_env(**_overrides(args))
        run = _run_config(args, config)
        modrep = ModRep(config)
        return _COMMANDS[Command(run.command)](modrep, run, args, out)
    except (InvalidArgumentError, ConfigurationError, EntryNotFound, ValidationError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except TableError as e:
        logger.error("Table failed to load: %s: %s", type(e).__name__, e)
        return EXIT_CHECK_FAILED
    except (ConsistencyViolationError, VerificationFailedError, CheckpointError) as e:
        logger.error("%s", e)
        return EXIT_CHECK_FAILED
    except KeyboardInterrupt:
        logger.warning("Interrupted")
        return 130
