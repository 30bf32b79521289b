# main.py
"""
Estratos semisimples antisimetricos de U(2,1) - CLI

Comandos:
    python main.py classify stratum.txt [--witness --depth 12]
    python main.py search-xbeta stratum.txt --depth 12
    python main.py fuzz --seed 1 --trials 100 --threads 8
    python main.py filtration-table --lattice L2 --ramified --from -12 --to 12
    python main.py verify-lemmas --seed 1 --trials 200

Codigos de salida: 0 ok, 1 error interno, 2 validacion / parseo, 3 contraejemplo.
"""
import argparse
import sys
from typing import List, Optional

from classifier.genericity import classify_genericity
from config.constants import (
    DEFAULT_LEMMA_DRAWS,
    DEFAULT_SEED,
    DEFAULT_THREADS,
    DEFAULT_TRIALS,
    EXIT_COUNTEREXAMPLE,
    EXIT_INTERNAL_ERROR,
    EXIT_OK,
    EXIT_VALIDATION,
)
from config.settings import RunConfig, get_config
from core.errors import ParseError, UnsupportedConfiguration, ValidationError
from core.stratum import validate_or_raise
from geometry.criteria import criterion_status
from geometry.search import brute_search
from geometry.system import assemble_system
from harness.fuzz import format_fuzz, run_fuzz
from harness.input_file import load_stratum
from harness.reports import format_report, format_search
from harness.tables import filtration_table, format_table
from harness.verify import format_verify, run_verify
from infrastructure.logging import get_logger

COMMANDS = ("classify", "search-xbeta", "fuzz", "filtration-table", "verify-lemmas")


def build_parser() -> argparse.ArgumentParser:
    defaults = get_config()
    parser = argparse.ArgumentParser(description="Skew semisimple strata of U(2,1)")
    parser.add_argument("command",      choices=COMMANDS)
    parser.add_argument("input",        nargs="?", default=None,
                        help="Stratum file (classify, search-xbeta)")
    parser.add_argument("--depth",      type=int, default=defaults.search.depth)
    parser.add_argument("--seed",       type=int, default=DEFAULT_SEED)
    parser.add_argument("--trials",     type=int, default=None,
                        help="Fuzz trials / lemma draws")
    parser.add_argument("--threads",    type=int, default=DEFAULT_THREADS)
    parser.add_argument("--format",     type=str, default="text", choices=["text", "csv"])
    parser.add_argument("--precision",  type=int, default=defaults.field.precision)
    parser.add_argument("--escalate",   type=int, default=defaults.search.escalation_depth,
                        help="Depth for the single retry of fuzz soft failures")
    parser.add_argument("--lattice",    type=str, default="L1")
    parser.add_argument("--ramified",   action="store_true")
    parser.add_argument("--from",       dest="n_from", type=int, default=-12)
    parser.add_argument("--to",         dest="n_to", type=int, default=12)
    parser.add_argument("--witness",    action="store_true",
                        help="classify: attach a point of X_beta when it is non-empty")
    return parser


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    trials = args.trials
    if trials is None:
        trials = DEFAULT_LEMMA_DRAWS if args.command == "verify-lemmas" else DEFAULT_TRIALS
    return RunConfig(
        command=args.command,
        input_path=args.input,
        depth=args.depth,
        seed=args.seed,
        trials=trials,
        threads=args.threads,
        output=args.format,
        precision=args.precision,
        escalation_depth=args.escalate,
        lattice=args.lattice,
        ramified=args.ramified,
        n_from=args.n_from,
        n_to=args.n_to,
    )


# =========================
# Comandos
# =========================
def _load_valid(cfg: RunConfig):
    if cfg.input_path is None:
        raise ValueError(f"{cfg.command} needs a stratum file")
    return validate_or_raise(load_stratum(cfg.input_path, cfg.precision))


def cmd_classify(cfg: RunConfig, with_witness: bool = False) -> int:
    events = get_logger()
    s = _load_valid(cfg)
    events.event("CLASSIFY_START", path=cfg.input_path, kind=s.kind.value, field=s.cfg.describe())
    report = classify_genericity(
        s,
        search_depth=cfg.depth if with_witness else None,
        node_budget=get_config().search.node_budget,
        threads=cfg.threads,
    )
    events.event(
        "CLASSIFY_DONE", path=cfg.input_path, kind=s.kind.value,
        verdict=report.verdict.value, xbeta=report.xbeta.value,
    )
    print(format_report(report, cfg.output), end="" if cfg.output == "csv" else "\n")
    return EXIT_OK


def cmd_search_xbeta(cfg: RunConfig) -> int:
    events = get_logger()
    s = _load_valid(cfg)
    status = criterion_status(s).status
    events.event("SEARCH_START", path=cfg.input_path, depth=cfg.depth, criterion=status.value)
    result = brute_search(
        assemble_system(s), cfg.depth,
        node_budget=get_config().search.node_budget, threads=cfg.threads,
    )
    for rej in result.rejected:
        events.event("HENSEL_REJECTED", residual=rej.residual_level, minor=rej.minor_valuation, reason=rej.reason)
    if not result.found and not result.exhausted:
        events.event("SEARCH_BUDGET_EXHAUSTED", depth=result.depth, nodes=result.nodes)
    events.event("SEARCH_DONE", status=result.status, depth=result.depth, nodes=result.nodes)
    print(format_search(result, cfg.output), end="" if cfg.output == "csv" else "\n")
    if cfg.output == "text":
        print(f"criterion      : {status.value}")
    return EXIT_OK


def cmd_fuzz(cfg: RunConfig) -> int:
    outcome = run_fuzz(
        seed=cfg.seed,
        trials=cfg.trials,
        threads=cfg.threads,
        depth=cfg.depth,
        escalation_depth=cfg.escalation_depth,
        precision=cfg.precision,
        node_budget=get_config().search.fuzz_node_budget,
    )
    print(format_fuzz(outcome, cfg.output), end="" if cfg.output == "csv" else "\n")
    return EXIT_OK if outcome.ok else EXIT_COUNTEREXAMPLE


def cmd_filtration_table(cfg: RunConfig) -> int:
    df = filtration_table(cfg.lattice, cfg.ramified, cfg.n_from, cfg.n_to)
    print(format_table(df, cfg.output), end="" if cfg.output == "csv" else "\n")
    return EXIT_OK


def cmd_verify_lemmas(cfg: RunConfig) -> int:
    report = run_verify(seed=cfg.seed, draws=cfg.trials, threads=cfg.threads, precision=cfg.precision)
    print(format_verify(report, cfg.output), end="" if cfg.output == "csv" else "\n")
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


# =========================
# Entrada
# =========================
def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    events = get_logger()
    try:
        cfg = run_config_from_args(args)
        if cfg.command == "classify":
            return cmd_classify(cfg, with_witness=args.witness)
        if cfg.command == "search-xbeta":
            return cmd_search_xbeta(cfg)
        if cfg.command == "fuzz":
            return cmd_fuzz(cfg)
        if cfg.command == "filtration-table":
            return cmd_filtration_table(cfg)
        return cmd_verify_lemmas(cfg)

    except ParseError as ex:
        print(f"Parse error: {ex}", file=sys.stderr)
        events.event("CLI_ERROR", command=args.command, kind="parse", line=ex.line, column=ex.column, error=ex.message)
        return EXIT_VALIDATION

    except ValidationError as ex:
        for v in ex.violations:
            print(f"{v.clause} violated: {v.detail}", file=sys.stderr)
        events.event(
            "VALIDATION_FAILED", command=args.command, path=args.input,
            violations=[str(v) for v in ex.violations],
        )
        return EXIT_VALIDATION

    except (UnsupportedConfiguration, ValueError) as ex:
        print(f"Error: {ex}", file=sys.stderr)
        events.event("CLI_ERROR", command=args.command, kind=type(ex).__name__, error=str(ex))
        return EXIT_VALIDATION

    except Exception as ex:
        print(f"\nError critico: {ex}", file=sys.stderr)
        events.error(
            "CLI internal error",
            exc_info=True,
            command=args.command,
            error=str(ex),
        )
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
