"""Command-line interface: solve one instance, bench a corpus, verify a model.

Exit codes follow SAT-competition convention for `solve` (10 SAT, 20 UNSAT,
0 unknown/timeout); `bench` exits 0 on completion; `verify` exits 0 when the
model satisfies the formula and 1 when it does not.  Usage and input errors
exit 2 with a diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .bench import par2_score, run_suite, write_csv
from .dimacs import DimacsError, parse_dimacs_file, render_result
from .engine import solve_formula
from .model import PhaseHeuristic, RestartPolicy, SolverConfig, Verdict
from .verify import check_model, first_falsified_clause

PRESETS = {
    "mldc-like": {
        "ncb_phase_heuristic": PhaseHeuristic.SAVED,
        "cb_phase_heuristic": PhaseHeuristic.SAVED,
        "cb_threshold_t": 100,
        "cb_min_conflicts_c": 4000,
    },
    "mldc-lsids-like": {
        "ncb_phase_heuristic": PhaseHeuristic.SAVED,
        "cb_phase_heuristic": PhaseHeuristic.LSIDS,
        "cb_threshold_t": 100,
        "cb_min_conflicts_c": 4000,
    },
}

_EXIT_CODES = {Verdict.SAT: 10, Verdict.UNSAT: 20, Verdict.UNKNOWN: 0}

_CONFIG_FLAG_FIELDS = [
    ("phase_ncb", "ncb_phase_heuristic"),
    ("phase_cb", "cb_phase_heuristic"),
    ("cb_threshold_t", "cb_threshold_t"),
    ("cb_min_conflicts_c", "cb_min_conflicts_c"),
    ("dps_decay", "dps_decay"),
    ("seed", "random_seed"),
    ("restart", "restart_policy"),
    ("luby_base", "luby_base"),
    ("time_limit", "time_limit_seconds"),
]


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    phases = [h.value for h in PhaseHeuristic]
    p.add_argument(
        "--preset",
        choices=sorted(PRESETS),
        help="named configuration; explicit flags override its fields",
    )
    p.add_argument("--phase-ncb", choices=phases, help="phase heuristic outside CB state")
    p.add_argument("--phase-cb", choices=phases, help="phase heuristic while in CB state")
    p.add_argument("--cb-threshold-t", type=int, metavar="T",
                   help="backtrack chronologically when the level gap exceeds T")
    p.add_argument("--cb-min-conflicts-c", type=int, metavar="C",
                   help="disable chronological backtracking for the first C conflicts")
    p.add_argument("--dps-decay", type=float, metavar="F", help="DPS decay factor in (0,1)")
    p.add_argument("--seed", type=int, help="RNG seed for the random phase heuristic")
    p.add_argument("--restart", choices=[r.value for r in RestartPolicy],
                   help="restart policy")
    p.add_argument("--luby-base", type=int, metavar="N", help="Luby restart base interval")
    p.add_argument("--time-limit", type=float, metavar="S",
                   help="wall-clock limit in seconds; exceeded runs report UNKNOWN")


def _build_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> SolverConfig:
    kwargs = {}
    if args.preset:
        kwargs.update(PRESETS[args.preset])
    for flag, field in _CONFIG_FLAG_FIELDS:
        value = getattr(args, flag)
        if value is not None:
            kwargs[field] = value
    try:
        return SolverConfig(**kwargs)
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")  # parser.error exits


def _parse_file(path: str, parser: argparse.ArgumentParser):
    try:
        return parse_dimacs_file(path)
    except OSError as exc:
        parser.error(f"cannot read {path}: {exc.strerror or exc}")
    except DimacsError as exc:
        parser.error(f"{path}: {exc}")
    raise AssertionError("unreachable")


def _cmd_solve(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    formula, diags = _parse_file(args.cnf, parser)
    for lineno, message in diags.warnings:
        print(f"c warning: line {lineno}: {message}", file=sys.stderr)
    config = _build_config(args, parser)
    result = solve_formula(formula, config)
    for name, value in result.stats.counter_items():
        print(f"c stat {name}={value}")
    print(f"c time wall_s={result.stats.wall_time_seconds:.6f}")
    sys.stdout.write(render_result(result))
    return _EXIT_CODES[result.verdict]


def _cmd_bench(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    config = _build_config(args, parser)
    label = args.label or args.preset or "custom"
    try:
        records = run_suite(
            args.corpus,
            [(label, config)],
            time_limit=args.time_limit,
            workers=args.workers,
        )
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")
    write_csv(records, args.out)
    solved = sum(1 for r in records if r.solved)
    print(f"c bench label={label} instances={len(records)} solved={solved}")
    if args.time_limit is not None:
        print(f"c bench par2={par2_score(records, args.time_limit):.2f}")
    print(f"c bench wrote {args.out}")
    return 0


def _read_model_file(path: str, variable_count: int,
                     parser: argparse.ArgumentParser) -> List[bool]:
    """Read a model as signed integers, either bare or on 'v' lines.

    Comment ('c') and status ('s') lines are ignored, a 0 terminates the
    model, and every variable must be assigned exactly once.
    """
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        parser.error(f"cannot read {path}: {exc.strerror or exc}")
        raise AssertionError("unreachable")
    assignment = {}
    done = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line[0] in "cs":
            continue
        tokens = line.split()
        if tokens[0] == "v":
            tokens = tokens[1:]
        for tok in tokens:
            if done:
                parser.error(f"{path}: literals after the terminating 0")
            try:
                n = int(tok)
            except ValueError:
                parser.error(f"{path}: invalid literal {tok!r}")
                raise AssertionError("unreachable")
            if n == 0:
                done = True
                continue
            var = abs(n) - 1
            if var >= variable_count:
                parser.error(f"{path}: literal {n} exceeds variable count {variable_count}")
            if var in assignment:
                parser.error(f"{path}: variable {abs(n)} assigned twice")
            assignment[var] = n > 0
    missing = [v + 1 for v in range(variable_count) if v not in assignment]
    if missing:
        parser.error(f"{path}: model does not assign variable(s) {missing[:5]}")
    return [assignment[v] for v in range(variable_count)]


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    formula, _ = _parse_file(args.cnf, parser)
    model = _read_model_file(args.model, formula.variable_count, parser)
    if check_model(formula, model):
        print("c verify: model satisfies the formula")
        return 0
    idx = first_falsified_clause(formula, model)
    print(f"c verify: model falsifies clause {idx}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chronosat",
        description="CDCL SAT solver with hybrid chronological backtracking",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one DIMACS CNF file")
    p_solve.add_argument("cnf", help="path to a DIMACS CNF file")
    _add_config_flags(p_solve)

    p_bench = sub.add_parser("bench", help="run one configuration over a corpus")
    p_bench.add_argument("corpus", help="directory of .cnf files")
    p_bench.add_argument("--out", required=True, help="CSV output path")
    p_bench.add_argument("--label", help="configLabel for the CSV (default: preset or 'custom')")
    p_bench.add_argument("--workers", type=int, default=1, help="worker threads")
    _add_config_flags(p_bench)

    p_verify = sub.add_parser("verify", help="check a model against a CNF")
    p_verify.add_argument("cnf", help="path to a DIMACS CNF file")
    p_verify.add_argument("model", help="file of signed literals, bare or on 'v' lines")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "solve":
        return _cmd_solve(args, parser)
    if args.command == "bench":
        return _cmd_bench(args, parser)
    return _cmd_verify(args, parser)


if __name__ == "__main__":
    sys.exit(main())
