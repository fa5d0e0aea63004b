"""Benchmark harness: timed runs over instance sets, CSV output, plot data.

Scoring uses PAR-2: a solved instance contributes its wall time, an
unsolved one (timeout or error) contributes twice the time limit, and the
score is the mean over all instances.
"""

from __future__ import annotations

import csv
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from glob import glob
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .dimacs import parse_dimacs_file
from .engine import solve_formula
from .model import SolverConfig, Verdict

CSV_HEADER = [
    "instance",
    "configLabel",
    "verdict",
    "time_s",
    "timed_out",
    "conflicts",
    "decisions",
    "propagations",
    "restarts",
    "cb_backtracks",
    "ncb_backtracks",
    "lsids_decisions",
    "lsids_differs_saved",
]

_SOLVED_VERDICTS = ("SAT", "UNSAT")


@dataclass
class RunRecord:
    """One (instance, configuration) benchmark outcome."""

    instance: str
    config_label: str
    verdict: str  # SAT | UNSAT | UNKNOWN | ERROR
    time_s: float
    timed_out: bool
    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0
    restarts: int = 0
    cb_backtracks: int = 0
    ncb_backtracks: int = 0
    lsids_decisions: int = 0
    lsids_differs_saved: int = 0

    @property
    def solved(self) -> bool:
        return self.verdict in _SOLVED_VERDICTS

    def as_csv_row(self) -> List[str]:
        return [
            self.instance,
            self.config_label,
            self.verdict,
            f"{self.time_s:.6f}",
            "true" if self.timed_out else "false",
            str(self.conflicts),
            str(self.decisions),
            str(self.propagations),
            str(self.restarts),
            str(self.cb_backtracks),
            str(self.ncb_backtracks),
            str(self.lsids_decisions),
            str(self.lsids_differs_saved),
        ]


def par2_score(records: Sequence[RunRecord], time_limit: float) -> float:
    """Mean penalised runtime: unsolved instances cost 2 * time_limit."""
    if not records:
        raise ValueError("PAR-2 over an empty record set is undefined")
    if time_limit <= 0:
        raise ValueError("time_limit must be positive")
    total = 0.0
    for r in records:
        total += r.time_s if r.solved else 2.0 * time_limit
    return total / len(records)


def run_instance(path: str, label: str, config: SolverConfig) -> RunRecord:
    """Solve one DIMACS file; failures become an ERROR record, not a crash."""
    name = os.path.basename(path)
    try:
        formula, _ = parse_dimacs_file(path)
        result = solve_formula(formula, config)
    except Exception:
        return RunRecord(name, label, "ERROR", 0.0, timed_out=False)
    stats = result.stats
    return RunRecord(
        instance=name,
        config_label=label,
        verdict=result.verdict.value,
        time_s=stats.wall_time_seconds,
        timed_out=result.verdict is Verdict.UNKNOWN,
        conflicts=stats.conflicts,
        decisions=stats.decisions,
        propagations=stats.propagations,
        restarts=stats.restarts,
        cb_backtracks=stats.cb_backtracks,
        ncb_backtracks=stats.ncb_backtracks,
        lsids_decisions=stats.lsids_decisions,
        lsids_differs_saved=stats.lsids_differs_from_saved,
    )


def discover_instances(source: Union[str, Iterable[str]]) -> List[str]:
    """A directory becomes its sorted *.cnf files; an iterable passes through."""
    if isinstance(source, str):
        if not os.path.isdir(source):
            raise ValueError(f"not a directory: {source}")
        paths = sorted(glob(os.path.join(source, "*.cnf")))
        if not paths:
            raise ValueError(f"no .cnf instances found in {source}")
        return paths
    paths = list(source)
    if not paths:
        raise ValueError("no instances given")
    return paths


def run_suite(
    instances: Union[str, Iterable[str]],
    configs: Sequence[Tuple[str, SolverConfig]],
    time_limit: Optional[float] = None,
    workers: int = 1,
) -> List[RunRecord]:
    """Run every configuration on every instance.

    Rows come back sorted by (instance, configLabel) regardless of worker
    scheduling, so suite output is stable.  Workers use threads: solving is
    pure Python, so this trades no determinism for modest overlap of
    parsing and bookkeeping.
    """
    paths = discover_instances(instances)
    if not configs:
        raise ValueError("no configurations given")
    labels = [label for label, _ in configs]
    if len(set(labels)) != len(labels):
        raise ValueError("configuration labels must be unique")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    jobs = []
    for path in paths:
        for label, cfg in configs:
            if time_limit is not None:
                cfg = replace(cfg, time_limit_seconds=time_limit)
            jobs.append((path, label, cfg))
    if workers == 1:
        records = [run_instance(*job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda j: run_instance(*j), jobs))
    records.sort(key=lambda r: (r.instance, r.config_label))
    return records


def write_csv(records: Sequence[RunRecord], path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow(r.as_csv_row())


def read_csv(path: str) -> List[RunRecord]:
    records = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header: {header}")
        for row in reader:
            records.append(
                RunRecord(
                    instance=row[0],
                    config_label=row[1],
                    verdict=row[2],
                    time_s=float(row[3]),
                    timed_out=row[4] == "true",
                    conflicts=int(row[5]),
                    decisions=int(row[6]),
                    propagations=int(row[7]),
                    restarts=int(row[8]),
                    cb_backtracks=int(row[9]),
                    ncb_backtracks=int(row[10]),
                    lsids_decisions=int(row[11]),
                    lsids_differs_saved=int(row[12]),
                )
            )
    return records


def cactus_points(records: Sequence[RunRecord]) -> Dict[str, List[Tuple[int, float]]]:
    """Solved-instance times per configuration, sorted, paired with ranks.

    Plotting rank (x) against time (y) gives the usual cactus curve: the
    point (k, t) reads "k instances solved within t seconds each".
    """
    times: Dict[str, List[float]] = {}
    for r in records:
        times.setdefault(r.config_label, [])
        if r.solved:
            times[r.config_label].append(r.time_s)
    return {
        label: [(rank, t) for rank, t in enumerate(sorted(ts), start=1)]
        for label, ts in times.items()
    }


@dataclass(frozen=True)
class ScatterPoint:
    instance: str
    time_a: float
    time_b: float
    a_clamped: bool  # unsolved under configuration A; time clamped to 2*limit
    b_clamped: bool


def scatter_points(
    records: Sequence[RunRecord],
    label_a: str,
    label_b: str,
    time_limit: float,
) -> List[ScatterPoint]:
    """Per-instance time pairs for two configurations.

    Both configurations must cover exactly the same instances.  Unsolved
    runs are clamped to 2 * time_limit and flagged, so they sit on the
    plot's penalty edge instead of vanishing.
    """
    if time_limit <= 0:
        raise ValueError("time_limit must be positive")
    a_rows = {r.instance: r for r in records if r.config_label == label_a}
    b_rows = {r.instance: r for r in records if r.config_label == label_b}
    if set(a_rows) != set(b_rows):
        raise ValueError(
            f"instance sets differ between {label_a!r} and {label_b!r}"
        )
    if not a_rows:
        raise ValueError("no records for the requested labels")
    points = []
    for name in sorted(a_rows):
        ra, rb = a_rows[name], b_rows[name]
        ta = ra.time_s if ra.solved else 2.0 * time_limit
        tb = rb.time_s if rb.solved else 2.0 * time_limit
        points.append(ScatterPoint(name, ta, tb, not ra.solved, not rb.solved))
    return points
