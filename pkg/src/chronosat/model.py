"""Core data model: literals, clauses, formulas, solver configuration and results.

Literals are plain ints.  Variable ``v`` (0-based) has positive literal
``2*v`` and negative literal ``2*v + 1``, so negation flips the low bit and
the encoding is a bijection onto the non-negative ints.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import List, Optional


def make_literal(var: int, positive: bool) -> int:
    """Encode (variable index, polarity) as an int literal."""
    if var < 0:
        raise ValueError("variable index must be non-negative")
    return 2 * var + (0 if positive else 1)


def negate(lit: int) -> int:
    return lit ^ 1


def lit_var(lit: int) -> int:
    return lit >> 1


def lit_is_positive(lit: int) -> bool:
    return (lit & 1) == 0


def lit_from_dimacs(n: int) -> int:
    """Convert a signed 1-based DIMACS int to an encoded literal."""
    if n == 0:
        raise ValueError("0 is not a DIMACS literal")
    v = abs(n) - 1
    return 2 * v + (0 if n > 0 else 1)


def lit_to_dimacs(lit: int) -> int:
    """Convert an encoded literal back to a signed 1-based DIMACS int."""
    v = (lit >> 1) + 1
    return v if (lit & 1) == 0 else -v


class Clause:
    """A disjunction of literals.

    ``lits`` order is significant to the engine: positions 0 and 1 are the
    watched positions, and for reason clauses position 0 holds the implied
    literal.
    """

    __slots__ = ("lits", "learnt", "lbd", "activity")

    def __init__(self, lits: List[int], learnt: bool = False, lbd: int = 0):
        self.lits = lits
        self.learnt = learnt
        self.lbd = lbd
        self.activity = 0.0

    def __len__(self) -> int:
        return len(self.lits)

    def __repr__(self) -> str:
        kind = "learnt" if self.learnt else "input"
        return f"Clause({[lit_to_dimacs(l) for l in self.lits]}, {kind})"


def make_clause(lits, learnt: bool = False) -> Optional[Clause]:
    """Build a clause, dropping duplicate literals.

    Returns None when the literals contain a complementary pair (the clause
    is a tautology and carries no constraint).  First occurrence order is
    preserved.  An empty literal list is a legal (unsatisfiable) clause.
    """
    seen = set()
    out = []
    for l in lits:
        if l in seen:
            continue
        if (l ^ 1) in seen:
            return None
        seen.add(l)
        out.append(l)
    return Clause(out, learnt=learnt)


@dataclass
class Formula:
    """A CNF formula over variables 0..variable_count-1."""

    variable_count: int
    clauses: List[Clause] = field(default_factory=list)

    def __post_init__(self):
        if self.variable_count < 0:
            raise ValueError("variable_count must be non-negative")
        for c in self.clauses:
            for l in c.lits:
                if not (0 <= lit_var(l) < self.variable_count):
                    raise ValueError(
                        f"literal {lit_to_dimacs(l)} out of range for "
                        f"{self.variable_count} variables"
                    )

    @property
    def clause_count(self) -> int:
        return len(self.clauses)


@dataclass(frozen=True)
class TrailEntry:
    """Inspection view of one assignment on the trail."""

    literal: int
    level: int
    reason: Optional[Clause]

    @property
    def is_decision(self) -> bool:
        return self.reason is None and self.level > 0


class PhaseHeuristic(str, enum.Enum):
    SAVED = "saved"
    RANDOM = "random"
    ALWAYS_FALSE = "false"
    OPPOSITE_SAVED = "opposite"
    DPS = "dps"
    LSIDS = "lsids"


class RestartPolicy(str, enum.Enum):
    LUBY = "luby"
    GLUCOSE = "glucose"


class Verdict(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"


@dataclass
class SolverConfig:
    """Knobs for the search.

    The backtracking hybrid is controlled by two thresholds: for the first
    cb_min_conflicts_c conflicts every backtrack is non-chronological; after
    that a conflict whose jump distance (current level minus analysis level)
    exceeds cb_threshold_t backtracks chronologically to the previous level.
    Phase selection is dispatched on the solver's backtrack mode:
    ncb_phase_heuristic applies while the last backtrack was
    non-chronological, cb_phase_heuristic while it was chronological.
    """

    cb_threshold_t: int = 100
    cb_min_conflicts_c: int = 4000
    ncb_phase_heuristic: PhaseHeuristic = PhaseHeuristic.SAVED
    cb_phase_heuristic: PhaseHeuristic = PhaseHeuristic.LSIDS
    dps_decay: float = 0.7
    random_seed: int = 0
    var_decay: float = 0.95
    restart_policy: RestartPolicy = RestartPolicy.LUBY
    luby_base: int = 100
    clause_db_init_limit: int = 2000
    clause_db_limit_growth: int = 300
    time_limit_seconds: Optional[float] = None

    def __post_init__(self):
        if self.cb_threshold_t < 0:
            raise ValueError("cb_threshold_t must be >= 0")
        if self.cb_min_conflicts_c < 0:
            raise ValueError("cb_min_conflicts_c must be >= 0")
        if not (0.0 < self.dps_decay < 1.0):
            raise ValueError("dps_decay must lie strictly inside (0, 1)")
        if not (0.0 < self.var_decay < 1.0):
            raise ValueError("var_decay must lie strictly inside (0, 1)")
        if self.luby_base < 1:
            raise ValueError("luby_base must be >= 1")
        if self.clause_db_init_limit < 1:
            raise ValueError("clause_db_init_limit must be >= 1")
        if self.clause_db_limit_growth < 0:
            raise ValueError("clause_db_limit_growth must be >= 0")
        if self.time_limit_seconds is not None and self.time_limit_seconds <= 0:
            raise ValueError("time_limit_seconds must be positive")
        self.ncb_phase_heuristic = PhaseHeuristic(self.ncb_phase_heuristic)
        self.cb_phase_heuristic = PhaseHeuristic(self.cb_phase_heuristic)
        self.restart_policy = RestartPolicy(self.restart_policy)


@dataclass
class SolverStats:
    """Deterministic search counters plus measured wall time.

    Counters are reproducible for a fixed (formula, config, seed); wall time
    is not.  lsids_decisions counts decisions where the LSIDS heuristic chose
    the phase; lsids_differs_from_saved counts the subset whose choice
    disagreed with the saved phase.
    """

    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0
    restarts: int = 0
    cb_backtracks: int = 0
    ncb_backtracks: int = 0
    lsids_decisions: int = 0
    lsids_differs_from_saved: int = 0
    wall_time_seconds: float = 0.0

    def counter_items(self):
        """(name, value) pairs for the deterministic counters, fixed order."""
        return [
            ("conflicts", self.conflicts),
            ("decisions", self.decisions),
            ("propagations", self.propagations),
            ("restarts", self.restarts),
            ("cb_backtracks", self.cb_backtracks),
            ("ncb_backtracks", self.ncb_backtracks),
            ("lsids_decisions", self.lsids_decisions),
            ("lsids_differs_saved", self.lsids_differs_from_saved),
        ]


@dataclass
class SolveResult:
    verdict: Verdict
    model: Optional[List[bool]] = None
    stats: SolverStats = field(default_factory=SolverStats)

    def __post_init__(self):
        if self.verdict is Verdict.SAT and self.model is None:
            raise ValueError("SAT result requires a model")
        if self.verdict is not Verdict.SAT and self.model is not None:
            raise ValueError("only SAT results carry a model")
