"""Hybrid backtracking policy: when to jump and when to step back one level.

Conflict analysis produces an analysis level (the second-highest level in
the learnt clause).  Classic CDCL backtracks non-chronologically straight
to it.  Chronological backtracking instead steps to currentLevel - 1,
keeping the intermediate assignments alive.  The hybrid rule here:

* for the first C conflicts, always backtrack non-chronologically;
* afterwards, if the jump distance currentLevel - analysisLevel is
  strictly greater than T, backtrack chronologically to currentLevel - 1;
* otherwise backtrack non-chronologically to the analysis level.

The solver is "in CB-state" while its most recent backtrack was
chronological; phase selection dispatches on that flag.  Backtracking is
level-aware rather than suffix-based: removing levels above the target
must keep lower-level entries that sit later on the trail (trails are
non-monotonic once chronological backtracking has interleaved levels).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .model import SolverConfig


class BacktrackKind(enum.Enum):
    CHRONOLOGICAL = "chronological"
    NON_CHRONOLOGICAL = "non_chronological"


@dataclass(frozen=True)
class BacktrackDecision:
    target_level: int
    kind: BacktrackKind


def choose_backtrack_level(
    current_level: int,
    analysis_level: int,
    conflicts_before: int,
    config: SolverConfig,
) -> BacktrackDecision:
    """Apply the hybrid rule to one conflict.

    current_level is the conflict level (the level the conflict was
    analysed at), analysis_level the level the learnt clause asserts at,
    conflicts_before the number of conflicts completed prior to this one.
    The C rule supersedes the T rule.
    """
    if not 0 <= analysis_level < current_level:
        raise ValueError(
            f"need 0 <= analysis_level < current_level, "
            f"got {analysis_level} and {current_level}"
        )
    if conflicts_before < config.cb_min_conflicts_c:
        return BacktrackDecision(analysis_level, BacktrackKind.NON_CHRONOLOGICAL)
    if current_level - analysis_level > config.cb_threshold_t:
        return BacktrackDecision(current_level - 1, BacktrackKind.CHRONOLOGICAL)
    return BacktrackDecision(analysis_level, BacktrackKind.NON_CHRONOLOGICAL)


@dataclass
class SolverMode:
    """Tracks whether the most recent backtrack was chronological."""

    last_backtrack_kind: BacktrackKind = BacktrackKind.NON_CHRONOLOGICAL

    @property
    def in_cb_state(self) -> bool:
        return self.last_backtrack_kind is BacktrackKind.CHRONOLOGICAL

    def note_backtrack(self, kind: BacktrackKind) -> None:
        self.last_backtrack_kind = kind


def partition_trail(
    entry_levels: Sequence[int], target_level: int
) -> Tuple[List[int], List[int]]:
    """Split trail positions into (kept, removed) for a backtrack.

    Exactly the positions whose level exceeds target_level are removed;
    surviving positions keep their relative order even when they sit after
    removed ones.  Pure helper mirroring the engine's in-place surgery so
    the selection rule is testable on its own.
    """
    kept = []
    removed = []
    for pos, level in enumerate(entry_levels):
        if level > target_level:
            removed.append(pos)
        else:
            kept.append(pos)
    return kept, removed
