"""Phase selection: which polarity a fresh decision variable receives.

Six heuristics are available.  Two keep their own score state:

* DPS keeps one decayed polarity score per variable.  Every time an
  assignment is erased, dps[v] = pol + decay * dps[v] with pol = +1 for an
  erased True and -1 for an erased False; the heuristic picks positive
  exactly when the score is positive (a zero score picks negative).

* LSIDS keeps one activity per literal, bumped additively by a growing
  increment: erasing an assignment bumps the erased literal at double
  weight, and every learnt clause bumps each of its literals at half
  weight, after which the increment is decayed once (multiplied by
  1/0.95).  When any activity passes 1e100 all activities and the
  increment are rescored by 1e-100.  The heuristic picks positive exactly
  when the positive literal's activity strictly exceeds the negative's.

Saved-phase, DPS, and LSIDS state is maintained on every erase and every
learnt clause regardless of which heuristic is currently dispatched, so
switching heuristics mid-search (the backtrack-mode dispatch) always sees
warm scores.
"""

from __future__ import annotations

import random
from typing import List, Sequence

from .model import PhaseHeuristic, SolverConfig, SolverStats

LSIDS_ERASE_MULT = 2.0
LSIDS_LEARNT_MULT = 0.5
LSIDS_DECAY_FACTOR = 1.0 / 0.95
LSIDS_RESCORE_LIMIT = 1e100
LSIDS_RESCORE_FACTOR = 1e-100


class PhaseSelector:
    """Owns saved phases, DPS scores, LSIDS activities, and the decision RNG."""

    def __init__(self, n_vars: int, config: SolverConfig, stats: SolverStats):
        self.n_vars = n_vars
        self.config = config
        self.stats = stats
        self.saved: List[bool] = [False] * n_vars
        self.dps: List[float] = [0.0] * n_vars
        self.lsids_activity: List[float] = [0.0] * (2 * n_vars)
        self.lsids_inc: float = 1.0
        self.rng = random.Random(config.random_seed)

    # -- state maintenance hooks -------------------------------------------

    def on_assignment_erased(self, var: int, polarity: bool) -> None:
        """Called once per trail entry removed by a backtrack."""
        self.saved[var] = polarity
        pol = 1.0 if polarity else -1.0
        self.dps[var] = pol + self.config.dps_decay * self.dps[var]
        lit = 2 * var + (0 if polarity else 1)
        self.lsids_bump(lit, LSIDS_ERASE_MULT)

    def on_clause_learnt(self, lits: Sequence[int]) -> None:
        """Called once per conflict with the final learnt clause."""
        for lit in lits:
            self.lsids_bump(lit, LSIDS_LEARNT_MULT)
        self.lsids_decay()

    def lsids_bump(self, lit: int, mult: float) -> None:
        act = self.lsids_activity[lit] + self.lsids_inc * mult
        self.lsids_activity[lit] = act
        if act > LSIDS_RESCORE_LIMIT:
            self.lsids_rescore()

    def lsids_decay(self) -> None:
        self.lsids_inc *= LSIDS_DECAY_FACTOR

    def lsids_rescore(self) -> None:
        acts = self.lsids_activity
        for i in range(len(acts)):
            acts[i] *= LSIDS_RESCORE_FACTOR
        self.lsids_inc *= LSIDS_RESCORE_FACTOR

    # -- decision-time phase choice ----------------------------------------

    def select_phase(self, var: int, in_cb_state: bool) -> bool:
        """Phase for a fresh decision on var, recording LSIDS usage stats.

        The active heuristic depends on the solver's backtrack mode: the
        cb heuristic applies while the last backtrack was chronological,
        the ncb heuristic otherwise.
        """
        heuristic = (
            self.config.cb_phase_heuristic
            if in_cb_state
            else self.config.ncb_phase_heuristic
        )
        if heuristic is PhaseHeuristic.LSIDS:
            choice = self._lsids_preference(var)
            self.stats.lsids_decisions += 1
            if choice != self.saved[var]:
                self.stats.lsids_differs_from_saved += 1
            return choice
        return self._preference(heuristic, var)

    def current_preference(self, var: int, in_cb_state: bool) -> bool:
        """Phase the active heuristic would pick, without stats effects.

        Random consumes no RNG here; it reports the saved fallback so that
        peeking never perturbs the decision stream.
        """
        heuristic = (
            self.config.cb_phase_heuristic
            if in_cb_state
            else self.config.ncb_phase_heuristic
        )
        if heuristic is PhaseHeuristic.RANDOM:
            return self.saved[var]
        if heuristic is PhaseHeuristic.LSIDS:
            return self._lsids_preference(var)
        return self._preference(heuristic, var)

    def _lsids_preference(self, var: int) -> bool:
        return self.lsids_activity[2 * var] > self.lsids_activity[2 * var + 1]

    def _preference(self, heuristic: PhaseHeuristic, var: int) -> bool:
        if heuristic is PhaseHeuristic.SAVED:
            return self.saved[var]
        if heuristic is PhaseHeuristic.RANDOM:
            return self.rng.random() < 0.5
        if heuristic is PhaseHeuristic.ALWAYS_FALSE:
            return False
        if heuristic is PhaseHeuristic.OPPOSITE_SAVED:
            return not self.saved[var]
        if heuristic is PhaseHeuristic.DPS:
            return self.dps[var] > 0.0
        raise ValueError(f"unhandled heuristic {heuristic!r}")
