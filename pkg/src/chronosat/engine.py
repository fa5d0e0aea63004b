"""CDCL search engine with hybrid chronological/non-chronological backtracking.

The solver is classic conflict-driven clause learning (two-watched-literal
propagation, first-UIP learning with self-subsumption minimisation, EVSIDS
branching, Luby or LBD-driven restarts, learnt-clause database reduction)
with one structural twist: backtracking is level-aware, not suffix-based.

A chronological backtrack erases only the levels above its target, so the
trail becomes non-monotonic: an entry's decision level may be lower than
the entry before it.  Everything downstream honours that:

* an implied literal is recorded at the highest level among the falsified
  literals of its reason clause, not at the current decision level;
* a conflict is analysed at the highest level appearing in the conflict
  clause, which can sit below the current decision level;
* the first-UIP walk only resolves trail literals at that conflict level,
  and backtracking removes exactly the entries above the target level
  wherever they sit on the trail.
"""

from __future__ import annotations

import time
from heapq import heapify, heappop, heappush
from typing import Callable, List, Optional

from .backtrack import (
    BacktrackKind,
    SolverMode,
    choose_backtrack_level,
)
from .model import (
    Clause,
    Formula,
    RestartPolicy,
    SolveResult,
    SolverConfig,
    SolverStats,
    TrailEntry,
    Verdict,
)
from .phase import PhaseSelector
from .verify import check_model

VAR_RESCALE_LIMIT = 1e100
VAR_RESCALE_FACTOR = 1e-100
CLA_RESCALE_LIMIT = 1e20
CLA_RESCALE_FACTOR = 1e-20
CLA_DECAY = 0.999
DEADLINE_CHECK_INTERVAL = 4096
GLUCOSE_WINDOW = 50
GLUCOSE_MARGIN = 0.8


def luby(index: int) -> int:
    """Luby restart sequence 1,1,2,1,1,2,4,... (0-based index)."""
    size, seq = 1, 0
    while size < index + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != index:
        size = (size - 1) >> 1
        seq -= 1
        index = index % size
    return 1 << seq


class Solver:
    """One-shot solver for a fixed formula.  Create, call solve(), discard."""

    def __init__(self, formula: Formula, config: Optional[SolverConfig] = None):
        self.formula = formula
        self.config = config or SolverConfig()
        n = formula.variable_count
        self.n_vars = n
        self.stats = SolverStats()
        self.mode = SolverMode()
        self.phase = PhaseSelector(n, self.config, self.stats)

        # value is indexed by literal: +1 true, -1 false, 0 unassigned.
        self.value: List[int] = [0] * (2 * n)
        self.level: List[int] = [0] * n
        self.reason: List[Optional[Clause]] = [None] * n
        self.trail: List[int] = []
        self.qhead = 0
        self.decision_level = 0

        self.watches: List[list] = [[] for _ in range(2 * n)]
        self.clauses: List[Clause] = []
        self.learnts: List[Clause] = []
        self.learnt_limit = self.config.clause_db_init_limit

        self.var_activity: List[float] = [0.0] * n
        self.var_inc = 1.0
        self.heap: List[tuple] = [(-0.0, v) for v in range(n)]
        self.cla_inc = 1.0

        self.seen = bytearray(n)
        self.timed_out = False
        self.deadline: Optional[float] = None
        self._deadline_tick = 0
        self._conflicts_since_restart = 0
        self._lbd_recent: List[int] = []
        self._lbd_recent_sum = 0
        self._lbd_global_sum = 0
        # Optional test instrumentation: called as (var, phase, in_cb_state)
        # for every decision.
        self.decision_hook: Optional[Callable[[int, bool, bool], None]] = None

        self.ok = True
        for clause in formula.clauses:
            if not self._add_input_clause(list(clause.lits)):
                self.ok = False
                break

    # -- construction --------------------------------------------------------

    def _add_input_clause(self, lits: List[int]) -> bool:
        """Attach one input clause (engine-owned literal list).  False when
        the clause makes the formula trivially unsatisfiable."""
        if not lits:
            return False
        if len(lits) == 1:
            l = lits[0]
            val = self.value[l]
            if val < 0:
                return False
            if val == 0:
                self._enqueue(l, None, 0)
            return True
        c = Clause(lits, learnt=False)
        self.clauses.append(c)
        self._attach(c)
        return True

    def _attach(self, c: Clause) -> None:
        lits = c.lits
        self.watches[lits[0]].append([c, lits[1]])
        self.watches[lits[1]].append([c, lits[0]])

    def _enqueue(self, lit: int, reason: Optional[Clause], level: int) -> None:
        self.value[lit] = 1
        self.value[lit ^ 1] = -1
        v = lit >> 1
        self.level[v] = level
        self.reason[v] = reason
        self.trail.append(lit)

    # -- propagation ----------------------------------------------------------

    def _propagate(self) -> Optional[Clause]:
        """Propagate to fixpoint; returns a conflicting clause or None.

        On conflict the queue head is rewound one step so the interrupted
        literal is rescanned after backtracking: under chronological
        backtracking that literal may survive the backtrack, and its
        remaining watchers were not yet examined.
        """
        value = self.value
        watches = self.watches
        level = self.level
        reason = self.reason
        trail = self.trail
        qhead = self.qhead
        confl: Optional[Clause] = None
        props = 0
        tick = self._deadline_tick
        deadline = self.deadline

        while qhead < len(trail):
            p = trail[qhead]
            qhead += 1
            props += 1
            tick += 1
            if tick >= DEADLINE_CHECK_INTERVAL:
                tick = 0
                if deadline is not None and time.monotonic() > deadline:
                    self.timed_out = True
                    break
            plevel = level[p >> 1]
            false_lit = p ^ 1
            wl = watches[false_lit]
            i = j = 0
            n = len(wl)
            while i < n:
                w = wl[i]
                i += 1
                blocker = w[1]
                # Satisfied-by-blocker shortcut.  The blocker may no longer
                # be watched, so its truth is only trusted when it cannot
                # outlive the falsity being recorded here: any backtrack
                # erasing a truth at level <= plevel erases this assignment
                # of p too.  Without the level guard a stale true blocker
                # could mask a clause whose watches are both false, and its
                # later falsification would never rescan this clause.
                if value[blocker] > 0 and level[blocker >> 1] <= plevel:
                    wl[j] = w
                    j += 1
                    continue
                c = w[0]
                lits = c.lits
                if len(lits) == 2:
                    other = lits[0] if lits[0] != false_lit else lits[1]
                    if value[other] > 0:
                        w[1] = other
                        wl[j] = w
                        j += 1
                        continue
                    w[1] = other
                    wl[j] = w
                    j += 1
                    if value[other] < 0:
                        while i < n:
                            wl[j] = wl[i]
                            j += 1
                            i += 1
                        confl = c
                        break
                    if lits[0] != other:
                        lits[0], lits[1] = lits[1], lits[0]
                    value[other] = 1
                    value[other ^ 1] = -1
                    v = other >> 1
                    level[v] = plevel
                    reason[v] = c
                    trail.append(other)
                    continue
                if lits[0] == false_lit:
                    lits[0] = lits[1]
                    lits[1] = false_lit
                first = lits[0]
                if first != blocker and value[first] > 0:
                    w[1] = first
                    wl[j] = w
                    j += 1
                    continue
                # Search a replacement watch; every literal inspected and
                # rejected is false, so the running max of their levels is
                # the implied level if the clause turns out unit.
                found = False
                maxlev = plevel
                k = 2
                nlits = len(lits)
                while k < nlits:
                    lk = lits[k]
                    if value[lk] >= 0:
                        lits[1] = lk
                        lits[k] = false_lit
                        w[1] = first
                        watches[lk].append(w)
                        found = True
                        break
                    lev = level[lk >> 1]
                    if lev > maxlev:
                        maxlev = lev
                    k += 1
                if found:
                    continue
                w[1] = first
                wl[j] = w
                j += 1
                fval = value[first]
                if fval < 0:
                    while i < n:
                        wl[j] = wl[i]
                        j += 1
                        i += 1
                    confl = c
                    break
                if fval == 0:
                    value[first] = 1
                    value[first ^ 1] = -1
                    v = first >> 1
                    level[v] = maxlev
                    reason[v] = c
                    trail.append(first)
                # else: first is true at a level above plevel; the clause is
                # satisfied and first is still watched, so nothing to do.
            del wl[j:]
            if confl is not None:
                qhead -= 1
                break

        self.qhead = qhead
        self.stats.propagations += props
        self._deadline_tick = tick
        return confl

    # -- conflict analysis ----------------------------------------------------

    def _analyze(self, confl: Clause, conflict_level: int):
        """First-UIP analysis at the conflict level.

        Returns (learnt_lits, assert_level, lbd) with the asserting literal
        first and the highest-level remaining literal second.  Trail
        literals below the conflict level enter the learnt clause directly;
        only literals at the conflict level are resolved.
        """
        seen = self.seen
        level = self.level
        reason = self.reason
        trail = self.trail
        learnt: List[int] = [0]
        to_clear: List[int] = []
        pathc = 0
        p = -1
        idx = len(trail) - 1
        c = confl

        while True:
            if c.learnt:
                self._cla_bump(c)
            for q in c.lits:
                if q == p:
                    continue
                v = q >> 1
                lv = level[v]
                if not seen[v] and lv > 0:
                    seen[v] = 1
                    to_clear.append(v)
                    self._var_bump(v)
                    if lv == conflict_level:
                        pathc += 1
                    else:
                        learnt.append(q)
            while True:
                pv = trail[idx] >> 1
                if seen[pv] and level[pv] == conflict_level:
                    break
                idx -= 1
            p = trail[idx]
            idx -= 1
            seen[pv] = 0
            pathc -= 1
            if pathc == 0:
                break
            c = reason[pv]
        learnt[0] = p ^ 1

        # Self-subsumption: drop a literal whose entire reason is already in
        # the clause (or settled at level 0).
        out = [learnt[0]]
        for q in learnt[1:]:
            r = reason[q >> 1]
            if r is None:
                out.append(q)
                continue
            implied = q ^ 1
            for u in r.lits:
                if u == implied:
                    continue
                if not seen[u >> 1] and level[u >> 1] > 0:
                    out.append(q)
                    break

        if len(out) == 1:
            assert_level = 0
        else:
            mi = 1
            ml = level[out[1] >> 1]
            for k in range(2, len(out)):
                lv = level[out[k] >> 1]
                if lv > ml:
                    ml = lv
                    mi = k
            out[1], out[mi] = out[mi], out[1]
            assert_level = ml

        lbd = len({level[q >> 1] for q in out})
        for v in to_clear:
            seen[v] = 0
        return out, assert_level, lbd

    # -- activities -----------------------------------------------------------

    def _var_bump(self, v: int) -> None:
        acts = self.var_activity
        a = acts[v] + self.var_inc
        acts[v] = a
        if a > VAR_RESCALE_LIMIT:
            for i in range(self.n_vars):
                acts[i] *= VAR_RESCALE_FACTOR
            self.var_inc *= VAR_RESCALE_FACTOR
            self._rebuild_heap()
        else:
            heappush(self.heap, (-a, v))

    def _var_decay(self) -> None:
        self.var_inc *= 1.0 / self.config.var_decay

    def _cla_bump(self, c: Clause) -> None:
        c.activity += self.cla_inc
        if c.activity > CLA_RESCALE_LIMIT:
            for lc in self.learnts:
                lc.activity *= CLA_RESCALE_FACTOR
            self.cla_inc *= CLA_RESCALE_FACTOR

    def _cla_decay(self) -> None:
        self.cla_inc *= 1.0 / CLA_DECAY

    def _rebuild_heap(self) -> None:
        acts = self.var_activity
        value = self.value
        self.heap = [(-acts[v], v) for v in range(self.n_vars) if value[v << 1] == 0]
        heapify(self.heap)

    def _pick_branch_var(self) -> Optional[int]:
        """Unassigned variable of maximal activity; ties go to the lowest
        index via the heap ordering.  Entries are lazy: stale ones (already
        assigned, or pushed before a later bump) are skipped."""
        if len(self.heap) > 4 * self.n_vars + 64:
            self._rebuild_heap()
        heap = self.heap
        acts = self.var_activity
        value = self.value
        while heap:
            negact, v = heappop(heap)
            if value[v << 1] == 0 and acts[v] == -negact:
                return v
        return None

    # -- backtracking ---------------------------------------------------------

    def _backtrack_to(self, target: int) -> None:
        """Remove exactly the trail entries above target, wherever they sit.

        Erased entries fire the phase hook in reverse assignment order.  The
        propagation head rewinds to the first removed position: surviving
        entries that shift down may be rescanned, which is idempotent."""
        trail = self.trail
        level = self.level
        n = len(trail)
        i = 0
        while i < n and level[trail[i] >> 1] <= target:
            i += 1
        if i < n:
            value = self.value
            reason = self.reason
            acts = self.var_activity
            heap = self.heap
            on_erased = self.phase.on_assignment_erased
            removed = []
            j = i
            for k in range(i, n):
                lit = trail[k]
                if level[lit >> 1] <= target:
                    trail[j] = lit
                    j += 1
                else:
                    removed.append(lit)
            del trail[j:]
            for lit in reversed(removed):
                v = lit >> 1
                value[lit] = 0
                value[lit ^ 1] = 0
                reason[v] = None
                on_erased(v, (lit & 1) == 0)
                heappush(heap, (-acts[v], v))
            if self.qhead > i:
                self.qhead = i
        self.decision_level = target

    # -- restarts and clause database -----------------------------------------

    def _note_learnt_lbd(self, lbd: int) -> None:
        recent = self._lbd_recent
        if len(recent) >= GLUCOSE_WINDOW:
            self._lbd_recent_sum -= recent.pop(0)
        recent.append(lbd)
        self._lbd_recent_sum += lbd
        self._lbd_global_sum += lbd

    def _should_restart(self) -> bool:
        if self.decision_level == 0:
            return False
        if self.config.restart_policy is RestartPolicy.LUBY:
            budget = luby(self.stats.restarts) * self.config.luby_base
            return self._conflicts_since_restart >= budget
        if len(self._lbd_recent) < GLUCOSE_WINDOW or self.stats.conflicts == 0:
            return False
        recent_avg = self._lbd_recent_sum / GLUCOSE_WINDOW
        global_avg = self._lbd_global_sum / self.stats.conflicts
        return recent_avg * GLUCOSE_MARGIN > global_avg

    def _restart(self) -> None:
        self.stats.restarts += 1
        self._conflicts_since_restart = 0
        self._lbd_recent.clear()
        self._lbd_recent_sum = 0
        self._backtrack_to(0)
        self.mode.note_backtrack(BacktrackKind.NON_CHRONOLOGICAL)

    def _reduce_db(self) -> None:
        """Drop the worst half of the deletable learnt clauses.

        Clauses with lbd <= 2 and clauses locked as a current reason are
        kept; the rest rank by (lbd ascending, activity descending) and the
        bottom half is removed, then watches are rebuilt."""
        value = self.value
        reason = self.reason
        protected = []
        candidates = []
        for c in self.learnts:
            first = c.lits[0]
            locked = value[first] > 0 and reason[first >> 1] is c
            if c.lbd <= 2 or locked:
                protected.append(c)
            else:
                candidates.append(c)
        candidates.sort(key=lambda cl: (cl.lbd, -cl.activity))
        keep = len(candidates) - len(candidates) // 2
        self.learnts = protected + candidates[:keep]
        self.watches = [[] for _ in range(2 * self.n_vars)]
        for c in self.clauses:
            self._attach(c)
        for c in self.learnts:
            self._attach(c)

    # -- main loop -------------------------------------------------------------

    def solve(self) -> SolveResult:
        start = time.monotonic()
        if self.config.time_limit_seconds is not None:
            self.deadline = start + self.config.time_limit_seconds
        result = self._search()
        if result is Verdict.SAT:
            model = self._extract_model()
            if not check_model(self.formula, model):
                raise RuntimeError("internal error: produced model fails a clause")
            self.stats.wall_time_seconds = time.monotonic() - start
            return SolveResult(Verdict.SAT, model=model, stats=self.stats)
        self.stats.wall_time_seconds = time.monotonic() - start
        return SolveResult(result, stats=self.stats)

    def _search(self) -> Verdict:
        if not self.ok:
            return Verdict.UNSAT
        cfg = self.config
        stats = self.stats
        level = self.level
        while True:
            confl = self._propagate()
            if self.timed_out:
                return Verdict.UNKNOWN
            if confl is not None:
                conflict_level = 0
                for l in confl.lits:
                    lv = level[l >> 1]
                    if lv > conflict_level:
                        conflict_level = lv
                if conflict_level == 0:
                    stats.conflicts += 1
                    return Verdict.UNSAT
                learnt, assert_level, lbd = self._analyze(confl, conflict_level)
                decision = choose_backtrack_level(
                    conflict_level, assert_level, stats.conflicts, cfg
                )
                stats.conflicts += 1
                self._conflicts_since_restart += 1
                self._note_learnt_lbd(lbd)
                self._backtrack_to(decision.target_level)
                self.mode.note_backtrack(decision.kind)
                if decision.kind is BacktrackKind.CHRONOLOGICAL:
                    stats.cb_backtracks += 1
                else:
                    stats.ncb_backtracks += 1
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None, 0)
                else:
                    c = Clause(learnt, learnt=True, lbd=lbd)
                    c.activity = self.cla_inc
                    self.learnts.append(c)
                    self._attach(c)
                    self._enqueue(learnt[0], c, assert_level)
                self.phase.on_clause_learnt(learnt)
                self._var_decay()
                self._cla_decay()
            else:
                if self.deadline is not None and time.monotonic() > self.deadline:
                    self.timed_out = True
                    return Verdict.UNKNOWN
                if self._should_restart():
                    self._restart()
                    continue
                if len(self.learnts) >= self.learnt_limit:
                    self._reduce_db()
                    self.learnt_limit += cfg.clause_db_limit_growth
                v = self._pick_branch_var()
                if v is None:
                    return Verdict.SAT
                phase = self.phase.select_phase(v, self.mode.in_cb_state)
                stats.decisions += 1
                self.decision_level += 1
                self._enqueue(2 * v + (0 if phase else 1), None, self.decision_level)
                if self.decision_hook is not None:
                    self.decision_hook(v, phase, self.mode.in_cb_state)

    def _extract_model(self) -> List[bool]:
        model = []
        value = self.value
        in_cb = self.mode.in_cb_state
        for v in range(self.n_vars):
            val = value[v << 1]
            if val > 0:
                model.append(True)
            elif val < 0:
                model.append(False)
            else:
                model.append(self.phase.current_preference(v, in_cb))
        return model

    # -- inspection (tests and tooling) ----------------------------------------

    def trail_entries(self) -> List[TrailEntry]:
        return [
            TrailEntry(lit, self.level[lit >> 1], self.reason[lit >> 1])
            for lit in self.trail
        ]

    def debug_check_watches(self) -> None:
        """Assert watch-list consistency; call only at propagation fixpoint.

        Every clause of size >= 2 must be watched exactly at its first two
        positions.  Both watches being false is legal only while the clause
        is satisfied elsewhere (a blocker truth kept a falsified watch); a
        clause with both watches false and no true literal would be a
        missed conflict."""
        expected = {}
        for c in self.clauses + self.learnts:
            expected[id(c)] = (c, {c.lits[0], c.lits[1]})
        seen_counts = {cid: [] for cid in expected}
        for lit in range(2 * self.n_vars):
            for w in self.watches[lit]:
                cid = id(w[0])
                if cid not in expected:
                    raise AssertionError("watcher for unknown clause")
                seen_counts[cid].append(lit)
        for cid, (c, watch_set) in expected.items():
            got = seen_counts[cid]
            if sorted(got) != sorted(watch_set):
                raise AssertionError(
                    f"clause {c!r} watched at {got}, expected {watch_set}"
                )
            v0, v1 = self.value[c.lits[0]], self.value[c.lits[1]]
            if v0 < 0 and v1 < 0 and not any(self.value[l] > 0 for l in c.lits):
                raise AssertionError(f"missed conflict or unit in {c!r}")


def solve_formula(
    formula: Formula, config: Optional[SolverConfig] = None
) -> SolveResult:
    """Convenience wrapper: build a solver, run it, return the result."""
    return Solver(formula, config).solve()
