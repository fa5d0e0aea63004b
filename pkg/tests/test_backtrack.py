import pytest
from hypothesis import given, strategies as st

from chronosat.backtrack import (
    BacktrackKind,
    SolverMode,
    choose_backtrack_level,
    partition_trail,
)
from chronosat.model import SolverConfig


CB = BacktrackKind.CHRONOLOGICAL
NCB = BacktrackKind.NON_CHRONOLOGICAL


def test_large_jump_past_threshold_goes_chronological():
    cfg = SolverConfig(cb_threshold_t=100, cb_min_conflicts_c=4000)
    d = choose_backtrack_level(150, 10, conflicts_before=5000, config=cfg)
    assert d.kind is CB
    assert d.target_level == 149


def test_warmup_rule_supersedes_threshold():
    cfg = SolverConfig(cb_threshold_t=100, cb_min_conflicts_c=4000)
    d = choose_backtrack_level(150, 10, conflicts_before=100, config=cfg)
    assert d.kind is NCB
    assert d.target_level == 10


def test_small_jump_stays_non_chronological():
    cfg = SolverConfig(cb_threshold_t=100, cb_min_conflicts_c=4000)
    d = choose_backtrack_level(50, 40, conflicts_before=5000, config=cfg)
    assert d.kind is NCB
    assert d.target_level == 40


def test_jump_equal_to_threshold_is_not_chronological():
    cfg = SolverConfig(cb_threshold_t=10, cb_min_conflicts_c=0)
    d = choose_backtrack_level(20, 10, conflicts_before=99, config=cfg)
    assert d.kind is NCB


def test_zero_thresholds_make_every_conflict_chronological():
    cfg = SolverConfig(cb_threshold_t=0, cb_min_conflicts_c=0)
    for current, analysis in [(1, 0), (5, 4), (9, 2), (300, 0)]:
        d = choose_backtrack_level(current, analysis, conflicts_before=0, config=cfg)
        assert d.kind is CB
        assert d.target_level == current - 1


def test_invalid_levels_rejected():
    cfg = SolverConfig()
    with pytest.raises(ValueError):
        choose_backtrack_level(5, 5, conflicts_before=0, config=cfg)
    with pytest.raises(ValueError):
        choose_backtrack_level(0, 0, conflicts_before=0, config=cfg)
    with pytest.raises(ValueError):
        choose_backtrack_level(5, -1, conflicts_before=0, config=cfg)


@given(
    st.integers(min_value=1, max_value=500),
    st.integers(min_value=0, max_value=499),
    st.integers(min_value=0, max_value=10**6),
    st.integers(min_value=0, max_value=200),
    st.integers(min_value=0, max_value=10**5),
)
def test_policy_has_exactly_two_behaviors(current, analysis, conflicts, t, c):
    if analysis >= current:
        analysis = current - 1
    cfg = SolverConfig(cb_threshold_t=t, cb_min_conflicts_c=c)
    d = choose_backtrack_level(current, analysis, conflicts, cfg)
    if d.kind is CB:
        assert d.target_level == current - 1
        assert conflicts >= c
        assert current - analysis > t
    else:
        assert d.target_level == analysis


def test_mode_tracks_last_backtrack_kind():
    mode = SolverMode()
    assert not mode.in_cb_state
    mode.note_backtrack(CB)
    assert mode.in_cb_state
    mode.note_backtrack(NCB)
    assert not mode.in_cb_state


def test_partition_trail_monotonic():
    kept, removed = partition_trail([1, 1, 2, 3], target_level=1)
    assert kept == [0, 1]
    assert removed == [2, 3]


def test_partition_trail_non_monotonic_keeps_interleaved_lower_levels():
    # Levels [1, 3, 2, 3]: backtracking to 2 removes both level-3 entries,
    # including the one sitting before the level-2 entry.
    kept, removed = partition_trail([1, 3, 2, 3], target_level=2)
    assert kept == [0, 2]
    assert removed == [1, 3]


def test_partition_trail_to_zero_keeps_root_facts():
    kept, removed = partition_trail([0, 0, 1, 2], target_level=0)
    assert kept == [0, 1]
    assert removed == [2, 3]


@given(st.lists(st.integers(min_value=0, max_value=8)), st.integers(0, 8))
def test_partition_trail_is_exact_and_order_preserving(levels, target):
    kept, removed = partition_trail(levels, target)
    assert sorted(kept + removed) == list(range(len(levels)))
    assert all(levels[p] <= target for p in kept)
    assert all(levels[p] > target for p in removed)
    assert kept == sorted(kept)
    assert removed == sorted(removed)
