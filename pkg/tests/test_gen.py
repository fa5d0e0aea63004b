import random

import pytest

from chronosat.gen import deep_conflict, pigeonhole, random_ksat
from chronosat.model import Verdict, lit_var
from chronosat.verify import brute_force_solve


def test_random_ksat_ratio_sets_clause_count():
    f = random_ksat(10, seed=1)
    assert f.variable_count == 10
    assert f.clause_count == round(4.26 * 10)


def test_random_ksat_explicit_clause_count():
    f = random_ksat(8, n_clauses=5, seed=1)
    assert f.clause_count == 5


def test_random_ksat_clauses_use_three_distinct_variables():
    f = random_ksat(12, seed=42)
    for c in f.clauses:
        assert len(c.lits) == 3
        assert len({lit_var(l) for l in c.lits}) == 3


def test_random_ksat_deterministic_per_seed():
    a = random_ksat(9, seed=5)
    b = random_ksat(9, seed=5)
    assert [c.lits for c in a.clauses] == [c.lits for c in b.clauses]
    c = random_ksat(9, seed=6)
    assert [x.lits for x in a.clauses] != [x.lits for x in c.clauses]


def test_random_ksat_rejects_too_few_variables():
    with pytest.raises(ValueError):
        random_ksat(2)


def test_random_ksat_accepts_shared_rng():
    rng = random.Random(3)
    f1 = random_ksat(6, n_clauses=4, rng=rng)
    f2 = random_ksat(6, n_clauses=4, rng=rng)
    assert [c.lits for c in f1.clauses] != [c.lits for c in f2.clauses]


def test_pigeonhole_shape():
    p, h = 4, 3
    f = pigeonhole(p, h)
    assert f.variable_count == p * h
    assert f.clause_count == p + h * (p * (p - 1) // 2)


def test_pigeonhole_square_is_sat():
    assert brute_force_solve(pigeonhole(2, 2)).verdict is Verdict.SAT


def test_pigeonhole_overfull_is_unsat():
    assert brute_force_solve(pigeonhole(3, 2)).verdict is Verdict.UNSAT
    assert brute_force_solve(pigeonhole(4, 3)).verdict is Verdict.UNSAT


def test_pigeonhole_validates_arguments():
    with pytest.raises(ValueError):
        pigeonhole(0, 2)


def test_deep_conflict_shape_and_verdict():
    f = deep_conflict(padding=150)
    assert f.variable_count == 152
    assert f.clause_count == 4
    # Same constraint core at a brute-forceable size.
    small = deep_conflict(padding=3)
    assert brute_force_solve(small).verdict is Verdict.UNSAT
