"""Deterministic CNF instance generators for tests and benchmarks."""

from __future__ import annotations

import random
from typing import Optional

from .model import Formula, make_clause, make_literal


def random_ksat(
    n_vars: int,
    n_clauses: Optional[int] = None,
    ratio: float = 4.26,
    k: int = 3,
    rng: Optional[random.Random] = None,
    seed: Optional[int] = None,
) -> Formula:
    """Uniform random k-SAT: each clause picks k distinct variables and
    independent random signs.  Pass either n_clauses or a clause/variable
    ratio.  Deterministic for a fixed rng/seed."""
    if n_vars < k:
        raise ValueError(f"need at least {k} variables for {k}-SAT")
    if rng is None:
        rng = random.Random(seed)
    if n_clauses is None:
        n_clauses = round(ratio * n_vars)
    clauses = []
    for _ in range(n_clauses):
        vs = rng.sample(range(n_vars), k)
        lits = [make_literal(v, rng.random() < 0.5) for v in vs]
        clause = make_clause(lits)
        assert clause is not None  # distinct variables, no tautology possible
        clauses.append(clause)
    return Formula(n_vars, clauses)


def pigeonhole(pigeons: int, holes: int) -> Formula:
    """PHP(pigeons, holes): every pigeon in some hole, no hole shared.

    Variable p*holes + h means pigeon p sits in hole h.  Unsatisfiable
    whenever pigeons > holes.
    """
    if pigeons < 1 or holes < 1:
        raise ValueError("need at least one pigeon and one hole")
    nvars = pigeons * holes
    clauses = []
    for p in range(pigeons):
        clauses.append(
            make_clause([make_literal(p * holes + h, True) for h in range(holes)])
        )
    for h in range(holes):
        for p1 in range(pigeons):
            for p2 in range(p1 + 1, pigeons):
                clauses.append(
                    make_clause(
                        [
                            make_literal(p1 * holes + h, False),
                            make_literal(p2 * holes + h, False),
                        ]
                    )
                )
    return Formula(nvars, clauses)


def deep_conflict(padding: int = 150) -> Formula:
    """Unsatisfiable formula whose first conflict sits above `padding`
    decision levels with an analysis level of 0, forcing a large jump
    distance.  The only constraints are four clauses over the last two
    variables; the padding variables are unconstrained, so a fresh solver
    walks them in index order first, one decision level each."""
    n = padding + 2
    a = n - 2
    b = n - 1
    clauses = [
        make_clause([make_literal(a, True), make_literal(b, True)]),
        make_clause([make_literal(a, True), make_literal(b, False)]),
        make_clause([make_literal(a, False), make_literal(b, True)]),
        make_clause([make_literal(a, False), make_literal(b, False)]),
    ]
    return Formula(n, clauses)
