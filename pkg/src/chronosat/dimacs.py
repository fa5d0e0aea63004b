"""DIMACS CNF parsing and competition-style result rendering.

Parsing is tolerant by default: a header/body clause-count mismatch is a
diagnostic warning, not an error.  Strict mode upgrades that mismatch to an
error.  Hard errors (bad header, literal out of range, junk tokens, missing
clause terminator) always raise DimacsError with a 1-based line number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from .model import (
    Formula,
    SolveResult,
    Verdict,
    lit_from_dimacs,
    lit_to_dimacs,
    make_clause,
)

MAX_VALUE_LINE_CHARS = 4096


class DimacsError(ValueError):
    """Parse failure, carrying the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class ParseDiagnostics:
    """Non-fatal observations collected while parsing."""

    warnings: List[Tuple[int, str]] = field(default_factory=list)
    declared_variable_count: int = 0
    declared_clause_count: int = 0
    parsed_clause_count: int = 0

    def warn(self, line: int, message: str) -> None:
        self.warnings.append((line, message))


def parse_dimacs(
    text: Union[str, bytes], strict: bool = False
) -> Tuple[Formula, ParseDiagnostics]:
    """Parse DIMACS CNF text into a Formula.

    Comment lines ('c ...') and blank lines may appear anywhere.  Clauses may
    span lines; every clause ends with a 0 token.  Tautological clauses are
    dropped with a warning; duplicate literals within a clause are merged.
    An explicit empty clause is kept (the formula is trivially UNSAT).
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")

    diags = ParseDiagnostics()
    nvars = -1
    clauses = []
    pending: List[int] = []
    pending_open = False
    lineno = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if nvars >= 0:
                raise DimacsError(lineno, "duplicate 'p' header")
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise DimacsError(lineno, f"malformed header {line!r}")
            try:
                nvars = int(parts[2])
                declared_clauses = int(parts[3])
            except ValueError:
                raise DimacsError(lineno, f"non-integer header field in {line!r}")
            if nvars < 0 or declared_clauses < 0:
                raise DimacsError(lineno, "header counts must be non-negative")
            diags.declared_variable_count = nvars
            diags.declared_clause_count = declared_clauses
            continue
        if nvars < 0:
            raise DimacsError(lineno, "clause data before 'p cnf' header")
        for tok in line.split():
            try:
                n = int(tok)
            except ValueError:
                raise DimacsError(lineno, f"invalid token {tok!r}")
            if n == 0:
                diags.parsed_clause_count += 1
                clause = make_clause(pending)
                if clause is None:
                    diags.warn(lineno, "tautological clause dropped")
                else:
                    clauses.append(clause)
                pending = []
                pending_open = False
                continue
            if abs(n) > nvars:
                raise DimacsError(
                    lineno, f"literal {n} exceeds declared variable count {nvars}"
                )
            pending.append(lit_from_dimacs(n))
            pending_open = True

    last_line = max(lineno, 1)
    if nvars < 0:
        raise DimacsError(last_line, "missing 'p cnf' header")
    if pending_open:
        raise DimacsError(last_line, "clause missing terminating 0 at end of input")

    if diags.parsed_clause_count != diags.declared_clause_count:
        msg = (
            f"header declares {diags.declared_clause_count} clauses, "
            f"found {diags.parsed_clause_count}"
        )
        if strict:
            raise DimacsError(last_line, msg)
        diags.warn(last_line, msg)

    return Formula(nvars, clauses), diags


def parse_dimacs_file(
    path, strict: bool = False
) -> Tuple[Formula, ParseDiagnostics]:
    with open(path, "rb") as fh:
        return parse_dimacs(fh.read(), strict=strict)


def write_dimacs(formula: Formula, comments: Optional[List[str]] = None) -> str:
    """Render a Formula back to DIMACS text (test and tooling support)."""
    lines = []
    for comment in comments or []:
        lines.append(f"c {comment}")
    lines.append(f"p cnf {formula.variable_count} {formula.clause_count}")
    for c in formula.clauses:
        lines.append(" ".join(str(lit_to_dimacs(l)) for l in c.lits) + " 0")
    return "\n".join(lines) + "\n"


def render_result(result: SolveResult) -> str:
    """Render a solve result in competition output style.

    One 's' status line; for SAT, 'v' lines listing the model as signed
    ints terminated by 0, each line kept at or under MAX_VALUE_LINE_CHARS.
    """
    if result.verdict is Verdict.SAT:
        status = "s SATISFIABLE"
    elif result.verdict is Verdict.UNSAT:
        status = "s UNSATISFIABLE"
    else:
        status = "s UNKNOWN"
    lines = [status]
    if result.verdict is Verdict.SAT:
        tokens = [
            str(v + 1) if val else str(-(v + 1))
            for v, val in enumerate(result.model)
        ]
        tokens.append("0")
        current = "v"
        for tok in tokens:
            if len(current) + 1 + len(tok) > MAX_VALUE_LINE_CHARS:
                lines.append(current)
                current = "v"
            current += " " + tok
        lines.append(current)
    return "\n".join(lines) + "\n"
