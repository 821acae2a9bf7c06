"""Monotone planar formulas and their rectilinear drawings.

A monotone formula has clauses whose literals are either all positive or
all negative.  A rectilinear representation draws variables as disjoint
horizontal segments on the x axis, positive clauses as horizontal
segments above it, negative clauses below, and clause-variable edges as
vertical legs; the drawing must be crossing-free.  ``grid_embed``
normalizes such a drawing onto a compact integer grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import FormatError


class Polarity(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class Clause:
    polarity: Polarity
    literals: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= len(self.literals) <= 3:
            raise FormatError("clause needs 1..3 literals")
        if len(set(self.literals)) != len(self.literals):
            raise FormatError("clause literals must be distinct")


@dataclass(frozen=True)
class MonotoneFormula:
    num_variables: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        if self.num_variables < 0:
            raise FormatError("negative variable count")
        for cl in self.clauses:
            for v in cl.literals:
                if not 1 <= v <= self.num_variables:
                    raise FormatError(f"literal {v} out of range")

    def is_satisfied(self, values: dict[int, int]) -> bool:
        for cl in self.clauses:
            want = 1 if cl.polarity is Polarity.POSITIVE else 0
            if not any(values[v] == want for v in cl.literals):
                return False
        return True


@dataclass(frozen=True)
class RectilinearRep:
    """Grid drawing: per-variable x-interval, per-clause row, and one
    column per (clause, literal) leg, aligned with the clause's literal
    order."""

    variable_segments: tuple[tuple[int, int], ...]
    clause_rows: tuple[int, ...]
    legs: tuple[tuple[int, ...], ...]


def validate_rep(formula: MonotoneFormula, rep: RectilinearRep) -> None:
    """Raise FormatError unless rep is a crossing-free drawing of formula."""
    if len(rep.variable_segments) != formula.num_variables:
        raise FormatError("one segment per variable required")
    if len(rep.clause_rows) != len(formula.clauses) or \
            len(rep.legs) != len(formula.clauses):
        raise FormatError("one row and leg list per clause required")

    for lo, hi in rep.variable_segments:
        if lo > hi:
            raise FormatError(f"bad variable segment ({lo},{hi})")
    segs = sorted(rep.variable_segments)
    for (_, hi), (lo, _) in zip(segs, segs[1:]):
        if lo <= hi:
            raise FormatError("variable segments overlap")

    all_legs: list[tuple[int, int, int]] = []  # (column, row, clause idx)
    for ci, (cl, row, cols) in enumerate(
            zip(formula.clauses, rep.clause_rows, rep.legs)):
        if len(cols) != len(cl.literals):
            raise FormatError(f"clause {ci}: one leg per literal required")
        if (row > 0) != (cl.polarity is Polarity.POSITIVE) or row == 0:
            raise FormatError(f"clause {ci}: row {row} contradicts polarity")
        for var, col in zip(cl.literals, cols):
            lo, hi = rep.variable_segments[var - 1]
            if not lo <= col <= hi:
                raise FormatError(
                    f"clause {ci}: leg column {col} outside variable {var}")
            all_legs.append((col, row, ci))

    cols_seen = [c for c, _, _ in all_legs]
    if len(set(cols_seen)) != len(cols_seen):
        raise FormatError("leg columns must be distinct")

    # crossing checks: clause spans on a shared side must not contain a
    # farther leg strictly inside, and same-row spans must not overlap
    spans = [(min(cols), max(cols)) if cols else None
             for cols in rep.legs]
    for ci, span in enumerate(spans):
        if span is None:
            continue
        row = rep.clause_rows[ci]
        for col, lrow, lci in all_legs:
            if lci == ci or lrow * row < 0:
                continue
            if abs(lrow) >= abs(row) and span[0] < col < span[1]:
                raise FormatError(
                    f"leg of clause {lci} crosses clause {ci}")
            if lrow == row and span[0] <= col <= span[1]:
                raise FormatError(
                    f"clauses {ci} and {lci} overlap on row {row}")


def grid_embed(formula: MonotoneFormula, rep: RectilinearRep
               ) -> RectilinearRep:
    """Compress a valid drawing onto consecutive integer rows/columns.

    Rows above the axis become 1..k (below: -1..-k) preserving order;
    each leg gets its own column with one spacer column between
    variables, so the result uses at most len(legs) + num_variables
    columns and (number of distinct clause rows) + 1 rows.
    """
    validate_rep(formula, rep)

    pos_rows = sorted({r for r in rep.clause_rows if r > 0})
    neg_rows = sorted({r for r in rep.clause_rows if r < 0}, reverse=True)
    row_map = {r: i + 1 for i, r in enumerate(pos_rows)}
    row_map.update({r: -(i + 1) for i, r in enumerate(neg_rows)})

    # variables left to right, legs within each variable left to right
    var_order = sorted(range(1, formula.num_variables + 1),
                       key=lambda v: rep.variable_segments[v - 1])
    legs_of_var: dict[int, list[int]] = {v: [] for v in var_order}
    for cl, cols in zip(formula.clauses, rep.legs):
        for var, col in zip(cl.literals, cols):
            legs_of_var[var].append(col)

    col_map: dict[int, int] = {}
    segments = list(rep.variable_segments)
    next_col = 1
    prev_had_legs = False
    for v in var_order:
        cols = sorted(legs_of_var[v])
        if prev_had_legs:
            next_col += 1  # spacer column after a variable with legs
        if not cols:
            segments[v - 1] = (next_col, next_col)
            next_col += 1
            prev_had_legs = False
            continue
        for col in cols:
            col_map[col] = next_col
            next_col += 1
        segments[v - 1] = (col_map[cols[0]], col_map[cols[-1]])
        prev_had_legs = True

    new_rows = tuple(row_map[r] for r in rep.clause_rows)
    new_legs = tuple(tuple(col_map[c] for c in cols) for cols in rep.legs)
    out = RectilinearRep(tuple(segments), new_rows, new_legs)
    validate_rep(formula, out)
    return out


def grid_size(formula: MonotoneFormula, rep: RectilinearRep
              ) -> tuple[int, int]:
    """(rows, columns) of the bounding grid of an embedded drawing."""
    rows = len(set(rep.clause_rows)) + 1
    cols = max((hi for _, hi in rep.variable_segments), default=0)
    return rows, cols
