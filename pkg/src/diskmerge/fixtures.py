"""Built-in example instances and formulas used by tests and the CLI."""

from __future__ import annotations

from fractions import Fraction

from .core import Disk, Instance, Point
from .formula import Clause, MonotoneFormula, Polarity, RectilinearRep

F = Fraction


def chain_merge_instance() -> Instance:
    """Five collinear disks where the best strict assignment keeps four:
    the big pair absorbs the middle disk while the two small outliers
    stay selected."""
    return Instance([
        Disk(1, Point(F(0), F(0)), F(2)),
        Disk(2, Point(F(3), F(0)), F(7, 4)),
        Disk(3, Point(F(3, 2), F(0)), F(1)),
        Disk(4, Point(F(-11, 5), F(0)), F(1, 2)),
        Disk(5, Point(F(-29, 10), F(0)), F(1, 2)),
    ])


def relaxed_only_instance() -> Instance:
    """Five collinear disks with no strict assignment at all, while the
    relaxed rule still allows merging the outliers inward."""
    return Instance([
        Disk(1, Point(F(0), F(0)), F(6)),
        Disk(2, Point(F(10), F(0)), F(6)),
        Disk(3, Point(F(5), F(0)), F(1)),
        Disk(4, Point(F(-11, 2), F(0)), F(1)),
        Disk(5, Point(F(31, 2), F(0)), F(1)),
    ])


def _f(num_variables, clauses) -> MonotoneFormula:
    return MonotoneFormula(num_variables, tuple(
        Clause(pol, tuple(lits)) for pol, lits in clauses))


def three_clause_formula() -> tuple[MonotoneFormula, RectilinearRep]:
    """Three clauses over four variables with nine legs: two nested
    positive clauses and one negative clause."""
    formula = _f(4, [
        (Polarity.POSITIVE, (1, 2, 3)),
        (Polarity.POSITIVE, (1, 3, 4)),
        (Polarity.NEGATIVE, (1, 2, 4)),
    ])
    rep = RectilinearRep(
        variable_segments=((0, 9), (10, 19), (20, 29), (30, 39)),
        clause_rows=(1, 2, -1),
        legs=((5, 15, 25), (2, 27, 35), (7, 17, 37)),
    )
    return formula, rep


def single_positive_clause() -> tuple[MonotoneFormula, RectilinearRep]:
    formula = _f(3, [(Polarity.POSITIVE, (1, 2, 3))])
    rep = RectilinearRep(((0, 0), (2, 2), (4, 4)), (1,), ((0, 2, 4),))
    return formula, rep


def single_negative_clause() -> tuple[MonotoneFormula, RectilinearRep]:
    formula = _f(3, [(Polarity.NEGATIVE, (1, 2, 3))])
    rep = RectilinearRep(((0, 0), (2, 2), (4, 4)), (-1,), ((0, 2, 4),))
    return formula, rep


def nested_positive_pair() -> tuple[MonotoneFormula, RectilinearRep]:
    formula = _f(4, [
        (Polarity.POSITIVE, (1, 2, 3)),
        (Polarity.POSITIVE, (1, 3, 4)),
    ])
    rep = RectilinearRep(
        variable_segments=((0, 9), (10, 19), (20, 29), (30, 39)),
        clause_rows=(1, 2),
        legs=((5, 15, 25), (2, 27, 35)),
    )
    return formula, rep


def mixed_polarity_pair() -> tuple[MonotoneFormula, RectilinearRep]:
    formula = _f(3, [
        (Polarity.POSITIVE, (1, 2)),
        (Polarity.NEGATIVE, (1, 3)),
    ])
    rep = RectilinearRep(((0, 1), (2, 2), (4, 4)), (1, -1),
                         ((0, 2), (1, 4)))
    return formula, rep


def unit_clause_formula() -> tuple[MonotoneFormula, RectilinearRep]:
    formula = _f(1, [(Polarity.POSITIVE, (1,))])
    rep = RectilinearRep(((0, 0),), (1,), ((0,),))
    return formula, rep


def variables_only_formula() -> tuple[MonotoneFormula, RectilinearRep]:
    formula = _f(2, [])
    rep = RectilinearRep(((0, 0), (2, 2)), (), ())
    return formula, rep


FORMULA_FIXTURES = {
    "three_clause": three_clause_formula,
    "single_positive": single_positive_clause,
    "single_negative": single_negative_clause,
    "nested_positive": nested_positive_pair,
    "mixed_polarity": mixed_polarity_pair,
    "unit_clause": unit_clause_formula,
    "variables_only": variables_only_formula,
}
