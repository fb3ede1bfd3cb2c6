"""
Reduction engine for germs with a harmonic leading term of order 5, 6 or 7.

Import the public API from here rather than the individual modules::

    >>> from germs.reduction import classify, reduce_step, full_reduce

"""
from germs.reduction.clauses import CLAUSES, ResidualClause, apply_operator, clause_id, get_clause, \
    residual_formula, residual_monomials
from germs.reduction.solver import ActionMatrix, OperatorVerdict, ReductionReport, action_matrix, clause_leading, \
    leading_kind, pinned_functional, reduce_step, verify_operators
from germs.reduction.pipeline import MAX_DEPTH, ClassificationResult, classify, full_reduce, residual_invariance, \
    uniqueness_check
from germs.reduction.tables import HAND_TABLES, HandCrosscheck, crosscheck_hand_diffeo
