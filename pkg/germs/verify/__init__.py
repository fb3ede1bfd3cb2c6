"""
This module init file is responsible for loading the verify plan modules, and offering methods for looking up the
plan which verifies a given clause.

A **verify plan** is a Python module (folder containing classes and init file) which re-checks one or more clauses
of the classification on seeded random inputs: the residual formulas, the absorption of polyharmonic tails, the
hand-table crosscheck and so on.

A plan module must contain:

 - An ``__init__.py`` with a dictionary named ``exports``, containing the key 'plan' pointing to the
   un-instantiated plan class.
 - The plan class itself, extending :class:`base.BasePlan`, with ``provides`` set to the clause identifiers
   it can verify.

Example `__init__.py`:

>>> from germs.verify.Residuals.ResidualPlan import ResidualPlan
>>>
>>> exports = {
>>>     "plan": ResidualPlan
>>> }

Plan modules are loaded from ``settings.VERIFY_PLANS``, relative to ``settings.VERIFY_PLANS_BASE``.

For an example of how to layout your plan module, check out the pre-included plans:

 - :py:mod:`.Residuals`
 - :py:mod:`.Absorption`

"""
import logging
from importlib import import_module
from typing import List

from django.conf import settings

from germs.exceptions import UnknownPlanError
from germs.verify.base import BasePlan

plans = {}
"""
A dictionary mapping clause identifiers to the (un-instantiated) plan class verifying them

Example layout::

    plans = {
        'h5-deg6': ResidualPlan,
        'absorb-h5': AbsorptionPlan,
    }

"""

aliases = {}
"""Statement identifiers accepted by ``verify --theorem`` (``'1.2'``, ``'cor1.5'``, ...) mapped to their clause"""

plans_loaded = False
"""Used to track whether the plan modules have been imported, so reload_plans can be auto-called."""

log = logging.getLogger(__name__)


def add_plan(plan):
    global plans
    # `plan` is an un-instantiated class extending BasePlan
    for clause in plan.provides:
        if clause in plans:
            log.warning('Clause %s is provided by both %s and %s, keeping %s',
                        clause, plans[clause].__name__, plan.__name__, plans[clause].__name__)
            continue
        plans[clause] = plan
    for clause, (statement_id, _) in plan.statements.items():
        if statement_id and plans.get(clause) is plan:
            aliases.setdefault(statement_id, clause)


def reload_plans():
    """
    Resets `plans` to an empty dict, then loads every module in `settings.VERIFY_PLANS` into the dictionary `plans`
    using `settings.VERIFY_PLANS_BASE` as the base module path to load from
    """
    global plans, aliases, plans_loaded
    plans, aliases = {}, {}
    log.debug('--- Starting reload_plans() ---')
    for name in settings.VERIFY_PLANS:
        try:
            log.debug('Loading verify plan %s', name)
            i = import_module('.'.join([settings.VERIFY_PLANS_BASE, name]))
            add_plan(i.exports['plan'])
        except (ImportError, AttributeError, KeyError):
            log.exception('Something went wrong loading the verify plan %s', name)
            log.error('Skipping this plan...')
    plans_loaded = True
    for clause, plan in plans.items():
        log.debug('Clause %s - Plan: %s', clause, plan.__name__)
    log.debug('--- End of reload_plans() ---')


def list_clauses() -> List[str]:
    if not plans_loaded: reload_plans()
    return sorted(plans)


def has_plan(clause: str) -> bool:
    """Helper function - is there a plan verifying this clause?"""
    if not plans_loaded: reload_plans()
    return clause in plans


def list_statements() -> List[str]:
    if not plans_loaded: reload_plans()
    return sorted(aliases)


def resolve_clause(name: str) -> str:
    """
    The clause identifier for ``name``, which is either a clause (``h7-deg9``) or a statement id (``1.4.3``).

    :raises UnknownPlanError: ``name`` is neither
    """
    if not plans_loaded: reload_plans()
    if name in plans:
        return name
    if name in aliases:
        return aliases[name]
    raise UnknownPlanError(
        f'Unknown clause {name!r}. Known clauses: {", ".join(sorted(plans))}; '
        f'known statements: {", ".join(sorted(aliases))}'
    )


def get_plan(clause: str, **kwargs) -> BasePlan:
    """
    Instantiate the plan verifying ``clause`` (a clause or statement id), passing ``kwargs`` (trials, seed,
    coefficient_bound) through.

        >>> report = get_plan('h5-deg6', trials=100, seed=42).run()
        >>> report.summary
        '100/100 residuals match Δ³ formula'

    :raises UnknownPlanError: no loaded plan provides ``clause``
    """
    clause = resolve_clause(clause)
    return plans[clause](clause=clause, **kwargs)
