"""
This file contains settings that are specific to the Germ Classifier, and do not affect the core Django
framework.

User specifiable environment variables:

- ``DEFAULT_COEFFICIENT_BOUND`` - Random tails and kernel weights are drawn from ``[-B, B]``. **Default:** ``9``

- ``DEFAULT_TRIALS`` / ``DEFAULT_SEED`` - Used by ``verify`` when ``--trials`` / ``--seed`` aren't passed.
  **Default:** ``100`` / ``42``

- ``APPROX_TOLERANCE`` - Largest coefficient error accepted from a floating point (approx mode) normalization or
  stabilizer check. **Default:** ``1e-9``

- ``CONFORMAL_TOLERANCE`` - Relative tolerance used to flag an approx mode linear map as conformal.
  **Default:** ``1e-12``

- ``DET_TOLERANCE`` - Approx mode linear maps with ``|det|`` at or below this are rejected as singular.
  **Default:** ``1e-9``

- ``ROOT_DENOMINATOR_LIMIT`` - Largest denominator tried when promoting a floating point k-th root to an exact
  rational one. **Default:** ``1000000``

- ``INCLUSION_SEARCH_LIMIT`` - Highest degree searched for the minimal degree where the Jacobian inclusion
  holds. **Default:** ``16``

- ``VERIFY_WORKERS`` - Run verify trials in a process pool of this size. ``1`` runs them in-process.
  **Default:** ``1``

- ``VERIFY_PLANS`` - A comma separated list of verify plan modules to load.
  **Default:** Residuals,Absorption,Crosscheck,Uniqueness,Determinacy

- ``VERIFY_PLANS_BASE`` - If your verify plans are not located in ``germs.verify`` then you may change this
  to point to the base module where they are located.
"""
from getenv import env
from privex.helpers import env_csv

#########
# Random sampling
####

DEFAULT_COEFFICIENT_BOUND = int(env('DEFAULT_COEFFICIENT_BOUND', 9))
DEFAULT_TRIALS = int(env('DEFAULT_TRIALS', 100))
DEFAULT_SEED = int(env('DEFAULT_SEED', 42))

#########
# Approx mode tolerances
####

APPROX_TOLERANCE = float(env('APPROX_TOLERANCE', 1e-9))
CONFORMAL_TOLERANCE = float(env('CONFORMAL_TOLERANCE', 1e-12))
DET_TOLERANCE = float(env('DET_TOLERANCE', 1e-9))
ROOT_DENOMINATOR_LIMIT = int(env('ROOT_DENOMINATOR_LIMIT', 10 ** 6))

INCLUSION_SEARCH_LIMIT = int(env('INCLUSION_SEARCH_LIMIT', 16))
"""Highest degree :func:`germs.determinacy.minimal_inclusion_degree` searches up to"""

#########
# Verify plans
####

VERIFY_WORKERS = max(1, int(env('VERIFY_WORKERS', 1)))

VERIFY_PLANS_BASE = env('VERIFY_PLANS_BASE', 'germs.verify')
"""Load verify plans from this absolute module path"""

VERIFY_PLANS = env_csv('VERIFY_PLANS', [
    'Residuals',
    'Absorption',
    'Crosscheck',
    'Uniqueness',
    'Determinacy',
])
"""
Specify in the env var ``VERIFY_PLANS`` a comma separated list of plan modules under
:py:attr:`.VERIFY_PLANS_BASE` to load. If not specified, the default list will be used.
"""
