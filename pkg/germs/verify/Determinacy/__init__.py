"""
**Determinacy plan**

Verifies that the Jacobian inclusion certificates behind the determinacy bounds don't depend on coordinates: for a
random exact invertible linear map ``L`` and a random order ``k`` in 3..7, ``f_k o L`` must pass or fail the
inclusion at the same degrees as ``f_k``, with the same rank.

Clause: ``determinacy``

"""
from germs.verify.Determinacy.DeterminacyPlan import DeterminacyPlan

exports = {
    "plan": DeterminacyPlan
}
