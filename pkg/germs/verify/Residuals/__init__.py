"""
**Residual formula plan**

Verifies that reducing ``leading + rho`` (``rho`` a random homogeneous polynomial of the clause's degree) leaves
exactly the coefficients the clause's operator formula predicts on the residual monomials, and nothing else.

Clauses: ``h5-deg6``, ``h6-deg7``, ``h6-deg8``, ``h7-deg8``, ``h7-deg9``, ``h7-deg10``

"""
from germs.verify.Residuals.ResidualPlan import ResidualPlan

exports = {
    "plan": ResidualPlan
}
