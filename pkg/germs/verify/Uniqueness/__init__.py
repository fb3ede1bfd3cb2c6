"""
**Uniqueness plan**

Verifies that ``f5 + c*x^6`` and ``f5 + c'*x^6`` are right-equivalent exactly when ``c == c'``, by checking that
the ``Δ³`` residual is unchanged by both stabilizer generators of ``f5``.

Clause: ``uniqueness-h5``

"""
from germs.verify.Uniqueness.UniquenessPlan import UniquenessPlan

exports = {
    "plan": UniquenessPlan
}
