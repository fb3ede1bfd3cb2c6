"""
**Hand table crosscheck plan**

Composes ``leading + rho`` with the hand-written coordinate change for each clause and with the solver's, and
compares the degree ``t`` jets. Only ``crosscheck-h5-deg6`` treats a disagreement as a counterexample; the other
tables are known to carry misprints, so their disagreements are collected into a discrepancy report instead.

"""
from germs.verify.Crosscheck.CrosscheckPlan import CrosscheckPlan

exports = {
    "plan": CrosscheckPlan
}
