"""Fit the two-insertion correlation series F(1,3) in E2, E4, E6.

The localization sum is divided by the rank-1 partition function and the
result is matched against all monomials of weight at most 8.
"""

from hilbfock.correlators import localization_F, quasimodular_report
from hilbfock.exactalg import format_series
from hilbfock.qseries import quasimodular_basis

print("F(1,3) =", format_series(localization_F((1, 3), 4)))

order = len(quasimodular_basis(8)) + 5
rep = quasimodular_report((1, 3), order, 8)
print(f"\nfit solved from {rep.fit.solve_orders} coefficients, checked on {rep.fit.verified_orders} more")
for el, c in rep.fit.coefficients.items():
    print(f"  {el.label():>8}: {c}")
print("largest m-degree:", rep.worst_degree, "bound:", rep.spec.m_degree_bound)
