"""Affine sl2 on the charge-0 wedge, once through bilinears and once through vertex operators."""

from hilbfock.wedge import (
    WedgeVector,
    literal_degree_claim,
    matrix_combination,
    principal_agreement,
    sl2hat_principal_action,
)

v = WedgeVector.basis((2, 1))
for gen in [("h", 0), ("h", 1), ("e+f", 0), ("e-f", 0)]:
    print(gen)
    print("  matrix:   ", matrix_combination(gen, v))
    print("  principal:", sl2hat_principal_action(gen, v))

count, failures = principal_agreement(5)
print(f"\n{count} comparisons up to energy 5, failures: {failures}")
print("partitions where 2d + h0 differs from the odd-mode degree:", [str(mu) for mu in literal_degree_claim(3)])
