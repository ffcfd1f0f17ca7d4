"""The charge-weighted rank-1 sum and the weight-5 modular form it produces."""

from hilbfock.exactalg import format_series
from hilbfock.nekrasov import blend_identity_sweep, dual_partition, modular_example_check

count, failures = blend_identity_sweep(8)
print(f"blending identity on {count} triples, failures: {failures}")

z = dual_partition(2, 3, 21)
print("\nZ_2(3, q) =", format_series(z))

rep = modular_example_check(6)
print("\nafter the eta correction (net q-prefactor", rep.prefactor, "):")
print("  computed:", format_series(rep.computed))
print("  expected:", format_series(rep.expected))
print("  agree on orders", rep.matched)
