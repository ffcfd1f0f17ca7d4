"""Walk through one matrix element of the Chern-class vertex operator.

Run with ``python demos/hook_identity.py``.
"""

from hilbfock.partitions import partitions_up_to
from hilbfock.vertex import hook_side, identity_sweep, w_matrix_element, worked_example

ex = worked_example()
print("constant-sign half vertex on J_(2):")
print("  ", ex["left"])
print("alternating half vertex on J_(1,1):")
print("  ", ex["right"])
print("pairing:", ex["matrix_element"])
print("hook product:", hook_side((2,), (1, 1)))

# the same equality for every pair of small partitions
count, failures = identity_sweep(3)
print(f"\n{count} pairs with |mu|, |lam| <= 3, failures: {failures}")

print("\nsome matrix elements:")
for mu in partitions_up_to(2):
    for lam in partitions_up_to(1):
        print(f"  <{mu}|W|{lam}> = {w_matrix_element(mu, lam)}")
