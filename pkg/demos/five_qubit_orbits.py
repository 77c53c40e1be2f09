"""
Five qubits: nine families and four orbits
==========================================

Ranks wrt qubits 1 and 2 split odd-n states into nine families.
Here we check one representative per family, then use three ranks to
show that four well-known five-qubit states are in different orbits.
"""

from sloccrank import ToleranceConfig, family_signature, phi, reproduce_table, table5_rep
from sloccrank.named import TABLE5_FAMILIES

# Exact representatives, one per family.
for fam in TABLE5_FAMILIES:
    print(family_signature(table5_rep(*fam), 2).label)

# Normalizing brings in square roots, so those states are floats.
# A singular value below 1e-10 (relative to the squared norm) counts as zero.
tol = ToleranceConfig(rank_epsilon=1e-10)
s = table5_rep(1, 1, normalized=True)
print(s.exact, family_signature(s, 2, tol=tol).label)

# The same check, packaged as a table report.
rep = reproduce_table(5)
print(f"{rep.n_passed}/{len(rep.rows)} rows pass")

# Phi_1 .. Phi_4 land in four different families wrt qubits 1, 2, 3,
# so no SLOCC map connects any two of them.
for k in range(1, 5):
    sig = family_signature(phi(k), 3, tol=tol)
    print(f"Phi{k}", sig.label, "(near threshold)" if sig.flagged else "")
