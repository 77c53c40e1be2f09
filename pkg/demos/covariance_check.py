"""
Checking SLOCC covariance numerically
=====================================

Under psi = (A_1 x ... x A_n) psi', the matrix wrt qubit i transforms as
M(psi) = A_i M(psi') A_i^T times the product of det A_j over j != i.
Ranks therefore cannot change. We try it on random inputs, then run the
seeded suite.
"""

import numpy as np

from sloccrank import apply_slocc, covariance_residual, det_relation_residual, ranks
from sloccrank.verify import random_slocc_map, random_state, run_covariance_suite

rng = np.random.default_rng(5)
psi_prime = random_state(rng, 5)
slocc = random_slocc_map(rng, 5)  # |det A| >= 0.1, condition number <= 20
psi = apply_slocc(psi_prime, slocc)

for i in range(1, 6):
    print(i, covariance_residual(psi_prime, slocc, i), det_relation_residual(psi_prime, slocc, i))

# Generic states have full rank everywhere, before and after.
print([r.value for r in ranks(psi_prime)], [r.value for r in ranks(psi)])

# Dropping the det factor breaks the identity badly.
print("corrupted:", covariance_residual(psi_prime, slocc, 2, corrupt=True))

# Every trial can be replayed from (seed, n, trial index).
report = run_covariance_suite(50, (3, 5, 7), seed=42)
print(report.to_dict())
assert report.passed()
