"""
Exact Gaussian-rational mode
============================

States with rational complex amplitudes are kept exact, so a matrix is
singular only when its determinant is literally zero and no tolerance
comes into play.
"""

from fractions import Fraction

from sloccrank import GaussianRational as G
from sloccrank import LocalOperator, PureState, SloccMap, apply_slocc, coefficient_matrix, rank_wrt_qubit
from sloccrank.verify import exact_spot_checks, lemma1_check

# Amplitudes may be ints, Fractions or GaussianRationals.
s = PureState([1, 0, 0, Fraction(1, 3), 0, G(0, 2), G("1/2"), 0])
print(s.exact, s.norm_sq)

M = coefficient_matrix(s, 1)
print(M.entries, "det =", M.det)
print(rank_wrt_qubit(s, 1))

# An integer operator keeps everything exact, so the lemma check is
# exactly zero instead of just small.
A = LocalOperator([[1, G(0, 1)], [2, 3]])
print(lemma1_check(s, A))

m = SloccMap([A, [[2, 1], [1, 1]], [[1, 0], [G(1, 1), 1]]])
print(apply_slocc(s, m).amplitudes)

# Gaussian-integer operators on random Gaussian-integer states also
# give exactly zero.
print(exact_spot_checks(count=3, n_list=(3, 5)))
