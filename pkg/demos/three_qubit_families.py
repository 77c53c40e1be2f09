"""
Sorting the six three-qubit classes by rank
===========================================

Each of the six SLOCC classes of three qubits gets a rank vector.
Ranks with respect to one qubit give a coarse partition; all three
together separate every class.
"""

from sloccrank import coefficient_matrix, family_signature, three_qubit_class
from sloccrank.named import THREE_QUBIT_CLASSES

# The coefficient matrix of GHZ wrt qubit 1 is the off-diagonal
# [[P, T], [T, Q]] = [[0, 1], [1, 0]], so it has full rank.
print(coefficient_matrix(three_qubit_class("GHZ"), 1).entries)

# W has only P nonzero.
print(coefficient_matrix(three_qubit_class("W"), 1).entries)

# One qubit is not enough: wrt qubit 1, A-BC looks like W.
for name in THREE_QUBIT_CLASSES:
    print(f"{name:6s}", family_signature(three_qubit_class(name), qubits=[1]).label)

# Qubits 1 and 2 leave C-AB and A-B-C together.
for name in THREE_QUBIT_CLASSES:
    print(f"{name:6s}", family_signature(three_qubit_class(name), 2).label)

# With all three qubits every class sits in its own family.
labels = {name: family_signature(three_qubit_class(name), 3).label for name in THREE_QUBIT_CLASSES}
for name, label in labels.items():
    print(f"{name:6s}", label)
assert len(set(labels.values())) == 6
