"""
The Dicke rank ladder
=====================

|l,n> is the equal superposition of all n-bit strings with l ones.
For odd n only the two middle excitations, l = (n-1)/2 and (n+1)/2,
have nonzero rank, and it is 1 for every qubit.
"""

from sloccrank import compute_tpq, dicke, ranks

for n in (3, 5, 7):
    row = []
    for l in range(1, n):
        r = {x.value for x in ranks(dicke(l, n))}
        assert len(r) == 1  # symmetric states: same rank wrt every qubit
        row.append(r.pop())
    print(f"n={n}: ranks for l=1..{n - 1}:", row)

# Why rank 1: for the middle Dicke state only one of P, Q survives and T
# vanishes, so the matrix is diag(P, 0) or diag(0, Q).
n = 5
for l in (2, 3):
    t = compute_tpq(dicke(l, n))
    print(f"|{l},{n}>", "T =", t.T, "P =", t.P, "Q =", t.Q)

# W = |1,n> has rank 0 once n >= 5, same as the product state |0...0>.
print([x.value for x in ranks(dicke(1, 5))])
