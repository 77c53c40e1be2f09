import itertools

import numpy as np
import pytest
from hypothesis import settings

from sloccrank import PureState

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def kron_oracle(ops, amps):
    """Full 2**n x 2**n Kronecker product applied to the vector, qubit 1
    leftmost. Only for small n."""
    full = np.array([[1.0 + 0j]])
    for op in ops:
        full = np.kron(full, np.asarray(op, dtype=complex))
    return full @ np.asarray(amps, dtype=complex)


def swap_oracle(amps, n, p, q):
    """Qubit transposition through bitstring relabelling."""
    out = np.empty(len(amps), dtype=complex)
    for j in range(len(amps)):
        bits = list(format(j, f"0{n}b"))
        bits[p - 1], bits[q - 1] = bits[q - 1], bits[p - 1]
        out[j] = amps[int("".join(bits), 2)]
    return out


def tpq_oracle(amps, n):
    """T, P, Q summed straight from their index formulas."""
    a = list(amps)
    sign = lambda i: (-1) ** bin(i).count("1")
    T = sum(sign(i) * a[i] * a[2**n - i - 1] for i in range(2 ** (n - 1)))
    P = 2 * sum(sign(i) * a[2 * i] * a[2 ** (n - 1) - 2 * i - 1] for i in range(2 ** (n - 2)))
    Q = 2 * sum(sign(i) * a[2 ** (n - 1) + 2 * i] * a[2**n - 2 * i - 1]
                for i in range(2 ** (n - 2)))
    return T, P, Q


def dicke_oracle(l, n):
    amps = [0] * 2**n
    for bits in set(itertools.permutations("1" * l + "0" * (n - l))):
        amps[int("".join(bits), 2)] = 1
    return amps


def random_amps(rng, n):
    return rng.uniform(-1, 1, 2**n) + 1j * rng.uniform(-1, 1, 2**n)


@pytest.fixture
def rng():
    return np.random.default_rng(20260101)


@pytest.fixture
def random_float_state(rng):
    def make(n):
        return PureState(random_amps(rng, n), exact=False)
    return make
