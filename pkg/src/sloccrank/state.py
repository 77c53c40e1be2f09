"""Odd-n-qubit pure states, invertible local operators and bit utilities.

Basis index ``j`` encodes ``|q1 q2 ... qn>`` with qubit 1 as the most
significant bit. Amplitudes are either a ``complex128`` array (float mode)
or an ``object`` array of :class:`GaussianRational` (exact mode).
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .gaussian import GaussianRational, to_gaussian

__all__ = [
    "StateError",
    "QubitIndexError",
    "PureState",
    "LocalOperator",
    "SloccMap",
    "parity",
    "parity_signs",
    "swap_bits",
    "swap_qubits",
    "apply_local_operator",
    "apply_slocc",
]


class StateError(ValueError):
    """Invalid state or operator data (wrong length, even n, zero vector...)."""


class QubitIndexError(ValueError):
    """Qubit index outside ``1..n``."""


def _is_exact_scalar(x) -> bool:
    return isinstance(x, GaussianRational) or (
        isinstance(x, numbers.Rational) and not isinstance(x, bool)
    )


def _as_exact_array(values) -> np.ndarray:
    out = np.empty(len(values), dtype=object)
    for j, v in enumerate(values):
        out[j] = to_gaussian(v)
    return out


def _check_qubit(n: int, k: int, name: str = "qubit") -> None:
    if not isinstance(k, numbers.Integral) or not 1 <= k <= n:
        raise QubitIndexError(f"{name} index {k!r} out of range 1..{n}")


class PureState:
    """Unnormalized pure state of an odd number ``n >= 3`` of qubits.

    ``exact=None`` infers the mode: integer/rational/GaussianRational input
    gives exact mode, anything else is converted to ``complex128``.
    Instances are immutable; the amplitude array is read-only.
    """

    __slots__ = ("n", "amplitudes", "exact")

    def __init__(self, amplitudes, exact: bool | None = None):
        if isinstance(amplitudes, PureState):
            amplitudes = amplitudes.amplitudes
        if isinstance(amplitudes, np.ndarray) and amplitudes.dtype != object:
            arr = amplitudes.ravel()
            if exact is None:
                exact = np.issubdtype(arr.dtype, np.integer)
            values = arr.tolist() if exact else arr
        else:
            values = list(np.ravel(np.asarray(amplitudes, dtype=object)))
            if exact is None:
                exact = all(_is_exact_scalar(v) for v in values)

        if exact:
            amps = _as_exact_array(values)
            nonzero = any(bool(v) for v in amps)
        else:
            amps = np.array(
                [complex(v) for v in values] if isinstance(values, list) else values,
                dtype=np.complex128,
            )
            if not np.all(np.isfinite(amps)):
                raise StateError("amplitudes must be finite")
            nonzero = bool(np.any(amps != 0))

        dim = len(amps)
        n = dim.bit_length() - 1
        if dim < 2 or dim != 1 << n:
            raise StateError(f"amplitude count {dim} is not a power of two")
        if n < 3 or n % 2 == 0:
            raise StateError(
                f"n = {n}: rank invariants are defined for odd n >= 3 qubits only"
            )
        if not nonzero:
            raise StateError("the zero vector is not a state")
        amps.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "exact", bool(exact))

    def __setattr__(self, name, value):
        raise AttributeError("PureState is immutable")

    @classmethod
    def _trusted(cls, n: int, amps: np.ndarray, exact: bool) -> PureState:
        # internal constructor for arrays already known to be valid
        self = object.__new__(cls)
        amps.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "exact", exact)
        return self

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def norm_sq(self):
        """Squared norm; a ``Fraction`` in exact mode."""
        if self.exact:
            return sum((a.abs2() for a in self.amplitudes), Fraction(0))
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def to_float(self) -> PureState:
        if not self.exact:
            return self
        amps = np.array([complex(a) for a in self.amplitudes], dtype=np.complex128)
        return PureState._trusted(self.n, amps, False)

    def scaled(self, c) -> PureState:
        """Return ``c * self``. An exact state stays exact for exact ``c``."""
        if self.exact and _is_exact_scalar(c):
            cg = to_gaussian(c)
            if not cg:
                raise StateError("scaling by zero")
            return PureState._trusted(self.n, cg * self.amplitudes, True)
        if c == 0:
            raise StateError("scaling by zero")
        return PureState._trusted(self.n, complex(c) * self.to_float().amplitudes, False)

    def normalized(self) -> PureState:
        """Unit-norm copy, exact when the norm is rational."""
        nsq = self.norm_sq
        if self.exact:
            p, q = nsq.numerator, nsq.denominator
            rp, rq = math.isqrt(p), math.isqrt(q)
            if rp * rp == p and rq * rq == q:
                return self.scaled(Fraction(rq, rp))
        return self.scaled(1.0 / math.sqrt(nsq))

    def nonzero_indices(self) -> list[int]:
        return [j for j, a in enumerate(self.amplitudes) if a != 0]

    def allclose(self, other: PureState, rtol: float = 1e-12, atol: float = 0.0) -> bool:
        if self.n != other.n:
            return False
        a = self.to_float().amplitudes
        b = other.to_float().amplitudes
        scale = max(np.abs(a).max(), np.abs(b).max())
        return bool(np.abs(a - b).max() <= atol + rtol * scale)

    def __eq__(self, other):
        # exact equality: same mode, same n, identical amplitudes
        if not isinstance(other, PureState):
            return NotImplemented
        if self.n != other.n or self.exact != other.exact:
            return False
        if self.exact:
            return all(x == y for x, y in zip(self.amplitudes, other.amplitudes))
        return bool(np.array_equal(self.amplitudes, other.amplitudes))

    __hash__ = None

    def __repr__(self) -> str:
        mode = "exact" if self.exact else "float"
        terms = []
        for j in self.nonzero_indices()[:8]:
            terms.append(f"{self.amplitudes[j]}|{j:0{self.n}b}>")
        more = " + ..." if len(self.nonzero_indices()) > 8 else ""
        return f"PureState(n={self.n}, {mode}: {' + '.join(terms)}{more})"


class LocalOperator:
    """Invertible 2x2 matrix ``((a1, a2), (a3, a4))`` acting on one qubit."""

    __slots__ = ("matrix", "exact")

    def __init__(self, entries, exact: bool | None = None):
        flat = list(np.ravel(np.asarray(entries, dtype=object)))
        if len(flat) != 4:
            raise StateError("a local operator has exactly four entries")
        if exact is None:
            exact = all(_is_exact_scalar(v) for v in flat)
        if exact:
            m = _as_exact_array(flat).reshape(2, 2)
            if not (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]):
                raise StateError("local operator is singular")
        else:
            m = np.array([complex(v) for v in flat], dtype=np.complex128).reshape(2, 2)
            det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
            scale = float(np.abs(m).max()) ** 2
            if not np.isfinite(det) or abs(det) <= 1e-14 * scale or scale == 0:
                raise StateError("local operator is singular to working precision")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "exact", bool(exact))

    def __setattr__(self, name, value):
        raise AttributeError("LocalOperator is immutable")

    @classmethod
    def identity(cls, exact: bool = True) -> LocalOperator:
        return cls([[1, 0], [0, 1]], exact=exact)

    @property
    def det(self):
        m = self.matrix
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]

    def to_float(self) -> LocalOperator:
        if not self.exact:
            return self
        return LocalOperator([complex(v) for v in self.matrix.ravel()], exact=False)

    def inverse(self) -> LocalOperator:
        m, d = self.matrix, self.det
        return LocalOperator(
            [[m[1, 1] / d, -m[0, 1] / d], [-m[1, 0] / d, m[0, 0] / d]], exact=self.exact
        )

    def cond(self) -> float:
        return float(np.linalg.cond(self.to_float().matrix))

    def __eq__(self, other):
        if not isinstance(other, LocalOperator):
            return NotImplemented
        return all(x == y for x, y in zip(self.matrix.ravel(), other.matrix.ravel()))

    __hash__ = None

    def __repr__(self) -> str:
        m = self.matrix
        return f"LocalOperator([[{m[0, 0]}, {m[0, 1]}], [{m[1, 0]}, {m[1, 1]}]])"


class SloccMap:
    """One local operator per qubit, ``A1 (x) A2 (x) ... (x) An``."""

    __slots__ = ("operators",)

    def __init__(self, operators: Iterable[LocalOperator | Sequence]):
        ops = tuple(
            op if isinstance(op, LocalOperator) else LocalOperator(op) for op in operators
        )
        if not ops:
            raise StateError("empty SLOCC map")
        object.__setattr__(self, "operators", ops)

    def __setattr__(self, name, value):
        raise AttributeError("SloccMap is immutable")

    @classmethod
    def identity(cls, n: int) -> SloccMap:
        return cls([LocalOperator.identity()] * n)

    def __len__(self) -> int:
        return len(self.operators)

    def __getitem__(self, k: int) -> LocalOperator:
        """``map[k]`` is the operator on qubit ``k`` (1-based)."""
        _check_qubit(len(self.operators), k)
        return self.operators[k - 1]

    @property
    def exact(self) -> bool:
        return all(op.exact for op in self.operators)

    def dets(self) -> list:
        return [op.det for op in self.operators]

    def inverse(self) -> SloccMap:
        return SloccMap([op.inverse() for op in self.operators])

    def swapped(self, p: int, q: int) -> SloccMap:
        """The map with the operators on qubits ``p`` and ``q`` exchanged."""
        ops = list(self.operators)
        _check_qubit(len(ops), p)
        _check_qubit(len(ops), q)
        ops[p - 1], ops[q - 1] = ops[q - 1], ops[p - 1]
        return SloccMap(ops)

    def __repr__(self) -> str:
        return f"SloccMap({list(self.operators)!r})"


def parity(i: int) -> int:
    """Parity of the number of 1-bits of ``i``."""
    if i < 0:
        raise ValueError("parity is defined for nonnegative integers")
    return int(i).bit_count() & 1


@lru_cache(maxsize=None)
def parity_signs(m: int) -> np.ndarray:
    """``(-1)**parity(i)`` for ``i = 0 .. m-1`` as a read-only int array."""
    bits = np.bitwise_count(np.arange(m, dtype=np.uint64))
    signs = np.where(bits & 1, -1, 1).astype(np.int64)
    signs.setflags(write=False)
    return signs


def swap_bits(j: int, p: int, q: int, n: int) -> int:
    """Exchange the bits of qubits ``p`` and ``q`` (MSB-first) in index ``j``."""
    sp, sq = n - p, n - q
    if ((j >> sp) ^ (j >> sq)) & 1:
        j ^= (1 << sp) | (1 << sq)
    return j


@lru_cache(maxsize=None)
def _swap_permutation(n: int, p: int, q: int) -> np.ndarray:
    j = np.arange(1 << n, dtype=np.int64)
    sp, sq = n - p, n - q
    differ = ((j >> sp) ^ (j >> sq)) & 1
    perm = j ^ ((differ << sp) | (differ << sq))
    perm.setflags(write=False)
    return perm


def swap_qubits(state: PureState, p: int, q: int) -> PureState:
    """Apply the transposition ``(p, q)`` to the qubits of ``state``."""
    _check_qubit(state.n, p)
    _check_qubit(state.n, q)
    if p == q:
        return state
    perm = _swap_permutation(state.n, p, q)
    return PureState._trusted(state.n, state.amplitudes[perm], state.exact)


def _promote(state: PureState, op: LocalOperator) -> tuple[np.ndarray, np.ndarray, bool]:
    if state.exact and op.exact:
        return state.amplitudes, op.matrix, True
    return state.to_float().amplitudes, op.to_float().matrix, False


def apply_local_operator(state: PureState, k: int, A: LocalOperator) -> PureState:
    """Apply ``A`` on qubit ``k`` and the identity elsewhere.

    Mixing an exact state with a float operator (or vice versa) yields a
    float state.
    """
    _check_qubit(state.n, k)
    if not isinstance(A, LocalOperator):
        A = LocalOperator(A)
    amps, m, exact = _promote(state, A)
    t = amps.reshape(1 << (k - 1), 2, 1 << (state.n - k))
    lo, hi = t[:, 0, :], t[:, 1, :]
    out = np.empty_like(t)
    out[:, 0, :] = m[0, 0] * lo + m[0, 1] * hi
    out[:, 1, :] = m[1, 0] * lo + m[1, 1] * hi
    return PureState._trusted(state.n, out.reshape(-1), exact)


def apply_slocc(state: PureState, slocc: SloccMap) -> PureState:
    """Apply ``A1 (x) ... (x) An`` to ``state``."""
    if len(slocc) != state.n:
        raise StateError(f"map has {len(slocc)} operators, state has {state.n} qubits")
    out = state
    for k, op in enumerate(slocc.operators, start=1):
        out = apply_local_operator(out, k, op)
    return out
