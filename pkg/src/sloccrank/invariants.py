"""Quadratic invariants T, P, Q, the matrices M^(i) and their ranks.

For a state with amplitudes ``a`` on ``n`` qubits (``h = 2**(n-1)``,
``q = 2**(n-2)``, ``s(i) = (-1)**parity(i)``)::

    T = sum_{i<h} s(i) a[i] a[2**n-1-i]
    P = 2 sum_{i<q} s(i) a[2i] a[h-1-2i]
    Q = 2 sum_{i<q} s(i) a[h+2i] a[2**n-1-2i]

and ``M = ((P, T), (T, Q))``. ``M^(i)`` is ``M`` of the state with qubits
1 and ``i`` transposed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .gaussian import GaussianRational, to_gaussian
from .state import PureState, _check_qubit, parity, parity_signs, swap_qubits

__all__ = [
    "ToleranceConfig",
    "DEFAULT_TOL",
    "QuantityTriple",
    "CoefficientMatrix",
    "Rank",
    "compute_tpq",
    "compute_tpq_alt",
    "coefficient_matrix",
    "singular_values_2x2",
    "matrix_rank",
    "rank_wrt_qubit",
    "ranks",
    "tangle_proxy",
]


@dataclass(frozen=True)
class ToleranceConfig:
    """Float-mode thresholds.

    ``rank_epsilon`` is an absolute cutoff on the singular values of
    ``M^(i)`` computed for the unit-norm state; ``residual_epsilon`` bounds
    relative residuals in the verification harness.
    """

    rank_epsilon: float = 1e-10
    residual_epsilon: float = 1e-8

    def __post_init__(self):
        if not (self.rank_epsilon > 0 and self.residual_epsilon > 0):
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True)
class QuantityTriple:
    T: complex | GaussianRational
    P: complex | GaussianRational
    Q: complex | GaussianRational

    def __iter__(self):
        return iter((self.T, self.P, self.Q))

    @property
    def exact(self) -> bool:
        return isinstance(self.T, GaussianRational)

    def to_complex(self) -> tuple[complex, complex, complex]:
        return complex(self.T), complex(self.P), complex(self.Q)


@dataclass(frozen=True)
class CoefficientMatrix:
    """Symmetric matrix ``((P, T), (T, Q))`` for one qubit.

    ``norm_sq`` is the squared norm of the state it came from; float-mode
    rank decisions divide by it so the threshold is scale-free.
    """

    P: complex | GaussianRational
    T: complex | GaussianRational
    Q: complex | GaussianRational
    qubit: int = 1
    norm_sq: float | Fraction = 1.0

    @property
    def exact(self) -> bool:
        return all(isinstance(x, GaussianRational) for x in (self.P, self.T, self.Q))

    @property
    def entries(self) -> np.ndarray:
        dtype = object if self.exact else np.complex128
        return np.array([[self.P, self.T], [self.T, self.Q]], dtype=dtype)

    @property
    def det(self):
        return self.P * self.Q - self.T * self.T

    def is_zero(self) -> bool:
        return not any(bool(x) for x in (self.P, self.T, self.Q))


@dataclass(frozen=True)
class Rank:
    """Rank of ``M^(i)``. ``boundary`` marks a singular value within a
    decade of the float threshold."""

    value: int
    boundary: bool = False
    singular_values: tuple[float, float] | None = field(default=None, compare=False)

    def __int__(self) -> int:
        return self.value

    __index__ = __int__


def _finish_triple(T, P, Q, exact: bool) -> QuantityTriple:
    if exact:
        return QuantityTriple(to_gaussian(T), to_gaussian(P), to_gaussian(Q))
    return QuantityTriple(complex(T), complex(P), complex(Q))


def compute_tpq(state: PureState) -> QuantityTriple:
    """T, P, Q of ``state``; exact in exact mode."""
    a = state.amplitudes
    h = 1 << (state.n - 1)
    q = h >> 1
    s_h = parity_signs(h)
    s_q = s_h[:q]
    T = np.sum(s_h * a[:h] * a[::-1][:h])
    P = 2 * np.sum(s_q * a[0:h:2] * a[h - 1 :: -2])
    Q = 2 * np.sum(s_q * a[h::2] * a[: h - 1 : -2])
    return _finish_triple(T, P, Q, state.exact)


def compute_tpq_alt(state: PureState) -> QuantityTriple:
    """T, P, Q from the full half-range rewritten sums.

    ``T = sum_{i<h} s(i) a[h+i] a[h-1-i]``,
    ``P = sum_{i<h} s(i) a[i] a[h-1-i]``,
    ``Q = sum_{i<h} s(i) a[h+i] a[2**n-1-i]``.
    Plain loops on purpose: this is the cross-check for :func:`compute_tpq`.
    """
    a = state.amplitudes
    dim = state.dim
    h = dim >> 1
    T = P = Q = 0
    for i in range(h):
        s = -1 if parity(i) else 1
        T = T + s * (a[h + i] * a[h - 1 - i])
        P = P + s * (a[i] * a[h - 1 - i])
        Q = Q + s * (a[h + i] * a[dim - 1 - i])
    return _finish_triple(T, P, Q, state.exact)


def coefficient_matrix(state: PureState, i: int = 1) -> CoefficientMatrix:
    """``M^(i)``: the triple of the state with qubits 1 and ``i`` swapped."""
    _check_qubit(state.n, i)
    t = compute_tpq(swap_qubits(state, 1, i))
    return CoefficientMatrix(P=t.P, T=t.T, Q=t.Q, qubit=i, norm_sq=state.norm_sq)


def singular_values_2x2(P: complex, T: complex, Q: complex) -> tuple[float, float]:
    """Closed-form singular values ``(s_max, s_min)`` of ``((P, T), (T, Q))``."""
    scale = max(abs(P), abs(T), abs(Q))
    if scale == 0 or not math.isfinite(scale):
        return scale, scale
    # unit scale keeps the squares below from under/overflowing
    P, T, Q = P / scale, T / scale, Q / scale
    # largest eigenvalue of M^H M; only nonnegative terms are added
    a, c = abs(P) ** 2, abs(Q) ** 2
    off = abs(P.conjugate() * T + T.conjugate() * Q)
    t2 = abs(T) ** 2
    s_max = math.sqrt((a + c) / 2 + t2 + math.hypot((a - c) / 2, off))
    s_min = abs(P * Q - T * T) / s_max
    return scale * s_max, scale * min(s_min, s_max)


def _as_matrix(M) -> CoefficientMatrix:
    if isinstance(M, CoefficientMatrix):
        return M
    arr = np.asarray(M, dtype=object)
    if arr.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    if arr[0, 1] != arr[1, 0]:
        raise ValueError("coefficient matrices are symmetric")
    exact = all(
        isinstance(x, (int, Fraction, GaussianRational)) and not isinstance(x, bool)
        for x in arr.ravel()
    )
    conv = to_gaussian if exact else complex
    return CoefficientMatrix(
        P=conv(arr[0, 0]), T=conv(arr[0, 1]), Q=conv(arr[1, 1]),
        norm_sq=Fraction(1) if exact else 1.0,
    )


def matrix_rank(M, tol: ToleranceConfig = DEFAULT_TOL) -> Rank:
    """Rank of a coefficient matrix.

    Exact matrices use the zero/determinant test. Float matrices are
    divided by the state's squared norm and their singular values counted
    against ``tol.rank_epsilon``.
    """
    M = _as_matrix(M)
    if M.exact:
        if M.is_zero():
            return Rank(0)
        return Rank(2 if M.det else 1)
    scale = float(M.norm_sq)
    P, T, Q = (complex(x) / scale for x in (M.P, M.T, M.Q))
    svals = singular_values_2x2(P, T, Q)
    eps = tol.rank_epsilon
    value = sum(s > eps for s in svals)
    boundary = any(0.1 * eps <= s <= 10 * eps for s in svals)
    return Rank(value, boundary, svals)


def rank_wrt_qubit(state: PureState, i: int, tol: ToleranceConfig = DEFAULT_TOL) -> Rank:
    return matrix_rank(coefficient_matrix(state, i), tol)


def ranks(state: PureState, qubits=None, tol: ToleranceConfig = DEFAULT_TOL) -> list[Rank]:
    """Ranks with respect to each qubit in ``qubits`` (default all)."""
    qubits = range(1, state.n + 1) if qubits is None else qubits
    return [rank_wrt_qubit(state, i, tol) for i in qubits]


def tangle_proxy(state: PureState, i: int = 1) -> float:
    """``|det M^(i)|`` of the unit-norm rescaled state, without any
    tangle normalization constant."""
    M = coefficient_matrix(state, i)
    if M.exact:
        return math.sqrt(M.det.abs2() / (M.norm_sq ** 4))
    return abs(complex(M.det)) / M.norm_sq ** 2
