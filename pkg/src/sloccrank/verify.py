"""Randomized checks of the SLOCC covariance of M^(i).

If ``psi = (A1 (x) ... (x) An) psi'`` then::

    M^(i)(psi) = A_i M^(i)(psi') A_i^T * prod_{j != i} det(A_j)
    det M^(i)(psi) = det M^(i)(psi') * (prod_j det(A_j))**2

Operator ``A`` on qubit 1 acts on the triple by the closed forms of
:func:`lemma1_closed_form`; on any other qubit it multiplies the triple by
``det(A)``.

Residuals are relative to the magnitude of the left-hand side. When that
magnitude is below ``rank_epsilon`` in units of the state's squared norm
(the same scale the rank threshold uses) the residual is reported in those
units instead, so rank-deficient states do not produce 0/0 noise.

Every trial draws from its own ``SeedSequence(seed, spawn_key=(n, t))``
stream, so results do not depend on trial order.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import named
from .gaussian import GaussianRational
from .invariants import (
    DEFAULT_TOL,
    QuantityTriple,
    ToleranceConfig,
    coefficient_matrix,
    compute_tpq,
    compute_tpq_alt,
    matrix_rank,
)
from .state import (
    LocalOperator,
    PureState,
    QubitIndexError,
    SloccMap,
    StateError,
    _check_qubit,
    apply_local_operator,
    apply_slocc,
)

__all__ = [
    "MIN_ABS_DET",
    "MAX_COND",
    "trial_rng",
    "random_local_operator",
    "random_slocc_map",
    "random_state",
    "random_product_state",
    "canonical_states",
    "covariance_residual",
    "det_relation_residual",
    "lemma1_closed_form",
    "lemma1_check",
    "lemma2_check",
    "CovarianceReport",
    "LemmaReport",
    "AltFormReport",
    "run_covariance_suite",
    "run_lemma_suite",
    "run_alt_form_suite",
    "exact_spot_checks",
]

MIN_ABS_DET = 0.1
MAX_COND = 20.0
MAX_REDRAWS = 1000


def trial_rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(key)))


def random_local_operator(rng: np.random.Generator) -> LocalOperator:
    """Entries with real and imaginary parts uniform in [-1, 1], redrawn
    until ``|det| >= 0.1`` and the condition number is at most 20."""
    for _ in range(MAX_REDRAWS):
        m = rng.uniform(-1, 1, (2, 2)) + 1j * rng.uniform(-1, 1, (2, 2))
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(det) >= MIN_ABS_DET and np.linalg.cond(m) <= MAX_COND:
            return LocalOperator(m, exact=False)
    raise RuntimeError(f"no well-conditioned operator after {MAX_REDRAWS} draws")


def random_slocc_map(rng: np.random.Generator, n: int) -> SloccMap:
    return SloccMap([random_local_operator(rng) for _ in range(n)])


def random_state(rng: np.random.Generator, n: int) -> PureState:
    """Unnormalized state, real and imaginary parts uniform in [-1, 1]."""
    dim = 1 << n
    return PureState(rng.uniform(-1, 1, dim) + 1j * rng.uniform(-1, 1, dim), exact=False)


def random_product_state(rng: np.random.Generator, parts: Sequence[Sequence[int]]) -> PureState:
    """Product of independent random factors, one per qubit group in ``parts``."""
    factors = []
    for qubits in parts:
        d = 1 << len(qubits)
        factors.append((qubits, rng.uniform(-1, 1, d) + 1j * rng.uniform(-1, 1, d)))
    return named.product_state(factors)


def canonical_states(n: int) -> list[tuple[str, PureState]]:
    """Named states available for ``n``, used alongside random ones."""
    out = [("GHZ", named.ghz(n)), ("zero", named.zero(n))]
    out += [(f"Dicke({l})", named.dicke(l, n)) for l in range(1, n)]
    if n == 3:
        out += [(c, named.three_qubit_class(c)) for c in ("A-BC", "B-AC", "C-AB")]
    if n == 5:
        out += [(f"Phi{k}", named.phi(k)) for k in range(1, 5)]
        out += [(f"table5:{a}{b}", named.table5_rep(a, b)) for a, b in named.TABLE5_FAMILIES]
    return out


def _mag(x) -> float:
    return float(abs(x))


def _scaled(diff: float, ref: float, unit: float, eps: float) -> float:
    if diff == 0:
        return 0.0
    if ref < eps * unit:
        return diff / unit
    return diff / ref


def _prod(values: Iterable):
    out = 1
    for v in values:
        out = out * v
    return out


def _m_entries(M) -> np.ndarray:
    return np.array([[M.P, M.T], [M.T, M.Q]], dtype=object)


def _covariance_rhs(M_prime, A: LocalOperator, factor) -> np.ndarray:
    a = A.matrix.astype(object)
    return a.dot(_m_entries(M_prime)).dot(a.T) * factor


def _matrix_residual(M_lhs, rhs: np.ndarray, unit, eps: float) -> float:
    lhs = _m_entries(M_lhs)
    diff = max(_mag(x) for x in (lhs - rhs).ravel())
    ref = max(_mag(x) for x in lhs.ravel())
    return _scaled(diff, ref, float(unit), eps)


def _check_map(state: PureState, slocc: SloccMap) -> None:
    if len(slocc) != state.n:
        raise StateError(f"map has {len(slocc)} operators, state has {state.n} qubits")


def covariance_residual(
    state: PureState,
    slocc: SloccMap,
    i: int,
    tol: ToleranceConfig = DEFAULT_TOL,
    corrupt: bool = False,
) -> float:
    """Residual of ``M^(i)(psi) = A_i M^(i)(psi') A_i^T prod_{j!=i} det A_j``
    with ``psi' = state`` and ``psi = slocc(state)``.

    ``corrupt=True`` drops the determinant factor; it exists so the harness
    can prove it detects a wrong formula.
    """
    _check_map(state, slocc)
    _check_qubit(state.n, i)
    psi = apply_slocc(state, slocc)
    dets = slocc.dets()
    factor = 1 if corrupt else _prod(d for j, d in enumerate(dets, 1) if j != i)
    rhs = _covariance_rhs(coefficient_matrix(state, i), slocc[i], factor)
    return _matrix_residual(coefficient_matrix(psi, i), rhs, psi.norm_sq, tol.rank_epsilon)


def det_relation_residual(
    state: PureState, slocc: SloccMap, i: int, tol: ToleranceConfig = DEFAULT_TOL
) -> float:
    """Residual of ``det M^(i)(psi) = det M^(i)(psi') (prod_j det A_j)**2``."""
    _check_map(state, slocc)
    _check_qubit(state.n, i)
    psi = apply_slocc(state, slocc)
    total = _prod(slocc.dets())
    lhs = coefficient_matrix(psi, i).det
    rhs = coefficient_matrix(state, i).det * total * total
    ref = max(_mag(lhs), _mag(rhs))
    return _scaled(_mag(lhs - rhs), ref, float(psi.norm_sq) ** 2, tol.rank_epsilon)


def lemma1_closed_form(t: QuantityTriple, A: LocalOperator) -> QuantityTriple:
    """Triple after applying ``A = ((a1, a2), (a3, a4))`` on qubit 1."""
    a1, a2, a3, a4 = A.matrix.ravel()
    if not (t.exact and A.exact):
        a1, a2, a3, a4 = (complex(x) for x in (a1, a2, a3, a4))
        T, P, Q = t.to_complex()
    else:
        T, P, Q = t
    return QuantityTriple(
        T=P * a1 * a3 + T * (a2 * a3 + a1 * a4) + Q * a2 * a4,
        P=P * a1 * a1 + 2 * T * a1 * a2 + Q * a2 * a2,
        Q=P * a3 * a3 + 2 * T * a3 * a4 + Q * a4 * a4,
    )


def _triple_residual(direct: QuantityTriple, other: QuantityTriple, unit, eps: float) -> float:
    diff = max(_mag(x - y) for x, y in zip(direct, other))
    ref = max(_mag(x) for x in direct)
    return _scaled(diff, ref, float(unit), eps)


def lemma1_check(state: PureState, A1: LocalOperator, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Discrepancy between the triple of ``A1`` applied on qubit 1 and the
    closed forms in the original triple."""
    psi = apply_local_operator(state, 1, A1)
    closed = lemma1_closed_form(compute_tpq(state), A1)
    return _triple_residual(compute_tpq(psi), closed, psi.norm_sq, tol.rank_epsilon)


def lemma2_check(
    state: PureState, k: int, Ak: LocalOperator, tol: ToleranceConfig = DEFAULT_TOL
) -> float:
    """Discrepancy between the triple of ``Ak`` applied on qubit ``k >= 2``
    and ``det(Ak)`` times the original triple."""
    _check_qubit(state.n, k)
    if k == 1:
        raise QubitIndexError("qubit 1 is covered by lemma1_check")
    psi = apply_local_operator(state, k, Ak)
    t = compute_tpq(state)
    d = Ak.det
    if not (t.exact and Ak.exact):
        d = complex(d)
        t = QuantityTriple(*t.to_complex())
    scaled = QuantityTriple(t.T * d, t.P * d, t.Q * d)
    return _triple_residual(compute_tpq(psi), scaled, psi.norm_sq, tol.rank_epsilon)


@dataclass
class CovarianceReport:
    seed: int
    n_list: list[int] = field(default_factory=list)
    trials: int = 0
    states_checked: int = 0
    max_matrix_residual: float = 0.0
    max_det_residual: float = 0.0
    rank_mismatches: int = 0
    boundary_trials: int = 0
    corrupt: bool = False

    @property
    def boundary_fraction(self) -> float:
        return self.boundary_trials / self.trials if self.trials else 0.0

    def passed(self, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
        return (
            self.max_matrix_residual < tol.residual_epsilon
            and self.max_det_residual < tol.residual_epsilon
            and self.rank_mismatches == 0
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["boundary_fraction"] = self.boundary_fraction
        return d


def _covariance_trial(psi_prime, slocc, tol, corrupt):
    """Max matrix residual, max det residual, mismatches, boundary flag."""
    n = psi_prime.n
    psi = apply_slocc(psi_prime, slocc)
    dets = slocc.dets()
    total = _prod(dets)
    unit = psi.norm_sq
    max_m = max_d = 0.0
    mismatches = 0
    boundary = False
    for i in range(1, n + 1):
        M_prime = coefficient_matrix(psi_prime, i)
        M_psi = coefficient_matrix(psi, i)
        factor = 1 if corrupt else _prod(d for j, d in enumerate(dets, 1) if j != i)
        max_m = max(max_m, _matrix_residual(
            M_psi, _covariance_rhs(M_prime, slocc[i], factor), unit, tol.rank_epsilon))
        lhs, rhs = M_psi.det, M_prime.det * total * total
        max_d = max(max_d, _scaled(
            _mag(lhs - rhs), max(_mag(lhs), _mag(rhs)), unit ** 2, tol.rank_epsilon))
        r_prime, r_psi = matrix_rank(M_prime, tol), matrix_rank(M_psi, tol)
        if r_prime.boundary or r_psi.boundary:
            boundary = True
        elif r_prime.value != r_psi.value:
            mismatches += 1
    return max_m, max_d, mismatches, boundary


def run_covariance_suite(
    trials: int,
    n_list: Sequence[int] = (3, 5),
    seed: int = 0,
    tol: ToleranceConfig = DEFAULT_TOL,
    corrupt: bool = False,
) -> CovarianceReport:
    """Random states and a rotating canonical state, each pushed through a
    random well-conditioned SLOCC map, checked at every qubit.

    A trial whose ranks carry a boundary flag is counted in
    ``boundary_trials`` and its rank comparison is excluded; residuals are
    still aggregated.
    """
    n_list = list(n_list)
    for n in n_list:
        if n < 3 or n % 2 == 0:
            raise StateError(f"n = {n}: only odd n >= 3 is supported")
    report = CovarianceReport(seed=seed, n_list=n_list, corrupt=corrupt)
    for n in n_list:
        canon = [s.to_float() for _, s in canonical_states(n)]
        for t in range(trials):
            rng = trial_rng(seed, n, t)
            slocc = random_slocc_map(rng, n)
            trial_boundary = False
            for psi_prime in (random_state(rng, n), canon[t % len(canon)]):
                m, d, mm, b = _covariance_trial(psi_prime, slocc, tol, corrupt)
                report.max_matrix_residual = max(report.max_matrix_residual, m)
                report.max_det_residual = max(report.max_det_residual, d)
                report.states_checked += 1
                if b:
                    trial_boundary = True
                else:
                    report.rank_mismatches += mm
            report.trials += 1
            report.boundary_trials += trial_boundary
    return report


@dataclass
class LemmaReport:
    seed: int
    n_list: list[int] = field(default_factory=list)
    trials: int = 0
    max_lemma1: float = 0.0
    max_lemma2: float = 0.0

    def passed(self, bound: float) -> bool:
        return self.max_lemma1 < bound and self.max_lemma2 < bound

    def to_dict(self) -> dict:
        return asdict(self)


def run_lemma_suite(
    trials: int,
    n_list: Sequence[int] = (3, 5, 7),
    seed: int = 0,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> LemmaReport:
    """Per trial: one random state, a random operator on qubit 1 and an
    independent random operator on every qubit ``k >= 2``."""
    report = LemmaReport(seed=seed, n_list=list(n_list))
    for n in n_list:
        for t in range(trials):
            rng = trial_rng(seed, 1000 + n, t)
            state = random_state(rng, n)
            report.max_lemma1 = max(report.max_lemma1,
                                    lemma1_check(state, random_local_operator(rng), tol))
            for k in range(2, n + 1):
                report.max_lemma2 = max(report.max_lemma2,
                                        lemma2_check(state, k, random_local_operator(rng), tol))
            report.trials += 1
    return report


@dataclass
class AltFormReport:
    seed: int
    n_list: list[int] = field(default_factory=list)
    random_trials: int = 0
    exact_states: int = 0
    exact_mismatches: int = 0
    max_relative: float = 0.0

    def passed(self, bound: float = 1e-12) -> bool:
        return self.exact_mismatches == 0 and self.max_relative < bound

    def to_dict(self) -> dict:
        return asdict(self)


def run_alt_form_suite(
    trials: int, n_list: Sequence[int] = (3, 5, 7), seed: int = 0
) -> AltFormReport:
    """Compare :func:`compute_tpq` with :func:`compute_tpq_alt`: exactly on
    every exact canonical state, relatively on random float states."""
    report = AltFormReport(seed=seed, n_list=list(n_list))
    for n in n_list:
        for _, s in canonical_states(n):
            if s.exact:
                report.exact_states += 1
                if tuple(compute_tpq(s)) != tuple(compute_tpq_alt(s)):
                    report.exact_mismatches += 1
        for t in range(trials):
            s = random_state(trial_rng(seed, 2000 + n, t), n)
            a, b = compute_tpq(s), compute_tpq_alt(s)
            diff = max(abs(x - y) for x, y in zip(a, b))
            ref = max(abs(x) for x in a)
            report.max_relative = max(report.max_relative, diff / ref)
            report.random_trials += 1
    return report


def _random_integer_operator(rng: np.random.Generator, bound: int = 3) -> LocalOperator:
    while True:
        re = rng.integers(-bound, bound + 1, 4)
        im = rng.integers(-bound, bound + 1, 4)
        entries = [GaussianRational(int(x), int(y)) for x, y in zip(re, im)]
        m = np.array(entries, dtype=object).reshape(2, 2)
        if m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]:
            return LocalOperator(m, exact=True)


def _random_integer_state(rng: np.random.Generator, n: int, bound: int = 3) -> PureState:
    while True:
        re = rng.integers(-bound, bound + 1, 1 << n)
        im = rng.integers(-bound, bound + 1, 1 << n)
        if re.any() or im.any():
            return PureState(
                [GaussianRational(int(x), int(y)) for x, y in zip(re, im)], exact=True
            )


def exact_spot_checks(
    count: int = 10, n_list: Sequence[int] = (3, 5, 7), seed: int = 0
) -> dict[str, float]:
    """Exact-arithmetic replay of every identity with Gaussian-integer
    operators on canonical and random Gaussian-integer states.

    Returns the maximum discrepancy per identity; each must be exactly 0.
    """
    out = {"lemma1": 0.0, "lemma2": 0.0, "covariance": 0.0, "det_relation": 0.0}
    for n in n_list:
        states = [s for _, s in canonical_states(n) if s.exact]
        for t in range(count):
            rng = trial_rng(seed, 3000 + n, t)
            states.append(_random_integer_state(rng, n))
        for t, s in enumerate(states):
            rng = trial_rng(seed, 4000 + n, t)
            out["lemma1"] = max(out["lemma1"], lemma1_check(s, _random_integer_operator(rng)))
            for k in range(2, n + 1):
                out["lemma2"] = max(out["lemma2"],
                                    lemma2_check(s, k, _random_integer_operator(rng)))
            slocc = SloccMap([_random_integer_operator(rng) for _ in range(n)])
            m, d, _, _ = _covariance_trial(s, slocc, DEFAULT_TOL, False)
            out["covariance"] = max(out["covariance"], m)
            out["det_relation"] = max(out["det_relation"], d)
    return out
