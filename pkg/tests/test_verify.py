import numpy as np
import pytest
from hypothesis import given, strategies as st

from sloccrank import (
    LocalOperator,
    QubitIndexError,
    SloccMap,
    StateError,
    compute_tpq,
    covariance_residual,
    det_relation_residual,
    ghz,
    lemma1_check,
    lemma2_check,
    w,
)
from sloccrank.verify import (
    MAX_COND,
    MIN_ABS_DET,
    lemma1_closed_form,
    random_local_operator,
    random_slocc_map,
    random_state,
    run_alt_form_suite,
    run_covariance_suite,
    run_lemma_suite,
    trial_rng,
)

seeds = st.integers(0, 2**32 - 1)


class TestRandomLocalOperator:
    @given(seeds)
    def test_conditioning(self, seed):
        A = random_local_operator(np.random.default_rng(seed))
        assert abs(A.det) >= MIN_ABS_DET
        assert A.cond() <= MAX_COND
        assert not A.exact

    def test_replay(self):
        a = random_local_operator(trial_rng(7, 3, 0))
        b = random_local_operator(trial_rng(7, 3, 0))
        assert a == b
        assert a != random_local_operator(trial_rng(7, 3, 1))

    def test_redraw_cap(self, monkeypatch):
        import sloccrank.verify as v
        monkeypatch.setattr(v, "MIN_ABS_DET", 100.0)
        with pytest.raises(RuntimeError):
            v.random_local_operator(np.random.default_rng(0))


class TestCovarianceResidual:
    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_identity_map(self, i):
        assert covariance_residual(w(3), SloccMap.identity(3), i) == 0
        assert det_relation_residual(w(3), SloccMap.identity(3), i) == 0

    def test_ghz_diag_example(self):
        ops = [LocalOperator.identity()] * 3
        ops[1] = LocalOperator([[2, 0], [0, 1]])
        m = SloccMap(ops)
        assert covariance_residual(ghz(3), m, 1) == 0
        assert det_relation_residual(ghz(3), m, 1) == 0
        # both sides: T scaled by det = 2
        from sloccrank import apply_slocc
        assert compute_tpq(apply_slocc(ghz(3), m)).T == 2

    @given(st.sampled_from([3, 5, 7]), seeds)
    def test_random(self, n, seed):
        rng = np.random.default_rng(seed)
        s, m = random_state(rng, n), random_slocc_map(rng, n)
        for i in range(1, n + 1):
            assert covariance_residual(s, m, i) < 1e-8
            assert det_relation_residual(s, m, i) < 1e-8

    def test_corrupt_formula_detected(self, rng):
        s, m = random_state(rng, 5), random_slocc_map(rng, 5)
        assert covariance_residual(s, m, 2, corrupt=True) > 1e-3

    def test_scaling_one_operator_scales_det_by_c4(self, rng):
        from sloccrank import apply_slocc, coefficient_matrix
        s, m = random_state(rng, 5), random_slocc_map(rng, 5)
        c = 1.7 - 0.4j
        ops = list(m.operators)
        ops[2] = LocalOperator(c * ops[2].matrix)
        m2 = SloccMap(ops)
        for i in range(1, 6):
            d1 = coefficient_matrix(apply_slocc(s, m), i).det
            d2 = coefficient_matrix(apply_slocc(s, m2), i).det
            assert d2 == pytest.approx(c**4 * d1, rel=1e-10)
            assert det_relation_residual(s, m2, i) < 1e-8

    def test_length_mismatch(self):
        with pytest.raises(StateError):
            covariance_residual(ghz(3), SloccMap.identity(5), 1)
        with pytest.raises(StateError):
            det_relation_residual(ghz(3), SloccMap.identity(5), 1)

    def test_exact_rational_map_gives_exact_zero(self):
        m = SloccMap([[[1, 2], [3, 5]], [[2, 1], [1, 1]], [[1, 0], [4, 3]]])
        for s in (w(3), ghz(3)):
            for i in (1, 2, 3):
                assert covariance_residual(s, m, i) == 0.0
                assert det_relation_residual(s, m, i) == 0.0


class TestLemmas:
    def test_lemma1_identity(self):
        assert lemma1_check(w(5), LocalOperator.identity()) == 0

    def test_lemma1_ghz_shear(self):
        A = LocalOperator([[1, 1], [0, 1]])
        closed = lemma1_closed_form(compute_tpq(ghz(3)), A)
        assert (closed.T, closed.P, closed.Q) == (1, 2, 0)
        assert lemma1_check(ghz(3), A) == 0

    def test_lemma2_identity_and_diag(self):
        assert lemma2_check(w(3), 2, LocalOperator.identity()) == 0
        A = LocalOperator([[2, 0], [0, 1]])
        assert lemma2_check(ghz(3), 2, A) == 0

    def test_lemma2_rejects_qubit1(self):
        with pytest.raises(QubitIndexError):
            lemma2_check(ghz(3), 1, LocalOperator.identity())
        with pytest.raises(QubitIndexError):
            lemma2_check(ghz(3), 4, LocalOperator.identity())

    @given(st.sampled_from([3, 5, 7]), seeds)
    def test_random(self, n, seed):
        rng = np.random.default_rng(seed)
        s = random_state(rng, n)
        assert lemma1_check(s, random_local_operator(rng)) < 1e-10
        for k in range(2, n + 1):
            assert lemma2_check(s, k, random_local_operator(rng)) < 1e-10


class TestSuites:
    def test_zero_trials(self):
        r = run_covariance_suite(0, (3, 5), seed=1)
        assert r.trials == 0 and r.max_matrix_residual == 0 and r.max_det_residual == 0
        assert r.passed()

    def test_seed_42_no_mismatches(self):
        r = run_covariance_suite(200, (3, 5), seed=42)
        assert r.rank_mismatches == 0
        assert r.passed()

    def test_replay_identical(self):
        assert run_covariance_suite(15, (3, 5), seed=9) == run_covariance_suite(15, (3, 5), seed=9)
        assert run_lemma_suite(5, (3,), seed=9) == run_lemma_suite(5, (3,), seed=9)

    def test_even_n_rejected(self):
        with pytest.raises(StateError):
            run_covariance_suite(1, (3, 4))

    def test_corrupt_suite_fails(self):
        assert not run_covariance_suite(5, (3,), seed=0, corrupt=True).passed()

    def test_alt_form_suite(self):
        r = run_alt_form_suite(20, (3, 5))
        assert r.exact_states > 0 and r.passed()
