"""Rank invariants and SLOCC family classification for odd-n-qubit pure states.

Each qubit ``i`` of an odd-``n`` state carries a symmetric 2x2 matrix
``M^(i)`` of quadratic invariants. Its rank (0, 1 or 2) is unchanged by
invertible local operators, so the ranks over qubits ``1..k`` sort states
into ``3**k`` families.

>>> from sloccrank import ghz, w, family_signature, ranks
>>> family_signature(ghz(5), 3).label
'F[2,2,2]^(1,2,3)'
>>> [r.value for r in ranks(w(3))]
[1, 1, 1]
"""
__version__ = "0.1.0"

from .gaussian import GaussianRational
from .state import (
    LocalOperator,
    PureState,
    QubitIndexError,
    SloccMap,
    StateError,
    apply_local_operator,
    apply_slocc,
    parity,
    swap_qubits,
)
from .named import (
    basis,
    dicke,
    gen_named,
    ghz,
    phi,
    product_state,
    table5_rep,
    three_qubit_class,
    w,
    zero,
)
from .invariants import (
    CoefficientMatrix,
    QuantityTriple,
    Rank,
    ToleranceConfig,
    coefficient_matrix,
    compute_tpq,
    compute_tpq_alt,
    matrix_rank,
    rank_wrt_qubit,
    ranks,
    tangle_proxy,
)
from .classify import (
    EntanglementVerdict,
    FamilySignature,
    entanglement_verdict,
    family_label,
    family_signature,
    reproduce_table,
    same_family,
)
from .verify import (
    CovarianceReport,
    covariance_residual,
    det_relation_residual,
    lemma1_check,
    lemma2_check,
    random_local_operator,
    run_covariance_suite,
)
from .io import read_state, write_state
