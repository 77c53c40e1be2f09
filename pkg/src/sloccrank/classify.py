"""Family signatures, entanglement predicates and the reference tables.

A family is labelled by the ranks with respect to a list of qubits, e.g.
``F[2,1]^(1,2)`` is every state with rank 2 wrt qubit 1 and rank 1 wrt
qubit 2. Rank equality over ``1..k`` is necessary for SLOCC equivalence,
not sufficient.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Sequence

from . import named
from .invariants import DEFAULT_TOL, ToleranceConfig, rank_wrt_qubit
from .state import PureState, QubitIndexError, StateError, _check_qubit

__all__ = [
    "FamilySignature",
    "EntanglementVerdict",
    "family_signature",
    "family_label",
    "same_family",
    "entanglement_verdict",
    "TableRow",
    "TableReport",
    "TABLE_IDS",
    "reproduce_table",
]


def family_label(sig: "FamilySignature | Sequence[int]", qubits: Sequence[int] | None = None) -> str:
    """Plain-text family symbol, ``F[r1,...,rk]^(q1,...,qk)``."""
    if isinstance(sig, FamilySignature):
        ranks, qubits = sig.ranks, sig.qubits
    else:
        ranks = tuple(sig)
        qubits = tuple(range(1, len(ranks) + 1)) if qubits is None else tuple(qubits)
    if len(ranks) != len(qubits):
        raise ValueError("ranks and qubits differ in length")
    return f"F[{','.join(map(str, ranks))}]^({','.join(map(str, qubits))})"


@dataclass(frozen=True)
class FamilySignature:
    qubits: tuple[int, ...]
    ranks: tuple[int, ...]
    boundary_flags: tuple[bool, ...] = ()

    def __post_init__(self):
        if not self.boundary_flags:
            object.__setattr__(self, "boundary_flags", (False,) * len(self.ranks))
        if not len(self.qubits) == len(self.ranks) == len(self.boundary_flags):
            raise ValueError("signature fields differ in length")
        if any(r not in (0, 1, 2) for r in self.ranks):
            raise ValueError(f"ranks must be 0, 1 or 2: {self.ranks}")

    @property
    def flagged(self) -> bool:
        return any(self.boundary_flags)

    @property
    def label(self) -> str:
        return family_label(self)


def family_signature(
    state: PureState,
    k: int | None = None,
    tol: ToleranceConfig = DEFAULT_TOL,
    qubits: Sequence[int] | None = None,
) -> FamilySignature:
    """Ranks wrt qubits ``1..k`` (default all), or wrt an explicit list."""
    if qubits is None:
        k = state.n if k is None else k
        if not 1 <= k <= state.n:
            raise QubitIndexError(f"prefix length k={k} out of range 1..{state.n}")
        qubits = range(1, k + 1)
    qubits = tuple(qubits)
    for q in qubits:
        _check_qubit(state.n, q)
    rs = [rank_wrt_qubit(state, q, tol) for q in qubits]
    return FamilySignature(qubits, tuple(r.value for r in rs), tuple(r.boundary for r in rs))


def same_family(
    s1: PureState, s2: PureState, k: int | None = None, tol: ToleranceConfig = DEFAULT_TOL
) -> bool | None:
    """Whether both states share the family over qubits ``1..k``.

    Returns ``None`` when either signature is near the float threshold.
    """
    if s1.n != s2.n:
        raise StateError(f"states have different qubit counts ({s1.n} vs {s2.n})")
    a, b = family_signature(s1, k, tol), family_signature(s2, k, tol)
    if a.flagged or b.flagged:
        return None
    return a.ranks == b.ranks


@dataclass(frozen=True)
class EntanglementVerdict:
    """Only the two one-directional conditions the ranks license.

    ``genuinely_entangled_sufficient``: every rank is 2, so the state is
    genuinely entangled. ``biseparable_necessary_met``: some rank is 0
    or 1, which every biseparable state satisfies (but so do some
    genuinely entangled ones, e.g. W).
    """

    genuinely_entangled_sufficient: bool
    biseparable_necessary_met: bool
    boundary: bool = False


def entanglement_verdict(state: PureState, tol: ToleranceConfig = DEFAULT_TOL) -> EntanglementVerdict:
    sig = family_signature(state, tol=tol)
    all_two = all(r == 2 for r in sig.ranks)
    return EntanglementVerdict(all_two, not all_two, sig.flagged)


@dataclass
class TableRow:
    family: str
    state: str
    qubits: tuple[int, ...]
    expected: tuple[int, ...]
    computed: tuple[int, ...]
    boundary: bool = False

    @property
    def passed(self) -> bool:
        return self.expected == self.computed and not self.boundary


@dataclass
class TableReport:
    table_id: str
    title: str
    rows: list[TableRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.rows) and all(r.passed for r in self.rows)

    @property
    def n_passed(self) -> int:
        return sum(r.passed for r in self.rows)

    def to_dict(self) -> dict:
        rows = []
        for r in self.rows:
            d = asdict(r)
            d["passed"] = r.passed
            rows.append(d)
        return {"table": self.table_id, "title": self.title, "passed": self.passed, "rows": rows}


# qubit i -> rank -> three-qubit classes in that family
_TABLE1 = {
    1: {2: ["GHZ"], 1: ["W", "A-BC"], 0: ["A-B-C", "B-AC", "C-AB"]},
    2: {2: ["GHZ"], 1: ["W", "B-AC"], 0: ["A-B-C", "A-BC", "C-AB"]},
    3: {2: ["GHZ"], 1: ["W", "C-AB"], 0: ["A-B-C", "A-BC", "B-AC"]},
}
_TABLE3 = [((2, 2), "GHZ"), ((1, 1), "W"), ((1, 0), "A-BC"),
           ((0, 1), "B-AC"), ((0, 0), "A-B-C"), ((0, 0), "C-AB")]
_TABLE4 = [((2, 2, 2), "GHZ"), ((1, 1, 1), "W"), ((1, 0, 0), "A-BC"),
           ((0, 1, 0), "B-AC"), ((0, 0, 1), "C-AB"), ((0, 0, 0), "A-B-C")]
_TABLE5_NAMES = {(2, 2): "|GHZ>", (1, 1): "|2,5>", (0, 0): "|00000>"}
_PHI = [((2, 2, 2), 1), ((0, 0, 0), 2), ((0, 0, 1), 3), ((1, 1, 1), 4)]

_TITLES = {
    "1": "Three partitions for three qubits (ranks wrt qubit i)",
    "2": "Nine families for odd n >= 5 qubits, instantiated at n = 5 (ranks wrt qubits 1, 2)",
    "3": "Three-qubit partition by ranks wrt qubits 1, 2",
    "4": "Three-qubit partition by ranks wrt qubits 1, 2, 3",
    "5": "Nine families for five qubits (ranks wrt qubits 1, 2)",
    "phi": "Four five-qubit states in distinct orbits (ranks wrt qubits 1, 2, 3)",
}
TABLE_IDS: tuple[str, ...] = tuple(_TITLES)


def _row(state: PureState, name: str, qubits, expected, tol) -> TableRow:
    sig = family_signature(state, tol=tol, qubits=qubits)
    return TableRow(
        family=family_label(expected, qubits),
        state=name,
        qubits=tuple(qubits),
        expected=tuple(expected),
        computed=sig.ranks,
        boundary=sig.flagged,
    )


def reproduce_table(table_id: int | str, tol: ToleranceConfig = DEFAULT_TOL) -> TableReport:
    """Recompute each representative's ranks and compare them to the
    family subscripts of the reference table."""
    tid = str(table_id).strip().lower()
    if tid not in _TITLES:
        raise KeyError(f"unknown table {table_id!r}; choose from {', '.join(TABLE_IDS)}")
    report = TableReport(tid, _TITLES[tid])
    rows = report.rows
    if tid == "1":
        for i, families in _TABLE1.items():
            for r, classes in families.items():
                for c in classes:
                    rows.append(_row(named.three_qubit_class(c), c, (i,), (r,), tol))
    elif tid in ("3", "4"):
        qubits = (1, 2) if tid == "3" else (1, 2, 3)
        for expected, c in _TABLE3 if tid == "3" else _TABLE4:
            rows.append(_row(named.three_qubit_class(c), c, qubits, expected, tol))
    elif tid in ("2", "5"):
        for fam in named.TABLE5_FAMILIES:
            name = _TABLE5_NAMES.get(fam, f"table5:{fam[0]}{fam[1]}")
            rows.append(_row(named.table5_rep(*fam), name, (1, 2), fam, tol))
    else:
        for expected, k in _PHI:
            rows.append(_row(named.phi(k), f"Phi{k}", (1, 2, 3), expected, tol))
    return report
