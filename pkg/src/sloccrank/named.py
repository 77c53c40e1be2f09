"""Generators for every state written out explicitly in the classification.

Irrational normalization prefactors are dropped so most states stay exact
with integer amplitudes. ``normalized=True`` rescales to unit norm (exact
when the norm is rational, float otherwise).
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .gaussian import GaussianRational
from .state import PureState, StateError

__all__ = [
    "from_terms",
    "basis",
    "zero",
    "ghz",
    "w",
    "dicke",
    "phi",
    "table5_rep",
    "THREE_QUBIT_CLASSES",
    "TABLE5_FAMILIES",
    "three_qubit_class",
    "product_state",
    "gen_named",
    "registry_names",
]


def _finish(state: PureState, normalized: bool) -> PureState:
    return state.normalized() if normalized else state


def from_terms(n: int, terms: Sequence[tuple[object, str]], exact: bool = True) -> PureState:
    """Build a state from ``(coefficient, bitstring)`` pairs."""
    dim = 1 << n
    amps = [0] * dim if exact else np.zeros(dim, dtype=np.complex128)
    for c, bits in terms:
        if len(bits) != n or set(bits) - {"0", "1"}:
            raise StateError(f"bad basis label {bits!r} for n={n}")
        amps[int(bits, 2)] += c
    return PureState(amps, exact=exact)


def basis(n: int, index: int | str) -> PureState:
    """Computational basis state ``|index>``; ``index`` may be a bitstring."""
    if isinstance(index, str):
        if len(index) != n:
            raise StateError(f"bitstring {index!r} does not have {n} bits")
        index = int(index, 2)
    if not 0 <= index < 1 << n:
        raise StateError(f"basis index {index} out of range for n={n}")
    amps = [0] * (1 << n)
    amps[index] = 1
    return PureState(amps, exact=True)


def zero(n: int) -> PureState:
    return basis(n, 0)


def ghz(n: int, normalized: bool = False) -> PureState:
    amps = [0] * (1 << n)
    amps[0] = amps[-1] = 1
    return _finish(PureState(amps, exact=True), normalized)


def dicke(l: int, n: int, normalized: bool = False) -> PureState:
    """Equal-weight superposition of all ``n``-bit strings with ``l`` ones."""
    if not 1 <= l <= n - 1:
        raise StateError(f"Dicke excitation l={l} must satisfy 1 <= l <= n-1 = {n - 1}")
    amps = [0] * (1 << n)
    for ones in combinations(range(n), l):
        amps[sum(1 << (n - 1 - q) for q in ones)] = 1
    return _finish(PureState(amps, exact=True), normalized)


def w(n: int, normalized: bool = False) -> PureState:
    return dicke(1, n, normalized)


_PHI_TERMS = {
    1: [(1, "11111"), (1, "00000")],
    2: [(Fraction(1, 2), t) for t in ("11111", "11100", "00010", "00001")],
    3: [(math.sqrt(2), "11111")] + [(1, t) for t in ("11000", "00100", "00010", "00001")],
    4: [(math.sqrt(3), "11111")]
    + [(1, t) for t in ("10000", "01000", "00100", "00010", "00001")],
}


def phi(k: int, normalized: bool = False) -> PureState:
    """The four five-qubit states known to lie in distinct SLOCC orbits.

    Phi3 and Phi4 carry sqrt(2), sqrt(3) coefficients and are float-only.
    """
    if k not in _PHI_TERMS:
        raise StateError(f"Phi index must be 1..4, got {k}")
    return _finish(from_terms(5, _PHI_TERMS[k], exact=k <= 2), normalized)


# five-qubit representatives keyed by (rank wrt qubit 1, rank wrt qubit 2)
_TABLE5_TERMS: dict[tuple[int, int], list[tuple[int, str]]] = {
    (2, 1): [(1, "00000"), (1, "11111"), (1, "01010"),
             (1, "10101"), (1, "00110"), (-1, "10001")],
    (2, 0): [(1, "00000"), (1, "11111"), (1, "01010"), (1, "10101")],
    (1, 2): [(1, "00111"), (-1, "01000"), (1, "01100"), (1, "10000"), (1, "11011")],
    (1, 0): [(1, "00000"), (1, "01111")],
    (0, 2): [(1, "00000"), (1, "11111"), (1, "01001"), (-1, "10110")],
    (0, 1): [(1, "00000"), (1, "10111")],
}

TABLE5_FAMILIES: tuple[tuple[int, int], ...] = (
    (2, 2), (2, 1), (2, 0), (1, 2), (1, 1), (1, 0), (0, 2), (0, 1), (0, 0),
)


def table5_rep(r1: int, r2: int, normalized: bool = False) -> PureState:
    """Five-qubit representative of the family with ranks ``(r1, r2)``
    with respect to qubits 1 and 2."""
    key = (r1, r2)
    if key == (2, 2):
        return ghz(5, normalized)
    if key == (1, 1):
        return dicke(2, 5, normalized)
    if key == (0, 0):
        return zero(5)
    if key not in _TABLE5_TERMS:
        raise StateError(f"no five-qubit representative for ranks {key}")
    return _finish(from_terms(5, _TABLE5_TERMS[key]), normalized)


# A-BC means qubit A is split off from an entangled pair BC.
_THREE_QUBIT_TERMS = {
    "GHZ": [(1, "000"), (1, "111")],
    "W": [(1, "001"), (1, "010"), (1, "100")],
    "A-BC": [(1, "000"), (1, "011")],
    "B-AC": [(1, "000"), (1, "101")],
    "C-AB": [(1, "000"), (1, "110")],
    "A-B-C": [(1, "000")],
}
THREE_QUBIT_CLASSES: tuple[str, ...] = tuple(_THREE_QUBIT_TERMS)


def three_qubit_class(name: str, normalized: bool = False) -> PureState:
    """Representative of one of the six three-qubit SLOCC classes."""
    key = name.upper()
    if key not in _THREE_QUBIT_TERMS:
        raise StateError(f"unknown three-qubit class {name!r}")
    return _finish(from_terms(3, _THREE_QUBIT_TERMS[key]), normalized)


def product_state(factors: Sequence[tuple[Sequence[int], Sequence]]) -> PureState:
    """Tensor product of factor vectors placed on given qubits.

    ``factors`` is a list of ``(qubits, amplitudes)`` where ``qubits`` are the
    1-based global qubits the factor occupies (MSB-first within the factor)
    and ``amplitudes`` has length ``2**len(qubits)``. The qubit sets must
    partition ``1..n``.
    """
    order: list[int] = []
    vecs = []
    exact = True
    for qubits, amps in factors:
        qubits = list(qubits)
        amps_list = list(np.ravel(np.asarray(amps, dtype=object)))
        if len(amps_list) != 1 << len(qubits):
            raise StateError(f"factor on qubits {qubits} needs {1 << len(qubits)} amplitudes")
        if not all(isinstance(a, (int, Fraction, GaussianRational)) for a in amps_list):
            exact = False
        order.extend(qubits)
        vecs.append(amps_list)
    n = len(order)
    if sorted(order) != list(range(1, n + 1)):
        raise StateError(f"factor qubits {order} do not partition 1..{n}")

    dtype = object if exact else np.complex128
    full = np.array([1], dtype=dtype)
    for v in vecs:
        full = np.multiply.outer(full, np.array(v, dtype=dtype)).reshape(-1)
    # axes currently ordered as `order`; move to 1..n
    tensor = full.reshape([2] * n)
    tensor = np.transpose(tensor, np.argsort(order))
    return PureState(tensor.reshape(-1), exact=exact)


def _parse_family(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\(?\s*([012])\s*,?\s*([012])\s*\)?", text.strip())
    if not m:
        raise StateError(f"family must look like '21' or '2,1', got {text!r}")
    return int(m.group(1)), int(m.group(2))


def registry_names() -> list[str]:
    return (
        ["GHZ", "W", "Dicke", "zero", "basis:<bits>", "Phi1", "Phi2", "Phi3", "Phi4"]
        + [f"table5:{a}{b}" for a, b in TABLE5_FAMILIES]
        + list(THREE_QUBIT_CLASSES)
    )


def gen_named(
    name: str, n: int | None = None, l: int | None = None, normalized: bool = False
) -> PureState:
    """Look up a named state.

    Names: ``GHZ``, ``W``, ``Dicke`` (needs ``l``), ``zero``,
    ``basis:<bits>`` or ``basis:<int>``, ``Phi1``..``Phi4`` (n=5),
    ``table5:<r1><r2>`` (n=5), and the three-qubit classes ``A-BC``,
    ``B-AC``, ``C-AB``, ``A-B-C`` (n=3; ``GHZ``/``W`` work for any odd n).
    """
    key = name.strip()
    low = key.lower()

    def need_n(required: int | None = None) -> int:
        if n is None:
            if required is None:
                raise StateError(f"state {name!r} needs n")
            return required
        if required is not None and n != required:
            raise StateError(f"state {name!r} exists only for n={required}, got n={n}")
        return n

    if low == "ghz":
        return ghz(need_n(), normalized)
    if low == "w":
        return w(need_n(), normalized)
    if low == "dicke":
        if l is None:
            raise StateError("Dicke state needs l (number of excitations)")
        return dicke(l, need_n(), normalized)
    if low == "zero":
        return zero(need_n())
    if low.startswith("basis:"):
        label = key.split(":", 1)[1].strip()
        is_bits = set(label) <= {"0", "1"} and (n is None or len(label) == n)
        if is_bits:
            return basis(len(label), label)
        return basis(need_n(), int(label))
    m = re.fullmatch(r"phi([1-4])", low)
    if m:
        need_n(5)
        return phi(int(m.group(1)), normalized)
    if low.startswith("table5:"):
        need_n(5)
        return table5_rep(*_parse_family(key.split(":", 1)[1]), normalized=normalized)
    if key.upper() in _THREE_QUBIT_TERMS:
        need_n(3)
        return three_qubit_class(key, normalized)
    raise StateError(f"unknown state name {name!r}; known: {', '.join(registry_names())}")
