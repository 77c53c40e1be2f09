"""JSON state files.

::

    {
      "format": "sloccrank-state/1",
      "convention": "qubit1=MSB",
      "n": 3,
      "numeric_mode": "exact",
      "amplitudes": [["1", "0"], ["0", "0"], ..., ["1/2", "-3"]]
    }

Entry ``j`` is the amplitude of basis index ``j`` and qubit 1 is the most
significant bit of ``j``. Exact amplitudes are ``"p/q"`` strings; float
amplitudes are JSON numbers written with ``repr`` precision, so a write/read
round trip is bit-identical.
"""
from __future__ import annotations

import json
from pathlib import Path

from .gaussian import GaussianRational, parse_rational
from .state import PureState, StateError

__all__ = ["FORMAT_TAG", "CONVENTION", "state_to_dict", "state_from_dict", "dumps", "loads",
           "write_state", "read_state"]

FORMAT_TAG = "sloccrank-state/1"
CONVENTION = "qubit1=MSB"


def state_to_dict(state: PureState) -> dict:
    if state.exact:
        amps = [[str(a.re), str(a.im)] for a in state.amplitudes]
    else:
        amps = [[float(a.real), float(a.imag)] for a in state.amplitudes]
    return {
        "format": FORMAT_TAG,
        "convention": CONVENTION,
        "n": state.n,
        "numeric_mode": "exact" if state.exact else "float",
        "amplitudes": amps,
    }


def _entry_is_exact(v) -> bool:
    return isinstance(v, (str, int)) and not isinstance(v, bool)


def state_from_dict(doc: dict) -> PureState:
    try:
        n = doc["n"]
        raw = doc["amplitudes"]
    except (KeyError, TypeError) as exc:
        raise StateError(f"state document needs 'n' and 'amplitudes': {exc}") from None
    conv = doc.get("convention", CONVENTION)
    if conv != CONVENTION:
        raise StateError(f"unsupported bit convention {conv!r}, expected {CONVENTION!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise StateError(f"'n' must be a positive integer, got {n!r}")
    if n % 2 == 0:
        raise StateError(f"n = {n}: rank invariants are defined for odd n >= 3 qubits only")
    if not isinstance(raw, list) or len(raw) != 1 << n:
        raise StateError(f"expected {1 << n} amplitudes for n={n}")
    pairs = []
    for j, entry in enumerate(raw):
        if not (isinstance(entry, list) and len(entry) == 2):
            raise StateError(f"amplitude {j} must be a [real, imaginary] pair")
        pairs.append(entry)

    mode = doc.get("numeric_mode")
    if mode is None:
        mode = "exact" if all(_entry_is_exact(v) for p in pairs for v in p) else "float"
    if mode == "exact":
        try:
            amps = [GaussianRational(parse_rational(re), parse_rational(im)) for re, im in pairs]
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise StateError(f"bad exact amplitude: {exc}") from None
        return PureState(amps, exact=True)
    if mode == "float":
        try:
            amps = [complex(float(re), float(im)) for re, im in pairs]
        except (ValueError, TypeError) as exc:
            raise StateError(f"bad float amplitude: {exc}") from None
        return PureState(amps, exact=False)
    raise StateError(f"numeric_mode must be 'exact' or 'float', got {mode!r}")


def dumps(state: PureState) -> str:
    return json.dumps(state_to_dict(state), indent=1)


def loads(text: str) -> PureState:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateError(f"state file is not valid JSON: {exc}") from None
    return state_from_dict(doc)


def write_state(state: PureState, path: str | Path) -> None:
    Path(path).write_text(dumps(state) + "\n")


def read_state(path: str | Path) -> PureState:
    return loads(Path(path).read_text())
