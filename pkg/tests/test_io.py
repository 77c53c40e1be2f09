import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sloccrank import GaussianRational as G, PureState, StateError, dicke, phi
from sloccrank.io import CONVENTION, dumps, loads, read_state, state_to_dict, write_state


def test_exact_roundtrip(tmp_path):
    s = PureState([G(1, -2), 0, 0, G("1/3"), 0, 0, 0, G(0, "5/7")])
    path = tmp_path / "s.json"
    write_state(s, path)
    back = read_state(path)
    assert back.exact and back == s
    doc = json.loads(path.read_text())
    assert doc["convention"] == CONVENTION
    assert doc["amplitudes"][3] == ["1/3", "0"]


@given(st.sampled_from([3, 5]), st.integers(0, 2**32 - 1))
def test_float_roundtrip_bit_identical(n, seed):
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=2**n) * 10.0 ** rng.integers(-20, 20, 2**n) + 1j * rng.normal(size=2**n)
    s = PureState(amps, exact=False)
    assert loads(dumps(s)) == s


def test_float_mode_named_state():
    assert loads(dumps(phi(3))) == phi(3)
    assert loads(dumps(dicke(2, 5))) == dicke(2, 5)


def test_mode_inferred_without_field():
    doc = state_to_dict(dicke(1, 3))
    del doc["numeric_mode"]
    assert loads(json.dumps(doc)).exact
    doc["amplitudes"][0] = [0.5, 0.0]
    assert not loads(json.dumps(doc)).exact


@pytest.mark.parametrize("mutate,match", [
    (lambda d: d.update(n=4, amplitudes=[["1", "0"]] + [["0", "0"]] * 15), "odd n"),
    (lambda d: d.update(amplitudes=d["amplitudes"][:-1]), "expected 8"),
    (lambda d: d.update(convention="qubit1=LSB"), "convention"),
    (lambda d: d["amplitudes"].__setitem__(0, ["0.5", "0"]), "exact"),
    (lambda d: d["amplitudes"].__setitem__(0, "1"), "pair"),
    (lambda d: d.pop("n"), "'n'"),
    (lambda d: d.update(numeric_mode="decimal"), "numeric_mode"),
])
def test_invalid_documents(mutate, match):
    doc = state_to_dict(dicke(1, 3))
    mutate(doc)
    with pytest.raises(StateError, match=match):
        loads(json.dumps(doc))


def test_not_json():
    with pytest.raises(StateError):
        loads("n = 3")
