from math import comb, sqrt

import numpy as np
import pytest

from conftest import dicke_oracle
from sloccrank import StateError, dicke, gen_named, ghz, phi, product_state, table5_rep, w, zero
from sloccrank.named import TABLE5_FAMILIES, THREE_QUBIT_CLASSES, registry_names


def test_w_is_dicke_one():
    assert gen_named("Dicke", 3, l=1) == w(3)
    assert w(3).nonzero_indices() == [1, 2, 4]


@pytest.mark.parametrize("n", [3, 5, 7])
def test_dicke_support_and_weights(n):
    for l in range(1, n):
        s = dicke(l, n)
        nz = s.nonzero_indices()
        assert len(nz) == comb(n, l)
        assert {s.amplitudes[j] for j in nz} == {1}
        assert all(bin(j).count("1") == l for j in nz)
        assert list(s.amplitudes) == dicke_oracle(l, n)


@pytest.mark.parametrize("l", [0, 5])
def test_dicke_range(l):
    with pytest.raises(StateError):
        dicke(l, 5)


def test_phi2_amplitudes():
    s = gen_named("Phi2", 5)
    assert s.exact
    assert s.nonzero_indices() == [1, 2, 28, 31]
    assert all(s.amplitudes[j] == 0.5 for j in (31, 28, 2, 1))


def test_ghz_normalized():
    s = gen_named("GHZ", 5, normalized=True)
    assert s.amplitudes[0] == pytest.approx(1 / sqrt(2))
    assert s.amplitudes[31] == pytest.approx(1 / sqrt(2))
    assert s.nonzero_indices() == [0, 31]


def test_phi3_phi4_are_float():
    assert not phi(3).exact and not phi(4).exact
    assert phi(3).amplitudes[31] == pytest.approx(sqrt(2))
    assert phi(4, normalized=True).norm_sq == pytest.approx(1.0)


def test_five_qubit_reps_normalized_prefactors():
    assert table5_rep(2, 0, normalized=True).amplitudes[0] == 0.5
    assert table5_rep(0, 2, normalized=True).exact
    assert table5_rep(1, 2).amplitudes[0b01000] == -1
    assert table5_rep(2, 1, normalized=True).amplitudes[0] == pytest.approx(1 / sqrt(6))


def test_product_state_places_factors():
    bell = [1, 0, 0, 1]
    s = product_state([((2, 4), bell), ((1, 3, 5), [1, 0, 0, 0, 0, 0, 0, 1])])
    assert [format(j, "05b") for j in s.nonzero_indices()] == ["00000", "01010", "10101", "11111"]


def test_product_state_validates_partition():
    with pytest.raises(StateError):
        product_state([((1, 2), [1, 0, 0, 1]), ((2, 3), [1, 0, 0, 1])])


@pytest.mark.parametrize("name", [n for n in registry_names() if "<" not in n])
def test_registry_names_resolve(name):
    n = 3 if name in THREE_QUBIT_CLASSES else 5
    gen_named(name, n, l=2)


def test_gen_named_errors():
    with pytest.raises(StateError, match="unknown"):
        gen_named("bogus", 3)
    with pytest.raises(StateError, match="n=5"):
        gen_named("Phi1", 7)
    with pytest.raises(StateError, match="n=3"):
        gen_named("A-BC", 5)
    with pytest.raises(StateError):
        gen_named("GHZ")


def test_basis_names():
    assert gen_named("basis:01010").nonzero_indices() == [0b01010]
    assert gen_named("basis:7", 3).nonzero_indices() == [7]
    assert gen_named("zero", 7) == zero(7)


def test_all_table5_families_available():
    assert len({tuple(map(str, table5_rep(*f).amplitudes)) for f in TABLE5_FAMILIES}) == 9
    assert table5_rep(2, 2) == ghz(5)
