import numpy as np
import pytest
from hypothesis import given, strategies as st

from slce_lab import ads, seq
from slce_lab._nt import odd_prime_powers
from slce_lab.ads import AdsParams, DifferenceSetParams, Neither, ResidueSet
from slce_lab.errors import NotUnit, TooLarge
from slce_lab.gf import field_of_order
from slce_lab.mult import slce_set

import oracles


@st.composite
def residue_sets(draw, max_v=40):
    v = draw(st.integers(1, max_v))
    members = draw(st.sets(st.integers(0, v - 1)))
    return ResidueSet(v, members)


@given(residue_sets())
def test_difference_function_matches_naive(A):
    assert ads.difference_function(A).tolist() == oracles.differences(A.members, A.modulus)


@given(residue_sets(max_v=30))
def test_multiplier_group_matches_naive(A):
    assert list(ads.multiplier_group_brute(A).group) == oracles.multiplier_group(A.members, A.modulus)


@given(residue_sets(max_v=64))
def test_inversion_reconstructs_indicator(A):
    assert ads.inversion_check(A)


def test_paley_difference_set():
    assert ads.classify(ResidueSet(7, {1, 2, 4})) == DifferenceSetParams(7, 3, 1)
    assert ads.classify(ResidueSet(11, {1, 3, 4, 5, 9})) == DifferenceSetParams(11, 5, 2)


def test_neither():
    assert isinstance(ads.classify(ResidueSet(8, {0, 1, 2})), Neither)


def test_slce_set_gf3_is_a_trivial_difference_set():
    assert ads.classify(slce_set(3)) == DifferenceSetParams(2, 1, 0)


@pytest.mark.parametrize("q", odd_prime_powers(49, start=5))
def test_slce_set_is_almost_difference_set(q):
    res = ads.classify(slce_set(q))
    assert isinstance(res, AdsParams)
    v, k = q - 1, (q - 1) // 2
    if q % 4 == 1:
        want = (v, k, (q - 5) // 4, (q - 1) // 4)
    else:
        want = (v, k, (q - 3) // 4, (3 * q - 5) // 4)
    assert (res.v, res.k, res.lam, res.r) == want


def test_gf9_multiplier_group():
    rep = ads.multiplier_group_brute(slce_set(9))
    assert rep.group == (1, 3, 5, 7)
    assert 3 in ads.strong_multiplier_group_brute(slce_set(9))


@pytest.mark.parametrize("q", odd_prime_powers(81))
def test_multiplier_action_matches_sequence_decimation(q):
    # t A corresponds to decimating the characteristic sequence by t^-1
    S = slce_set(q)
    s = seq.gen_slce(field_of_order(q))
    v = q - 1
    for t in (x for x in range(1, v) if np.gcd(x, v) == 1):
        by_set = ads.decimate_set(S, t)
        by_seq = ads.characteristic_set(seq.decimate(s, pow(t, -1, v)))
        assert by_set == by_seq


def test_multiplier_errors():
    with pytest.raises(NotUnit):
        ads.is_multiplier(ResidueSet(8, {0, 1}), 2)
    with pytest.raises(TooLarge):
        ads.multiplier_group_brute(ResidueSet(1 << 15, {0}))


def test_report_serialises_evidence():
    rep = ads.multiplier_group_brute(slce_set(9)).to_dict()
    assert rep["group"] == [1, 3, 5, 7]
    assert {e["t"] for e in rep["evidence"]} == {1, 3, 5, 7}
    assert all("witness" in e for e in rep["evidence"] if e["verdict"] == "multiplier")
