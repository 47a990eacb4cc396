from math import sqrt

import numpy as np
import pytest
from hypothesis import given, strategies as st

from slce_lab import corr, seq
from slce_lab._nt import divisors, odd_prime_powers
from slce_lab.cyclo import make_character
from slce_lab.errors import HypothesisViolated, PeriodMismatch
from slce_lab.gf import field_of_order, make_field
from slce_lab.seq import PeriodicSequence

import oracles


def test_slce_autocorrelation_gf5():
    s = seq.gen_slce(make_field(5))
    assert corr.correlation(s, s).integer_values().tolist() == [4, 0, -4, 0]


@st.composite
def seq_pairs(draw):
    M = draw(st.integers(2, 6))
    v = draw(st.integers(1, 24))
    a = draw(st.lists(st.integers(0, M - 1), min_size=v, max_size=v))
    b = draw(st.lists(st.integers(0, M - 1), min_size=v, max_size=v))
    return M, a, b


@given(seq_pairs())
def test_correlation_matches_naive_sum(pair):
    M, a, b = pair
    spec = corr.correlation(PeriodicSequence(a, M), PeriodicSequence(b, M))
    want = oracles.correlation(a, b, M)
    assert np.allclose(spec.complex_values(), want, atol=1e-9)
    if M == 2:
        assert spec.integer_values().tolist() == [round(z.real) for z in want]
    # the exact cyclotomic value embeds to the same complex number
    for z, exact in zip(want, spec.exact_values()):
        assert abs(exact.embed() - z) < 1e-9


@given(seq_pairs())
def test_cross_correlation_symmetry(pair):
    M, a, b = pair
    A, B = PeriodicSequence(a, M), PeriodicSequence(b, M)
    ab = corr.correlation(A, B).complex_values()
    ba = corr.correlation(B, A).complex_values()
    v = len(a)
    assert np.allclose(ab, [np.conj(ba[(-t) % v]) for t in range(v)])


@pytest.mark.parametrize("q", odd_prime_powers(81))
def test_slce_offphase_values(q):
    got = corr.slce_autocorrelation_value_set(q)
    assert got <= corr.predicted_slce_offphase(q)


def test_predicted_value_sets():
    assert corr.predicted_slce_offphase(7) == {2, -2}
    assert corr.predicted_slce_offphase(13) == {0, -4}


def test_good_bound_constant_multiples():
    F = make_field(13)
    s = seq.gen_sidelnikov(F, 3)
    for c1 in (1, 2):
        for c2 in (1, 2):
            r = corr.check_bound(seq.const_mul(c1, s), seq.const_mul(c2, s), "good")
            assert r.holds and r.bound == pytest.approx(sqrt(13) + 3)


@pytest.mark.parametrize("q", [11, 13, 17, 19, 23, 25, 27, 29, 31, 37])
def test_weil_decimation_bound_on_slce(q):
    F = field_of_order(q)
    s = seq.gen_slce(F)
    v = q - 1
    for t in range(2, 6):
        if np.gcd(t, v) != 1 or t % F.p == 0:
            continue
        b = seq.decimate(s, t)
        if seq.shift_equivalent(s, b) is not None:
            continue
        r = corr.check_bound(s, b, "weil_decimation")
        assert r.holds and r.bound == pytest.approx(t * sqrt(q) + 3)


@pytest.mark.parametrize("q", [13, 17, 25, 29, 37, 41, 49, 53])
def test_weak_bound(q):
    s = seq.gen_slce(field_of_order(q))
    half = (q - 1) // 2
    for t in (half - 1, half + 1):
        assert corr.check_bound(s, seq.decimate(s, t), "weak").holds


def test_bound_hypotheses_are_enforced():
    F = make_field(13)
    s = seq.gen_slce(F)
    with pytest.raises(HypothesisViolated):
        corr.check_bound(s, seq.decimate(s, 5), "good")
    with pytest.raises(HypothesisViolated):
        corr.check_bound(s, seq.decimate(s, 2), "weil_decimation")  # not a unit
    with pytest.raises(HypothesisViolated):
        corr.check_bound(s, seq.decimate(s, 11), "weak")
    with pytest.raises(HypothesisViolated):
        corr.check_bound(PeriodicSequence(s.terms, 2), s, "good")  # no lineage
    L = seq.build_family_L(F, 2)
    with pytest.raises(HypothesisViolated):
        corr.check_bound(L[0], L[0], "family_L")
    with pytest.raises(HypothesisViolated):
        corr.check_bound(seq.build_family_K(F, 2)[0], L[1], "family_L")
    with pytest.raises(PeriodMismatch):
        corr.correlation(s, seq.gen_slce(make_field(11)))


@pytest.mark.parametrize("q", [7, 9, 11, 13])
def test_family_sweep_matches_pairwise_bound_checks(q):
    F = field_of_order(q)
    for M in divisors(q - 1):
        if not 2 <= M <= 4:
            continue
        fam = seq.build_family_M(F, M)
        sw = corr.sweep_family(fam, corr.family_bound(q, "M"))
        assert sw.exhaustive and sw.pairs_checked == len(fam) * (len(fam) - 1) // 2
        worst = max(corr.check_bound(fam[i], fam[j], "family_M").max_observed
                    for i in range(len(fam)) for j in range(i + 1, len(fam)))
        assert sw.max_observed == pytest.approx(worst)
        assert sw.holds


def test_family_sweep_sampling_is_seeded():
    fam = seq.build_family_L(make_field(13), 3)
    a = corr.sweep_family(fam, 99.0, max_pairs=50, seed=7)
    b = corr.sweep_family(fam, 99.0, max_pairs=50, seed=7)
    assert not a.exhaustive and a.pairs_checked == 50
    assert a == b


def test_delta_epsilon():
    rows = dict(corr.delta_epsilon(8.0, 16))
    assert rows[0] == 8 and rows[1] == 4 and rows[2] == 0 and rows[3] == -4


def test_weil_bound_quadratic_character():
    F = make_field(13)
    chi = make_character(F, 2, zero_value=1)
    # x^2 - 2 = x^2 + 11 is squarefree of degree 2: bound sqrt(13) + 0 roots
    r = corr.weil_bound_check(F, [[11, 0, 1]], [chi])
    assert r.holds and r.rhs == pytest.approx(sqrt(13))
    with pytest.raises(HypothesisViolated):
        corr.weil_bound_check(F, [[1, 2, 1]], [chi])  # (x + 1)^2 is a square
