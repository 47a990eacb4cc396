import numpy as np
import pytest
from hypothesis import given, strategies as st

from slce_lab import seq
from slce_lab._nt import divisors, odd_prime_powers, phi
from slce_lab.errors import AlphabetMismatch, EvenCharacteristic, NotDivisor, PeriodMismatch
from slce_lab.gf import field_of_order, make_field
from slce_lab.seq import PeriodicSequence, Provenance

from oracles import sidelnikov_prime, slce_prime_euler

PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61]


def test_slce_gf5():
    assert seq.gen_slce(make_field(5)).terms.tolist() == [1, 1, 0, 0]


@pytest.mark.parametrize("p", PRIMES)
def test_slce_matches_euler_criterion(p):
    assert seq.gen_slce(make_field(p)).terms.tolist() == slce_prime_euler(p)


@pytest.mark.parametrize("p", [7, 13, 19, 31, 37, 43, 61])
def test_mary_sidelnikov_matches_naive_logs(p):
    F = make_field(p)
    for M in divisors(p - 1):
        if M >= 2:
            assert seq.gen_sidelnikov(F, M).terms.tolist() == sidelnikov_prime(p, M)


@pytest.mark.parametrize("q", odd_prime_powers(81))
def test_sidelnikov_balanced_for_every_alphabet(q):
    F = field_of_order(q)
    for M in divisors(q - 1):
        if M >= 2:
            assert seq.is_balanced(seq.gen_sidelnikov(F, M))


@pytest.mark.parametrize("q", [3, 5, 7, 9, 25, 27, 49, 81, 125])
def test_mseq_symbol_counts(q):
    F = field_of_order(q)
    m = seq.gen_mseq(F)
    counts = m.counts()
    pd1 = q // F.p
    assert counts[0] == pd1 - 1
    assert (counts[1:] == pd1).all()
    # every nonzero A gives a shift of the same sequence
    other = seq.gen_mseq(F, F.exp_table[3 % (q - 1)])
    assert seq.shift_equivalent(m, other) is not None


def test_shift_equivalent_1100_1001():
    s = seq.gen_slce(make_field(5))
    b = seq.decimate(s, 3)
    assert b.terms.tolist() == [1, 0, 0, 1]
    # a_i = b_{i+3}: 1001 read from position 3 is 1100
    assert seq.shift_equivalent(s, b) == 3
    assert np.array_equal(seq.shift(b, 3).terms, s.terms)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=30), st.integers(-50, 50))
def test_shift_then_equivalent(terms, ell):
    s = PeriodicSequence(terms, 4)
    g = seq.shift_equivalent(s, seq.shift(s, ell))
    assert g is not None
    assert np.array_equal(seq.shift(seq.shift(s, ell), g).terms, s.terms)
    naive = next(k for k in range(len(terms))
                 if all(s[i] == s[i + ell + k] for i in range(len(terms))))
    assert g == naive


@given(st.lists(st.integers(0, 2), min_size=1, max_size=25), st.integers(-40, 40))
def test_decimate_and_const_mul_definitions(terms, t):
    s = PeriodicSequence(terms, 3)
    v = len(terms)
    assert seq.decimate(s, t).terms.tolist() == [terms[(t * i) % v] for i in range(v)]
    assert seq.const_mul(t, s).terms.tolist() == [(t * x) % 3 for x in terms]


def test_errors():
    with pytest.raises(EvenCharacteristic):
        seq.gen_sidelnikov(make_field(2, 3), 7)
    with pytest.raises(NotDivisor):
        seq.gen_sidelnikov(make_field(7), 4)
    a = PeriodicSequence([0, 1], 2)
    with pytest.raises(PeriodMismatch):
        seq.termwise_sum(a, PeriodicSequence([0, 1, 1], 2))
    with pytest.raises(AlphabetMismatch):
        seq.termwise_sum(a, PeriodicSequence([0, 1], 3))
    with pytest.raises(ValueError):
        PeriodicSequence([0, 2], 2)


def test_provenance_roundtrip_and_equality_ignores_it():
    s = seq.const_mul(2, seq.decimate(seq.gen_sidelnikov(make_field(13), 3), 5))
    d = s.provenance.to_dict()
    assert Provenance.from_dict(d) == s.provenance
    assert d["kind"] == "const_mul" and d["parents"][0]["kind"] == "decimate"
    assert PeriodicSequence(s.terms, 3) == s


@pytest.mark.parametrize("q", odd_prime_powers(27))
def test_family_sizes_match_closed_forms(q):
    F = field_of_order(q)
    for M in divisors(q - 1):
        if M < 2:
            continue
        L = seq.build_family_L(F, M)
        K = seq.build_family_K(F, M)
        assert len(L) == seq.family_L_size(q, M)
        assert len(K) + len(L) == seq.family_M_size(q, M)


def test_family_members_follow_their_definitions():
    F = make_field(13)
    s = seq.gen_sidelnikov(F, 3)
    v = s.period
    u = seq.u_member(s, 2, 1, 4)
    w = seq.v_member(s, 1, 2, 4)
    for i in range(v):
        assert u[i] == (2 * s[i] + s[i + 4]) % 3
        assert w[i] == (s[i] + 2 * s[4 - i]) % 3


@pytest.mark.parametrize("p", [7, 11, 13, 17, 19, 23])
def test_f1_size_and_inequivalence(p):
    fam = seq.build_family_F1(make_field(p))
    assert len(fam) == phi(p - 1)
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            assert seq.shift_equivalent(fam[i], fam[j]) is None
