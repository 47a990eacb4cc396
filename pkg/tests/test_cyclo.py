import cmath

import numpy as np
import pytest
from hypothesis import given, strategies as st

from slce_lab import cyclo
from slce_lab._nt import divisors, odd_prime_powers, phi, prime_power, units
from slce_lab.cyclo import CycInt, make_character
from slce_lab.errors import NotDivisor, NotUnit, TrivialCharacter, WrongOrder
from slce_lab.gf import field_of_order, make_field

import oracles


def zeta(n, e=1):
    return CycInt.zeta(n, e)


def test_small_identities():
    assert zeta(4) ** 2 == -1
    assert (1 - zeta(6)) * (1 - zeta(6, 5)) == 1
    assert (1 - zeta(4)).norm() == 2
    assert (1 - zeta(6)).norm() == 1
    assert (1 - zeta(8)).norm() == 2
    assert sum((zeta(7, j) for j in range(7)), CycInt.from_int(7, 0)).is_zero


@pytest.mark.parametrize("n", range(1, 40))
def test_cyclotomic_polynomial_degree_and_roots(n):
    c = cyclo.cyclotomic_poly(n)
    assert len(c) - 1 == phi(n)
    z = cmath.exp(2j * cmath.pi / n)
    assert abs(sum(a * z ** i for i, a in enumerate(c))) < 1e-8


@st.composite
def cycints(draw, n=None):
    n = n or draw(st.sampled_from([3, 4, 5, 8, 9, 12, 15, 20]))
    coeffs = draw(st.lists(st.integers(-20, 20), min_size=n, max_size=n))
    return CycInt(n, coeffs)


@given(st.data())
def test_ring_laws_and_embedding(data):
    n = data.draw(st.sampled_from([3, 5, 8, 12, 15]))
    a, b, c = (data.draw(cycints(n)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert abs((a * b).embed() - a.embed() * b.embed()) < 1e-6 * (1 + abs(a.embed() * b.embed()))


@given(st.data())
def test_galois_is_a_ring_automorphism(data):
    n = data.draw(st.sampled_from([5, 8, 9, 12, 20]))
    a, b = data.draw(cycints(n)), data.draw(cycints(n))
    for j in units(n):
        assert (a * b).galois(j) == a.galois(j) * b.galois(j)
        assert (a + b).galois(j) == a.galois(j) + b.galois(j)


@given(cycints())
def test_norm_is_product_of_embeddings(a):
    n = a.n
    want = 1
    for j in units(n):
        want *= a.embed(j)
    assert a.norm() == round(want.real)


@given(st.data())
def test_exact_division_roundtrip(data):
    n = data.draw(st.sampled_from([4, 5, 8, 12]))
    a, b = data.draw(cycints(n)), data.draw(cycints(n))
    if b.is_zero:
        return
    assert (a * b).exact_div(b) == a


def test_exact_division_detects_non_divisibility():
    assert (1 + zeta(4)).exact_div(CycInt.from_int(4, 2)) is None


def test_serialisation_roundtrip():
    a = CycInt(12, [3, -1, 0, 7, 2, 0, 0, 0, 0, 0, 0, 5])
    assert CycInt.from_dict(a.to_dict()) == a


def test_mixed_orders_lift():
    assert zeta(4) * zeta(6) == zeta(12, 5)


def test_jacobi_sums_gf5():
    F = make_field(5)
    assert jacobi(F, 2) == -1
    assert jacobi(F, 4) == 1 + 2 * zeta(4)


def jacobi(F, k, u=1):
    return cyclo.jacobi_K(make_character(F, k, u))


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31, 37])
def test_jacobi_matches_complex_oracle(p):
    F = make_field(p)
    for k in divisors(p - 1):
        if k < 2:
            continue
        for u in units(k):
            K = jacobi(F, k, u)
            assert abs(K.embed() - oracles.jacobi_K_prime(p, k, u)) < 1e-7


@pytest.mark.parametrize("q", odd_prime_powers(81))
def test_jacobi_absolute_value(q):
    F = field_of_order(q)
    for k in divisors(q - 1):
        if k < 3:
            continue
        K = jacobi(F, k)
        assert K * K.conj() == q


def test_character_validation():
    F = make_field(13)
    with pytest.raises(NotDivisor):
        make_character(F, 5)
    with pytest.raises(NotUnit):
        make_character(F, 4, u=2)
    with pytest.raises(TrivialCharacter):
        cyclo.jacobi_K(make_character(F, 1))


def test_character_powers():
    F = make_field(13)
    chi = cyclo.teichmuller(F)
    assert (chi ** 4).k == 3 and (chi ** 6).k == 2
    assert len(cyclo.all_characters(F)) == 11
    x = F.element(7)
    for t in range(1, 12):
        assert (chi ** t)(x).embed() == pytest.approx(chi(x).embed() ** t)


@pytest.mark.parametrize("q", [9, 13, 25, 27, 29, 49])
def test_galois_covariance_of_K(q):
    F = field_of_order(q)
    for k in divisors(q - 1):
        if k < 2:
            continue
        chi = make_character(F, k)
        for t in units(k):
            assert cyclo.jacobi_K(chi).galois(t) == cyclo.jacobi_K(chi ** t)


@pytest.mark.parametrize("q", odd_prime_powers(49))
def test_congruence_and_character_identity(q):
    F = field_of_order(q)
    for chi in cyclo.all_characters(F):
        assert cyclo.congruence_check(chi)
        assert cyclo.slce_character_identity(F, chi)


def test_stickelberger_floor_and_remainder_rules():
    for q in odd_prime_powers(121):
        p, d = prime_power(q)
        for k in divisors(q - 1):
            if k > 2 and cyclo.coset_reps(p, k) and pow(p, d, k) == 1:
                try:
                    e = cyclo.stickelberger_exponents(p, d, k)
                except WrongOrder:
                    continue
                for j in e:
                    assert cyclo.stickelberger_exponent(j, p, d, k, "floor") == \
                        cyclo.stickelberger_exponent(j, p, d, k, "remainder")


def test_stickelberger_rules_differ_at_k_two():
    # 2x/k lands exactly on 1: the floor term counts it, the strict remainder test does not
    assert cyclo.stickelberger_exponent(1, 3, 1, 2, "floor") == 0
    assert cyclo.stickelberger_exponent(1, 3, 1, 2, "remainder") == 1


def test_wrong_order_is_rejected():
    # 5 has order 1 modulo 4, so k = 4 lives in GF(5), not GF(25)
    with pytest.raises(WrongOrder):
        cyclo.stickelberger_exponents(5, 2, 4)


@pytest.mark.parametrize("q", [7, 13, 25, 27, 31, 49, 81, 121])
def test_norm_of_K_is_a_prime_power(q):
    p, d = prime_power(q)
    F = field_of_order(q)
    for k in divisors(q - 1):
        if k > 2:
            N = cyclo.jacobi_K(make_character(F, k)).norm()
            assert N == p ** cyclo.stickelberger_norm_exponent(p, d, k)


def test_representation_counts_sum():
    F = make_field(11)
    counts = cyclo.representation_counts(F)
    assert int(np.sum(counts)) == 10
    assert counts[0] == 1  # only x = 1
    want = np.bincount([(x * (1 - x)) % 11 for x in range(1, 11)], minlength=11)
    assert counts.tolist() == want.tolist()
