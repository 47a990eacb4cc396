import pytest

from slce_lab import mult
from slce_lab._nt import odd_prime_powers, primes_upto, units
from slce_lab.ads import is_multiplier, multiplier_group_brute
from slce_lab.cyclo import coset_reps, stickelberger_exponent
from slce_lab.errors import ExcludedCandidate, HypothesisViolated, NotDivisor, NotPrime, NotUnit

import oracles


def test_S1_definition():
    assert sorted(mult.compute_S1(13).members) == [1, 5]
    assert sorted(mult.compute_S1(61).members) == [1, 7, 11, 13, 17, 19, 23, 29]


def test_p61_survivors_are_plus_minus_11_and_19():
    assert mult.akiyama_survivors(61) == [11, 19, 41, 49]
    v = mult.prove_trivial(61)
    assert v.verdict == "trivial"
    assert list(v.survivors) == [11, 19, 41, 49]
    assert all(v.per_candidate[t] == "brute_force_ruled_out" for t in v.survivors)


def test_excluded_candidates_raise():
    for t in (1, 59, 29, 31):
        with pytest.raises(ExcludedCandidate):
            mult.akiyama_test(61, t)
    with pytest.raises(NotUnit):
        mult.akiyama_test(61, 2)
    with pytest.raises(NotPrime):
        mult.compute_S1(9)


@pytest.mark.parametrize("p", [7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47])
def test_S0_closed_form_for_prime_fields(p):
    S0 = mult.compute_S0(p)
    k = p - 1
    assert S0.members == frozenset(j for j in units(k) if pow(j, -1, k) < k / 2)


def _verdict_with_reps(p, d, t, pick):
    """identical / disjoint / violated with coset representatives chosen by ``pick``."""
    k = p ** d - 1
    cosets = []
    for r in coset_reps(p, k):
        c, x = [], r
        while x not in c:
            c.append(x)
            x = x * p % k
        cosets.append(c)
    rep = {x: pick(c) for c in cosets for x in c}
    T = [pick(c) for c in cosets]
    S0 = {j for j in T if stickelberger_exponent(pow(j, -1, k), p, d, k) > 0}
    moved = {rep[t * j % k] for j in S0}
    if moved == S0:
        return "identical"
    return "disjoint" if not moved & S0 else "violated"


@pytest.mark.parametrize("p,d", [(3, 2), (5, 2), (7, 2), (3, 3), (11, 2)])
def test_nec_verdict_independent_of_representatives(p, d):
    k = p ** d - 1
    for t in units(k):
        got = mult.nec_condition(p, d, t).status
        assert got == _verdict_with_reps(p, d, t, min)
        assert got == _verdict_with_reps(p, d, t, max)


@pytest.mark.parametrize("p", primes_upto(200, 7))
def test_both_strategies_agree_with_brute_force(p):
    brute = multiplier_group_brute(mult.slce_set(p)).group
    for strategy in ("akiyama", "nec"):
        v = mult.prove_trivial(p, strategy, brute_check=False)
        assert v.group == brute


@pytest.mark.parametrize("q", odd_prime_powers(49))
def test_exceptional_minus_one_agrees_with_search(q):
    assert mult.exceptional_minus_one(q) == is_multiplier(mult.slce_set(q), -1)


def test_minus_one_multiplier_fields_up_to_121():
    hits = [q for q in odd_prime_powers(121) if is_multiplier(mult.slce_set(q), -1)]
    # over GF(5) the set is {0, 1} in Z/4 and -{0, 1} = {0, 3} = {0, 1} + 3
    assert hits == [3, 5, 9]


def test_gf5_group_by_naive_search():
    assert oracles.multiplier_group(mult.slce_set(5).members, 4) == [1, 3]
    assert mult.prove_trivial(5).group == (1, 3)


@pytest.mark.parametrize("q", [q for q in odd_prime_powers(121) if q % 4 == 1])
def test_exceptional_half_agrees_with_search(q):
    S = mult.slce_set(q)
    direct = any(is_multiplier(S, t) for t in mult.half_candidates(q))
    assert mult.exceptional_half(q) == direct


def test_exceptional_half_hypothesis():
    with pytest.raises(HypothesisViolated):
        mult.exceptional_half(7)


def test_purity_condition_matches_exact_check():
    for p in (3, 5, 7, 11, 13):
        for k in range(3, p * p):
            if (p * p - 1) % k:
                continue
            assert mult.pure_jacobi_condition(p, k) == mult.jacobi_pure_exact(p, k), (p, k)
    with pytest.raises(NotDivisor):
        mult.pure_jacobi_condition(5, 7)


def test_verdict_serialisation():
    d = mult.prove_trivial(13).to_dict()
    assert d["p"] == 13 and d["verdict"] == "trivial"
    assert {c["t"] for c in d["candidates"]} == set(units(12))
    assert set(c["method"] for c in d["candidates"]) <= set(mult.METHODS)
