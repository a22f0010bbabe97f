"""Integer helpers: factorization, multiplicative functions, the subgroup
bound M(h), and the t-selection rule.

Oracles: naive trial-division reimplementations inside this file, plus
hand-checked frozen values.
"""

from fractions import Fraction

import pytest

from ffwitness import nt


def naive_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def naive_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, n))


def test_factorize_frozen():
    assert nt.factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    assert nt.factorize(1).factors == ()
    assert nt.factorize(97).factors == ((97, 1),)


def test_factorize_reconstructs():
    for n in range(1, 400):
        fac = nt.factorize(n)
        prod = 1
        for p, e in fac.factors:
            assert naive_is_prime(p)
            prod *= p**e
        assert prod == n


def test_divisors_match_naive():
    for n in (1, 2, 12, 36, 97, 120, 360):
        assert sorted(nt.factorize(n).divisors()) == naive_divisors(n)


def test_is_prime_matches_naive():
    for n in range(0, 600):
        assert nt.is_prime(n) == naive_is_prime(n)


def test_is_prime_power_frozen():
    assert nt.is_prime_power(8) == (2, 3)
    assert nt.is_prime_power(9) == (3, 2)
    assert nt.is_prime_power(121) == (11, 2)
    assert nt.is_prime_power(12) is None
    assert nt.is_prime_power(1) is None
    assert nt.is_prime_power(0) is None


def test_prime_powers_in_frozen():
    assert nt.prime_powers_in(2, 32) == [
        2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32,
    ]


def test_tau_phi_moebius_match_naive():
    for n in range(1, 300):
        divs = naive_divisors(n)
        assert nt.tau(n) == len(divs)
        assert nt.phi(n) == sum(
            1 for a in range(1, n + 1) if naive_gcd(a, n) == 1
        )
    # Moebius by squarefree inspection
    assert [nt.moebius(n) for n in range(1, 13)] == [
        1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0,
    ]


def naive_gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def test_padic_valuation():
    assert nt.padic_valuation(2, 48) == 4
    assert nt.padic_valuation(3, 48) == 1
    assert nt.padic_valuation(5, 48) == 0
    assert nt.padic_valuation(7, 343) == 3


def test_largest_prime_power_part():
    assert nt.largest_prime_power_part(48) == (2, 4)
    assert nt.largest_prime_power_part(45) == (3, 2)
    assert nt.largest_prime_power_part(100) == (5, 2)
    assert nt.largest_prime_power_part(2) == (2, 1)


def naive_m_of_h(q, h):
    # largest r**min(v_r(q-1), e_max) over primes r | q-1, where e_max is
    # the largest e with (r**e * h)**2 <= q
    best = 1
    for r in nt.factorize(q - 1).prime_divisors():
        e = 0
        while (r ** (e + 1) * h) ** 2 <= q:
            e += 1
        e = min(e, nt.padic_valuation(r, q - 1))
        best = max(best, r**e)
    return best


@pytest.mark.parametrize(
    "q,h,want",
    [(257, 2, 8), (9, 2, 1), (81, 2, 4), (17, 2, 2), (7, 2, 1), (121, 2, 5)],
)
def test_m_of_h_frozen(q, h, want):
    assert nt.m_of_h(q, h) == want


def test_m_of_h_matches_naive():
    for q in nt.prime_powers_in(3, 300):
        for h in (1, 2, 3):
            assert nt.m_of_h(q, h) == naive_m_of_h(q, h)


def test_m_of_h_rejects_bad_input():
    with pytest.raises(ValueError):
        nt.m_of_h(6, 2)
    with pytest.raises(ValueError):
        nt.m_of_h(2, 2)


@pytest.mark.parametrize(
    "q,h,want",
    [(81, 2, (2, 4)), (17, 2, (2, 2)), (9, 2, (2, 1)), (7, 2, (3, 1)), (257, 2, (2, 8))],
)
def test_choose_t_frozen(q, h, want):
    assert nt.choose_t(q, h) == want


def test_choose_t_bound_holds():
    # t always comes from the largest prime power part of q-1 and respects
    # the size constraint t**2 * h**2 <= q whenever t > 1
    for q in nt.prime_powers_in(5, 400):
        for h in (2, 3):
            r, t = nt.choose_t(q, h)
            assert (q - 1) % r == 0
            if t > 1:
                assert t * t * h * h <= q
                assert t % r == 0


def test_choose_t_rejects_q2():
    with pytest.raises(ValueError):
        nt.choose_t(2, 3)


def test_t_density_frozen():
    assert nt.t_density(7, 2, 48, 10) == (7, Fraction(7, 10))
    assert nt.t_density(3, 2, 8, 4) == (3, Fraction(3, 4))
