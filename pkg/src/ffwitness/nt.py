"""Integer arithmetic helpers: factorization, multiplicative functions, and
the exponent-selection rules used by the set constructions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Trial division is exact but quadratic in the bit length; keep inputs small.
FACTOR_CAP = 1 << 63


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer, primes ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def prime_divisors(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def divisors(self) -> list[int]:
        """All positive divisors of n, ascending."""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**i for d in divs for i in range(e + 1)]
        return sorted(divs)


def factorize(n: int) -> Factorization:
    """Factor n by trial division. Requires 1 <= n < 2**63."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"factorize requires a positive integer, got {n!r}")
    if n >= FACTOR_CAP:
        raise ValueError(f"factorize input {n} exceeds cap 2**63")
    m = n
    factors = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return len(f.factors) == 1 and f.factors[0] == (n, 1)


def is_prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n == p**k, or None if n is not a prime power."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f.factors) != 1:
        return None
    return f.factors[0]


def prime_powers_in(lo: int, hi: int) -> list[int]:
    """All prime powers q with lo <= q <= hi, ascending."""
    return [n for n in range(max(lo, 2), hi + 1) if is_prime_power(n) is not None]


def tau(n: int) -> int:
    """Number of positive divisors of n."""
    out = 1
    for _, e in factorize(n).factors:
        out *= e + 1
    return out


def phi(n: int) -> int:
    """Euler totient of n."""
    out = n
    for p, _ in factorize(n).factors:
        out = out // p * (p - 1)
    return out


def moebius(n: int) -> int:
    f = factorize(n)
    for _, e in f.factors:
        if e > 1:
            return 0
    return -1 if len(f.factors) % 2 else 1


def padic_valuation(r: int, n: int) -> int:
    """Largest e with r**e dividing n. Requires r >= 2, n >= 1."""
    if r < 2 or n < 1:
        raise ValueError("padic_valuation requires r >= 2 and n >= 1")
    e = 0
    while n % r == 0:
        n //= r
        e += 1
    return e


def largest_prime_power_part(n: int) -> tuple[int, int]:
    """The prime p maximizing p**v_p(n), returned as (p, v_p(n)).

    Ties are impossible: distinct primes give distinct prime powers.
    Requires n >= 2.
    """
    if n < 2:
        raise ValueError("largest_prime_power_part requires n >= 2")
    best = max(factorize(n).factors, key=lambda pe: pe[0] ** pe[1])
    return best


def _check_prime_power(q: int) -> tuple[int, int]:
    pk = is_prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    return pk


def _max_exponent(r: int, h: int, q: int) -> int:
    # Largest e >= 0 with (r**e * h)**2 <= q, by exact integer comparison.
    e = 0
    while (r ** (e + 1) * h) ** 2 <= q:
        e += 1
    return e


def m_of_h(q: int, h: int) -> int:
    """max over primes r | q-1 of r**min(v_r(q-1), e) where e is the largest
    exponent with r**e * h <= sqrt(q).

    The inner comparison r**e <= sqrt(q)/h is evaluated exactly as
    (r**e)**2 * h**2 <= q. Requires q a prime power >= 3 and h >= 1.
    """
    _check_prime_power(q)
    if q < 3 or h < 1:
        raise ValueError("m_of_h requires a prime power q >= 3 and h >= 1")
    best = 1
    for r, v in factorize(q - 1).factors:
        e = min(v, _max_exponent(r, h, q))
        best = max(best, r**e)
    return best


def choose_t(q: int, h: int) -> tuple[int, int]:
    """Pick (r, t): r is the prime whose power in q-1 is the largest prime
    power part of q-1, and t = r**e is maximal with t*h <= sqrt(q) exactly
    (t**2 * h**2 <= q). The exponent is not clamped by v_r(q-1).

    Requires q a prime power >= 3 and h >= 1.
    """
    _check_prime_power(q)
    if q < 3 or h < 1:
        raise ValueError("choose_t requires a prime power q >= 3 and h >= 1")
    r, _ = largest_prime_power_part(q - 1)
    t = r ** _max_exponent(r, h, q)
    return r, t


def t_density(q: int, h: int, e: int, bound: int) -> tuple[int, Fraction]:
    """Count t in 1..bound satisfying the three arithmetic conditions of the
    guarantee for exponent e: gcd(t, (q**h - 1)//e) == 1, every prime of t
    divides e, and q**h % 4 == 1 whenever 4 | t.

    Returns (count, Fraction(count, bound)). Requires e | q**h - 1.
    """
    _check_prime_power(q)
    if h < 1 or bound < 1:
        raise ValueError("t_density requires h >= 1 and bound >= 1")
    qh = q**h
    if e < 1 or (qh - 1) % e != 0:
        raise ValueError(f"e={e} must divide q**h - 1 = {qh - 1}")
    cofactor = (qh - 1) // e
    count = 0
    for t in range(1, bound + 1):
        if math.gcd(t, cofactor) != 1:
            continue
        if any(e % p != 0 for p in factorize(t).prime_divisors()):
            continue
        if t % 4 == 0 and qh % 4 != 1:
            continue
        count += 1
    return count, Fraction(count, bound)
