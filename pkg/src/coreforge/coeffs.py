"""Desk-scale integer factorization, Legendre symbols, and the closed-form
five-core coefficient formulas.

The count a5(n) of 5-cores of n is multiplicative in n+1: writing
n+1 = 2^d 5^c prod p_i^(a_i) prod q_j^(b_j) with p_i = +-1 and q_j = +-2
mod 5, it equals

    (2^(d+1) + (-1)^d)/3 * 5^c * prod (p^(a+1)-1)/(p-1)
                               * prod (q^(b+1)+(-1)^b)/(q+1).

The rank-refined counts a5j(n) for rank j in {-1, 0, 1} reduce to a5 via
fixed residue patterns of n mod 4 and the parity constraint.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import abacus
from .report import VerificationReport

__all__ = [
    "Factorization",
    "factorize",
    "is_prime",
    "legendre",
    "a5_explicit",
    "a5j_explicit",
    "verify_hecke_recurrence",
]


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer with the factor classes
    used by the five-core formulas."""

    value: int
    factors: tuple[tuple[int, int], ...]

    @property
    def two_exponent(self) -> int:
        return next((e for p, e in self.factors if p == 2), 0)

    @property
    def five_exponent(self) -> int:
        return next((e for p, e in self.factors if p == 5), 0)

    @property
    def residue_one_primes(self) -> tuple[tuple[int, int], ...]:
        """Odd primes congruent to +1 or -1 mod 5, with exponents."""
        return tuple((p, e) for p, e in self.factors if p % 2 and p % 5 in (1, 4))

    @property
    def residue_two_primes(self) -> tuple[tuple[int, int], ...]:
        """Odd primes congruent to +2 or -2 mod 5, with exponents."""
        return tuple((p, e) for p, e in self.factors if p % 2 and p % 5 in (2, 3))


def factorize(m: int) -> Factorization:
    """Exact factorization by trial division up to sqrt(m)."""
    if m < 1:
        raise ValueError(f"can only factor positive integers, got {m}")
    value = m
    factors = []
    for p in _trial_sequence():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    if m > 1:
        factors.append((m, 1))
    return Factorization(value, tuple(factors))


def _trial_sequence():
    yield 2
    yield 3
    p = 5
    while True:
        yield p
        yield p + 2
        p += 6


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = factorize(p)
    return f.factors == ((p, 1),)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p, by Euler's criterion."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"modulus {p} is not an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} not divisible by {den}")
    return q


def a5_explicit(n: int) -> int:
    """Closed-form number of 5-cores of n, from the factorization of n+1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    f = factorize(n + 1)
    d = f.two_exponent
    c = f.five_exponent
    out = _exact_div(2 ** (d + 1) + (-1) ** d, 3) * 5**c
    for p, a in f.residue_one_primes:
        out *= _exact_div(p ** (a + 1) - 1, p - 1)
    for q, b in f.residue_two_primes:
        out *= _exact_div(q ** (b + 1) + (-1) ** b, q + 1)
    return out


def a5j_explicit(j: int, n: int) -> int:
    """Number of 5-cores of n with BG-rank j, for j in {-1, 0, 1}."""
    if j not in (-1, 0, 1):
        raise ValueError(f"rank j must be -1, 0 or 1, got {j}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = n % 4
    if j == 0:
        return a5_explicit(n) if n % 2 == 0 else 0
    if j == -1:
        return a5_explicit((n - 3) // 4) if r == 3 else 0
    if r == 1:
        return a5_explicit(2 * ((n - 1) // 4))
    if r == 3:
        m = (n - 3) // 4
        return a5_explicit(m) + a5_explicit(2 * m + 1)
    return 0


def a51_explicit_4n3(n: int) -> int:
    """Closed form for the rank-1 count at 4n+3, from the factorization of
    n+1: twice the a5 product with the power-of-two factor replaced by
    2^(d+1)."""
    f = factorize(n + 1)
    out = 2 ** (f.two_exponent + 1) * 5**f.five_exponent
    for p, a in f.residue_one_primes:
        out *= _exact_div(p ** (a + 1) - 1, p - 1)
    for q, b in f.residue_two_primes:
        out *= _exact_div(q ** (b + 1) + (-1) ** b, q + 1)
    return out


def verify_hecke_recurrence(p: int, j: int, bound: int) -> VerificationReport:
    """Check the coefficient recurrence

        a5j(p n + p - 1) + p (p|5) a5j((n+1)/p - 1) = (p + (p|5)) a5j(n)

    for all n < bound, with the middle term dropped when p does not divide
    n + 1.  The coefficients come from lattice enumeration, independent of
    the closed forms above.
    """
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    chi = legendre(p, 5) if p != 5 else 0
    table = abacus.bg_class_counts(5, j, p * bound + p)
    for n in range(bound):
        lhs = table[p * n + p - 1]
        if (n + 1) % p == 0 and (n + 1) // p - 1 >= 0:
            lhs += p * chi * table[(n + 1) // p - 1]
        rhs = (p + chi) * table[n]
        if lhs != rhs:
            return VerificationReport(
                identity_id=f"hecke.p{p}.j{j}",
                params={"p": p, "j": j},
                order=bound,
                status="fail",
                first_discrepancy=(n, lhs, rhs),
            )
    return VerificationReport(
        identity_id=f"hecke.p{p}.j{j}",
        params={"p": p, "j": j},
        order=bound,
        status="pass",
    )
