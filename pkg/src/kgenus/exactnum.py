"""Exact integer and rational arithmetic kernel.

Primality, primitive roots, p-th power residue characters and Bernoulli
numbers, all deterministic and in exact arithmetic.  The primality test
uses a fixed Miller-Rabin witness set that is known to be exact below
2**64; larger inputs are rejected rather than accepted probabilistically,
so nothing in this package ever depends on a probable prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, isqrt

TWO64 = 1 << 64

# Witnesses proving primality for every n < 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_TRIAL_BOUND = 10**6


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**64."""
    if n < 0:
        raise ValueError("is_prime expects a non-negative integer")
    if n >= TWO64:
        raise ValueError("primality is only decided deterministically below 2**64")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def trial_factor(n: int, bound: int = DEFAULT_TRIAL_BOUND) -> tuple[list[tuple[int, int]], int]:
    """Factor n >= 1 by trial division up to `bound`.

    Returns (factors, cofactor) with factors a sorted list of (prime,
    exponent).  The leftover part is tested with is_prime and promoted to
    the factor list when prime (and testable); otherwise it is returned
    as an explicit unfactored cofactor.
    """
    if n < 1:
        raise ValueError("trial_factor expects n >= 1")
    factors = []
    m = n
    d = 2
    while d <= bound and d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                e += 1
                m //= d
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        if m <= bound * bound or (m < TWO64 and is_prime(m)):
            # below bound**2 the leftover is necessarily prime
            factors.append((m, 1))
            m = 1
    return factors, m


def is_squarefree(n: int) -> bool:
    """True iff the nonzero integer n has no repeated prime factor."""
    if n == 0:
        raise ValueError("0 is not squarefree or squareful")
    n = abs(n)
    factors, cofactor = trial_factor(n)
    if any(e > 1 for _, e in factors):
        return False
    # unfactored cofactor: a product of >=2 primes above the trial bound,
    # squarefree unless it is a perfect square of a single prime
    if cofactor > 1 and isqrt(cofactor) ** 2 == cofactor:
        return False
    return True


@dataclass(frozen=True)
class FactoredInteger:
    """An integer in (partially) factored form: sign * prod(p**e) * cofactor.

    Listed primes are verified and strictly increasing.  A cofactor other
    than 1 records a part left explicitly unfactored by trial division
    (it has no prime divisor up to the bound that produced it).
    """

    factors: tuple[tuple[int, int], ...]
    sign: int = 1
    cofactor: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.cofactor < 1:
            raise ValueError("cofactor must be >= 1")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        for p, e in self.factors:
            if e < 1:
                raise ValueError("exponents must be >= 1")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")

    @classmethod
    def from_int(cls, n: int, bound: int = DEFAULT_TRIAL_BOUND) -> "FactoredInteger":
        if n == 0:
            raise ValueError("cannot factor 0")
        sign = 1 if n > 0 else -1
        factors, cofactor = trial_factor(abs(n), bound)
        return cls(tuple(factors), sign, cofactor)

    @property
    def value(self) -> int:
        v = self.sign * self.cofactor
        for p, e in self.factors:
            v *= p**e
        return v

    def valuation(self, p: int) -> int:
        """Exact p-adic valuation of the represented integer."""
        v, n = 0, abs(self.value)
        while n % p == 0:
            v += 1
            n //= p
        return v

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        if not self.factors and self.cofactor == 1:
            return str(self.sign)
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        if self.cofactor > 1:
            parts.append(f"{self.cofactor}?")  # explicitly unfactored
        body = "*".join(parts)
        return "-" + body if self.sign < 0 else body


def primitive_root(ell: int) -> int:
    """Smallest positive primitive root modulo the odd prime ell."""
    if ell == 2 or not is_prime(ell):
        raise ValueError(f"{ell} is not an odd prime")
    phi = ell - 1
    factors, cofactor = trial_factor(phi)
    if cofactor != 1:
        raise ValueError(f"cannot certify a primitive root: {phi} not fully factored")
    prime_divs = [p for p, _ in factors]
    for g in range(2, ell):
        if all(pow(g, phi // q, ell) != 1 for q in prime_divs):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def power_residue_character(g: int, ell: int, p: int, root: int | None = None) -> int:
    """Discrete index c in {0, ..., p-1} with g^((ell-1)/p) = zeta^c mod ell.

    Here zeta = root^((ell-1)/p) for the smallest primitive root of ell
    (a different primitive root may be supplied to check scaling
    behaviour).  c == 0 exactly when g is a p-th power modulo ell.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not is_prime(ell) or (ell - 1) % p != 0:
        raise ValueError(f"{ell} is not a prime congruent to 1 mod {p}")
    if g % ell == 0:
        raise ValueError(f"{g} is not a unit modulo {ell}")
    r = primitive_root(ell) if root is None else root
    zeta = pow(r, (ell - 1) // p, ell)
    target = pow(g % ell, (ell - 1) // p, ell)
    value = 1
    for c in range(p):
        if value == target:
            return c
        value = value * zeta % ell
    raise ValueError(f"{r} is not a primitive root modulo {ell}")


# Bernoulli numbers B_0, B_2, B_4, ... grown on demand (B_2 = 1/6).
_B_EVEN: list[Fraction] = [Fraction(1)]


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m for even m >= 2, exact (B_2 = 1/6, B_4 = -1/30).

    Convention: zeta(1 - m) = -B_m / m.
    """
    if m < 2 or m % 2:
        raise ValueError("Bernoulli index must be even and >= 2")
    k = m // 2
    # binomial recurrence over even indices; odd B vanish except B_1 = -1/2
    while len(_B_EVEN) <= k:
        t = len(_B_EVEN)
        n = 2 * t
        s = Fraction(0)
        for j in range(t):
            s += comb(n + 1, 2 * j) * _B_EVEN[j]
        s += Fraction(-(n + 1), 2)  # B_1 term
        _B_EVEN.append(-s / (n + 1))
    return _B_EVEN[k]
