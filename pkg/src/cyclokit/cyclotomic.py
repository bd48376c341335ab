"""Cyclotomic polynomials and the number theory around their resultants.

The n-th cyclotomic polynomial is built by exact division of X^n - 1 by
the lower-index factors, so everything stays in integer polynomials.
Resultants of two cyclotomics admit a divisor-product closed form
(Apostol's theorem); ``resultant_apostol`` implements it and
``nontrivial_resultant`` the resulting prime-power-ratio criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .intpoly import IntPoly, divrem_exact


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_upto(bound: int) -> list[int]:
    return [n for n in range(2, bound + 1) if is_prime(n)]


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs with increasing primes."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 1
        for p, e in self.pairs:
            if p <= last or e < 1:
                raise ValueError("factor pairs must have increasing primes and exponents >= 1")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            last = p

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def divisors(self) -> tuple[int, ...]:
        divs = [1]
        for p, e in self.pairs:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return tuple(sorted(divs))


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    pairs = []
    m = n
    for p in range(2, math.isqrt(n) + 1):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
    if m > 1:
        pairs.append((m, 1))
    return Factorization(tuple(pairs))


def divisors(n: int) -> tuple[int, ...]:
    return factorize(n).divisors()


def euler_phi(n: int) -> int:
    out = 1
    for p, e in factorize(n).pairs:
        out *= p ** (e - 1) * (p - 1)
    return out


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f.pairs):
        return 0
    return -1 if len(f.pairs) % 2 else 1


@dataclass(frozen=True)
class CycloIndex:
    """An index n bundled with its factorization and totient."""

    n: int
    factorization: Factorization
    phi: int

    def __post_init__(self):
        if self.factorization.value != self.n:
            raise ValueError("factorization does not reconstruct n")
        if self.phi != euler_phi(self.n):
            raise ValueError("phi field does not match the totient of n")

    @classmethod
    def of(cls, n: int) -> CycloIndex:
        return cls(n, factorize(n), euler_phi(n))


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial: monic, degree phi(n), integer coefficients.

    Computed as (X^n - 1) / prod of cyclotomic(d) over proper divisors d | n.
    The lru_cache gives single-writer-consistent memoization.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = IntPoly.monomial(n) - IntPoly.one()
    for d in divisors(n):
        if d == n:
            continue
        num, rem = divrem_exact(num, cyclotomic(d))
        assert rem.is_zero, "X^n - 1 must factor exactly"
    return num


def lam_leung_split(p: int, r: int) -> tuple[int, int]:
    """The unique (s, t) with (p-1)(r-1) = s*p + t*r, 0 <= s <= r-2, 0 <= t <= p-2.

    Found by scanning s; the scan doubles as a runtime existence proof.
    """
    _require_prime_pair(p, r)
    phi = (p - 1) * (r - 1)
    for s in range(r - 1):
        rest = phi - s * p
        if rest >= 0 and rest % r == 0 and rest // r <= p - 2:
            return s, rest // r
    raise ValueError(f"no Lam-Leung split for ({p}, {r})")


def _require_prime_pair(p: int, r: int) -> None:
    if p == r or not is_prime(p) or not is_prime(r):
        raise ValueError(f"({p}, {r}) is not a pair of distinct primes")


@dataclass(frozen=True)
class PrimePair:
    """Ordered pair of distinct primes with its totient and Lam-Leung split."""

    p: int
    r: int
    phi_pr: int
    s: int
    t: int

    def __post_init__(self):
        _require_prime_pair(self.p, self.r)
        if self.phi_pr != (self.p - 1) * (self.r - 1):
            raise ValueError("phi_pr must equal (p-1)(r-1)")
        if not (0 <= self.s <= self.r - 2 and 0 <= self.t <= self.p - 2):
            raise ValueError("split out of range")
        if self.s * self.p + self.t * self.r != self.phi_pr:
            raise ValueError("split does not sum to phi_pr")

    @classmethod
    def of(cls, p: int, r: int) -> PrimePair:
        s, t = lam_leung_split(p, r)
        return cls(p, r, (p - 1) * (r - 1), s, t)

    @property
    def n(self) -> int:
        return self.p * self.r


def lam_leung_phi_pr(p: int, r: int) -> IntPoly:
    """Cyclotomic polynomial of index p*r from the two-product expression.

    With (p-1)(r-1) = s*p + t*r the polynomial is
    (sum_{i<=s} X^{ip})(sum_{j<=t} X^{jr})
      - X^{-pr} (sum_{i=s+1}^{r-1} X^{ip})(sum_{j=t+1}^{p-1} X^{jr}),
    where the second product only involves exponents > pr, so the shift
    stays polynomial. The result equals cyclotomic(p*r).
    """
    s, t = lam_leung_split(p, r)

    def comb(lo_i, hi_i, step_i, lo_j, hi_j, step_j):
        a = [0] * (hi_i * step_i + 1)
        for i in range(lo_i, hi_i + 1):
            a[i * step_i] = 1
        b = [0] * (hi_j * step_j + 1)
        for j in range(lo_j, hi_j + 1):
            b[j * step_j] = 1
        return IntPoly(tuple(a)) * IntPoly(tuple(b))

    first = comb(0, s, p, 0, t, r)
    second = comb(s + 1, r - 1, p, t + 1, p - 1, r)
    n = p * r
    assert all(c == 0 for c in second.coeffs[:n]), "second product must start above X^pr"
    return first - IntPoly(second.coeffs[n:])


def resultant_apostol(m: int, n: int) -> int:
    """Closed-form |resultant| of the m-th and n-th cyclotomic polynomials, m > n >= 1.

    For n = 1 this is p when m is a power of the prime p and 1 otherwise.
    For m > n > 1 it is the product of p^(mu(n/d) * phi(m)/phi(p^a)) over
    divisors d | n with m/gcd(m, d) = p^a a prime power. Exponents are
    accumulated per prime as exact rationals and must total a nonnegative
    integer, which is asserted.
    """
    if m <= n or n < 1:
        raise ValueError("requires m > n >= 1")
    if n == 1:
        f = factorize(m)
        return f.pairs[0][0] if len(f.pairs) == 1 else 1
    phim = euler_phi(m)
    exponents: dict[int, Fraction] = {}
    for d in divisors(n):
        md = m // math.gcd(m, d)
        f = factorize(md)
        if len(f.pairs) != 1:
            continue
        p, a = f.pairs[0]
        term = Fraction(moebius(n // d) * phim, euler_phi(p**a))
        exponents[p] = exponents.get(p, Fraction(0)) + term
    out = 1
    for p, e in exponents.items():
        assert e.denominator == 1 and e >= 0, "per-prime exponent must be a nonnegative integer"
        out *= p ** int(e)
    return out


def nontrivial_resultant(m: int, n: int) -> bool:
    """True iff the resultant of the m-th and n-th cyclotomics differs from 1.

    Decided from the indices alone: the resultant is nontrivial exactly
    when m/n is an integer prime power p^alpha, alpha >= 1.
    """
    if m <= n or n < 1:
        raise ValueError("requires m > n >= 1")
    if m % n:
        return False
    return len(factorize(m // n).pairs) == 1


def coprime_evaluations(m: int, n: int) -> bool:
    """Sufficient condition for gcd(Phi_m(q), Phi_n(q)) = 1 at every integer q.

    This is the negation of ``nontrivial_resultant``: a unit resultant
    bounds the gcd of the two evaluations by 1 regardless of q.
    """
    return not nontrivial_resultant(m, n)
