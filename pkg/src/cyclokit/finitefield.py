"""Prime fields and extension fields with deterministic canonical moduli.

Extensions use plain polynomial-basis arithmetic modulo the
lexicographically smallest monic irreducible polynomial of the requested
degree (coefficient vectors compared from the constant term up), so a
field object -- and every test vector built on it -- is a pure function
of (q, n). Norm maps onto the order-Phi_k(q) subgroups are realized as
exponentiations by the cofactor values U_k(q) = (q^n - 1)/Phi_k(q).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import cyclotomic, factorize, is_prime
from .intpoly import IntPoly, divrem_exact


# -- low-level arithmetic on little-endian coefficient tuples mod q --------


def _ptrim(v) -> tuple[int, ...]:
    out = tuple(v)
    end = len(out)
    while end > 0 and out[end - 1] == 0:
        end -= 1
    return out[:end]


def _pmul(a, b, q) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _ptrim(c % q for c in out)


def _pmod(a, f, q) -> tuple[int, ...]:
    # f monic of degree >= 1
    r = [c % q for c in a]
    df = len(f) - 1
    for k in range(len(r) - 1 - df, -1, -1):
        c = r[k + df]
        if c:
            for i in range(df):
                r[k + i] = (r[k + i] - c * f[i]) % q
            r[k + df] = 0
    return _ptrim(r)


def _pmulmod(a, b, f, q) -> tuple[int, ...]:
    return _pmod(_pmul(a, b, q), f, q)


def _ppowmod(a, e, f, q) -> tuple[int, ...]:
    result = (1,)
    base = _pmod(a, f, q)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, q)
        base = _pmulmod(base, base, f, q)
        e >>= 1
    return result


def _pgcd(a, b, q) -> tuple[int, ...]:
    a, b = _ptrim(c % q for c in a), _ptrim(c % q for c in b)
    while b:
        inv_lead = pow(b[-1], -1, q)
        bm = tuple(c * inv_lead % q for c in b)
        a, b = b, _pmod(a, bm, q)
    if a:
        inv_lead = pow(a[-1], -1, q)
        a = tuple(c * inv_lead % q for c in a)
    return a


def _pinvmod(a, f, q) -> tuple[int, ...]:
    # extended Euclid in F_q[X]; f irreducible, a != 0 mod f
    r0, r1 = tuple(c % q for c in f), _pmod(a, f, q)
    if not r1:
        raise ZeroDivisionError("inversion of zero in extension field")
    s0, s1 = (), (1,)
    while r1:
        inv_lead = pow(r1[-1], -1, q)
        r1m = tuple(c * inv_lead % q for c in r1)
        # quotient of r0 by r1m, monic divisor
        rr = [c % q for c in r0]
        df = len(r1m) - 1
        quo = [0] * max(len(rr) - df, 0)
        for k in range(len(rr) - 1 - df, -1, -1):
            c = rr[k + df]
            if c:
                quo[k] = c
                for i in range(df):
                    rr[k + i] = (rr[k + i] - c * r1m[i]) % q
                rr[k + df] = 0
        quo = tuple(c * inv_lead % q for c in quo)
        r0, r1 = r1, _ptrim(rr)
        s0, s1 = s1, _psub(s0, _pmul(quo, s1, q), q)
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    c_inv = pow(r0[0], -1, q)
    return _pmod(tuple(x * c_inv % q for x in s0), f, q)


def _psub(a, b, q) -> tuple[int, ...]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _ptrim(c % q for c in out)


def _is_irreducible(f: tuple[int, ...], q: int) -> bool:
    """Rabin test: X^{q^n} = X mod f, and gcd(X^{q^{n/l}} - X, f) = 1 for primes l | n."""
    n = len(f) - 1
    x = _pmod((0, 1), f, q)
    checkpoints = {n // ell for ell in factorize(n).primes}
    b = x
    for i in range(1, n + 1):
        b = _ppowmod(b, q, f, q)
        if i in checkpoints and i < n:
            if _pgcd(_psub(b, x, q), f, q) != (1,):
                return False
    return b == x


# -- field objects ----------------------------------------------------------


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"{self.q} is not prime")


class ExtField:
    """F_{q^n} in polynomial basis modulo a fixed monic irreducible polynomial."""

    def __init__(self, base: PrimeField, n: int, modulus: IntPoly):
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        q = base.q
        mod = tuple(c % q for c in modulus.coeffs)
        if len(mod) != n + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree n with reduced coefficients")
        if not _is_irreducible(mod, q):
            raise ValueError("modulus is reducible")
        self.base = base
        self.n = n
        self.modulus = IntPoly(mod)
        # X^{n+i} mod modulus, for reducing schoolbook products
        self._red: list[tuple[int, ...]] = []
        cur = _pmod((0,) * n + (1,), mod, q)
        for _ in range(n - 1):
            row = tuple(cur) + (0,) * (n - len(cur))
            self._red.append(row)
            cur = _pmod(_pmul(cur, (0, 1), q), mod, q)

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def order(self) -> int:
        return self.q**self.n

    def element(self, coeffs) -> ExtFieldElement:
        q, n = self.q, self.n
        vec = [c % q for c in coeffs]
        if len(vec) > n:
            reduced = _pmod(tuple(vec), tuple(self.modulus.coeffs), q)
            vec = list(reduced)
        vec += [0] * (n - len(vec))
        return ExtFieldElement(self, tuple(vec))

    @property
    def zero(self) -> ExtFieldElement:
        return self.element(())

    @property
    def one(self) -> ExtFieldElement:
        return self.element((1,))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtField)
            and self.q == other.q
            and self.n == other.n
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.q, self.n, self.modulus.coeffs))

    def __repr__(self) -> str:
        return f"ExtField(q={self.q}, n={self.n}, modulus={self.modulus!r})"


@lru_cache(maxsize=None)
def make_ext_field(q: int, n: int) -> ExtField:
    """The canonical F_{q^n}: lexicographically smallest monic irreducible modulus.

    Candidate vectors (c_0, ..., c_{n-1}) are compared from the constant
    term up; being pure in (q, n), repeated construction is bit-identical.
    """
    base = PrimeField(q)
    if n == 1:
        return ExtField(base, 1, IntPoly.monomial(1))
    # c_0 = 0 would make X a factor, so start at the first candidate with c_0 = 1
    for k in range(q ** (n - 1), q**n):
        digits = []
        kk = k
        for _ in range(n):
            digits.append(kk % q)
            kk //= q
        coeffs = tuple(reversed(digits))  # (c_0, ..., c_{n-1})
        f = coeffs + (1,)
        if _is_irreducible(f, q):
            return ExtField(base, n, IntPoly(f))
    raise AssertionError("unreachable: irreducible polynomials exist for every degree")


@dataclass(frozen=True)
class ExtFieldElement:
    field: ExtField
    coeffs: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _same_field(self, other: ExtFieldElement) -> ExtField:
        if not isinstance(other, ExtFieldElement):
            raise TypeError("expected an extension field element")
        if self.field != other.field:
            raise ValueError("operands belong to different fields")
        return self.field

    def __add__(self, other: ExtFieldElement) -> ExtFieldElement:
        field = self._same_field(other)
        q = field.q
        return ExtFieldElement(
            field, tuple((x + y) % q for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: ExtFieldElement) -> ExtFieldElement:
        field = self._same_field(other)
        q = field.q
        return ExtFieldElement(
            field, tuple((x - y) % q for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> ExtFieldElement:
        q = self.field.q
        return ExtFieldElement(self.field, tuple(-x % q for x in self.coeffs))

    def scale(self, c: int) -> ExtFieldElement:
        q = self.field.q
        return ExtFieldElement(self.field, tuple(x * c % q for x in self.coeffs))

    def __mul__(self, other: ExtFieldElement) -> ExtFieldElement:
        field = self._same_field(other)
        q, n = field.q, field.n
        if n == 1:
            return ExtFieldElement(field, (self.coeffs[0] * other.coeffs[0] % q,))
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(other.coeffs):
                    prod[i + j] += ai * bj
        for i in range(2 * n - 2, n - 1, -1):
            c = prod[i] % q
            if c:
                row = field._red[i - n]
                for j, rj in enumerate(row):
                    prod[j] += c * rj
        return ExtFieldElement(field, tuple(c % q for c in prod[:n]))

    def inv(self) -> ExtFieldElement:
        if self.is_zero:
            raise ZeroDivisionError("inversion of zero")
        field = self.field
        out = _pinvmod(self.coeffs, tuple(field.modulus.coeffs), field.q)
        return field.element(out)

    def __pow__(self, e: int) -> ExtFieldElement:
        field = self.field
        if e == 0:
            return field.one
        result = field.one
        base = self
        k = abs(e)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result.inv() if e < 0 else result

    def to_json_dict(self) -> dict:
        return {
            "coeffs": [str(c) for c in self.coeffs],
            "q": str(self.field.q),
            "n": self.field.n,
            "modulus": self.field.modulus.to_decimal_strings(),
        }


# -- subgroup structure -----------------------------------------------------


def norm_exponent(q: int, pr: int, k: int) -> int:
    """Evaluation at q of the cofactor (X^pr - 1) / Phi_k, for k | pr.

    Raising an element of F_{q^pr}^x to this power projects it onto the
    subgroup of order Phi_k(q).
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if pr < 2 or k < 1 or pr % k:
        raise ValueError(f"{k} does not divide {pr}")
    u_k, rem = divrem_exact(IntPoly.monomial(pr) - IntPoly.one(), cyclotomic(k))
    assert rem.is_zero
    return u_k.evaluate(q)


def torus_membership(x: ExtFieldElement, k: int) -> bool:
    """True iff x lies in the order-Phi_k(q) subgroup, i.e. x^{Phi_k(q)} = 1."""
    if x.is_zero:
        raise ValueError("membership is defined on nonzero elements")
    if k < 1 or x.field.n % k:
        raise ValueError(f"{k} does not divide the extension degree {x.field.n}")
    return x ** cyclotomic(k).evaluate(x.field.q) == x.field.one


def multiplicative_order(x: ExtFieldElement) -> int:
    if x.is_zero:
        raise ValueError("zero has no multiplicative order")
    field = x.field
    order = field.order - 1
    primes = set()
    for d in factorize(field.n).divisors():
        primes.update(factorize(cyclotomic(d).evaluate(field.q)).primes)
    for ell in primes:
        while order % ell == 0 and x ** (order // ell) == field.one:
            order //= ell
    return order


def random_nonzero(field: ExtField, rng) -> ExtFieldElement:
    """Uniform nonzero element drawn from a seeded random.Random."""
    while True:
        x = field.element([rng.randrange(field.q) for _ in range(field.n)])
        if not x.is_zero:
            return x
