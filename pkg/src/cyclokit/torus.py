"""Decomposition of F_{q^{pr}}^x into norm-one subgroups and back.

For distinct primes p, r the multiplicative group of F_{q^{pr}} maps onto
the four subgroups T_k of order Phi_k(q), k in {1, p, r, pr}, via the
cofactor powers U_k(q). The reverse direction recombines the components
in two steps driven by Bezout identities:

    Phi_pr * u1 + Phi_1 * u_pr = 1        (pairs T_1 with T_pr)
    Phi_r  * u_p + Phi_p * u_r = 1        (pairs T_p with T_r)
    Phi_p Phi_r * v1 + Phi_1 Phi_pr * v2 = p*r   (joins the two halves)

so that recombine(decompose(x)) = x^{pr} exactly. ``theta`` packages the
same machinery as a near-bijection

    T_pr x F_{q^p}^x x F_{q^r}^x  ->  F_q^x x F_{q^{pr}}^x

whose kernel is annihilated by a power of p*r; ``kernel_annihilator``
measures that power from the composite exponents of theta_reverse o theta.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import PrimePair, cyclotomic, divisors, euler_phi, is_prime, moebius
from .finitefield import (
    ExtField,
    ExtFieldElement,
    _ppowmod,
    make_ext_field,
    norm_exponent,
    torus_membership,
)
from .intpoly import IntPoly, divrem_exact, xgcd_rational


class TorusMembershipError(ValueError):
    """A component failed its subgroup-order membership check."""


@dataclass(frozen=True)
class BezoutExponents:
    """The six exponent polynomials of the two-step recombination."""

    u1: IntPoly
    u_pr: IntPoly
    u_p: IntPoly
    u_r: IntPoly
    v1: IntPoly
    v2: IntPoly


def derive_exponent_polys(p: int, r: int) -> BezoutExponents:
    """All Bezout exponent polynomials for the pair (p, r), exactly.

    u1, u_pr solve Phi_pr*u1 + Phi_1*u_pr = 1; u_p, u_r solve
    Phi_r*u_p + Phi_p*u_r = 1; v1, v2 are the p*r-scaled canonical pair
    for (Phi_p*Phi_r, Phi_1*Phi_pr) and must come out integral, which is
    enforced. All three identities are asserted as exact polynomial
    equations before returning.
    """
    pair = PrimePair.of(p, r)
    n = pair.n
    phi1, phip, phir, phipr = cyclotomic(1), cyclotomic(p), cyclotomic(r), cyclotomic(n)
    u1_s, u_pr_s = xgcd_rational(phipr, phi1)
    u_p_s, u_r_s = xgcd_rational(phir, phip)
    for s in (u1_s, u_pr_s, u_p_s, u_r_s):
        if not s.is_integral:
            raise ValueError("unit-resultant Bezout cofactors must be integral")
    a, b = xgcd_rational(phip * phir, phi1 * phipr)
    v1_s, v2_s = a.scaled(n), b.scaled(n)
    if not (v1_s.is_integral and v2_s.is_integral):
        raise ValueError(f"p*r-scaled cofactors are not integral for ({p}, {r})")
    exps = BezoutExponents(
        u1=u1_s.num, u_pr=u_pr_s.num, u_p=u_p_s.num, u_r=u_r_s.num,
        v1=v1_s.num, v2=v2_s.num,
    )
    one, pr_const = IntPoly.one(), IntPoly.constant(n)
    assert phipr * exps.u1 + phi1 * exps.u_pr == one
    assert phir * exps.u_p + phip * exps.u_r == one
    assert phip * phir * exps.v1 + phi1 * phipr * exps.v2 == pr_const
    return exps


@dataclass(frozen=True, eq=False)
class TorusParams:
    """Exponent data for one (q, p, r): polynomials, their values at q, U_k(q)."""

    q: int
    pair: PrimePair
    u1: IntPoly
    u_pr: IntPoly
    u_p: IntPoly
    u_r: IntPoly
    v1: IntPoly
    v2: IntPoly
    u1_q: int
    u_pr_q: int
    u_p_q: int
    u_r_q: int
    v1_q: int
    v2_q: int
    norm_exponents: dict[int, int]


def derive_params(q: int, p: int, r: int) -> TorusParams:
    if not is_prime(q):
        raise ValueError(f"q = {q} is not prime")
    pair = PrimePair.of(p, r)
    exps = derive_exponent_polys(p, r)
    n = pair.n
    return TorusParams(
        q=q,
        pair=pair,
        u1=exps.u1, u_pr=exps.u_pr, u_p=exps.u_p, u_r=exps.u_r,
        v1=exps.v1, v2=exps.v2,
        u1_q=exps.u1.evaluate(q),
        u_pr_q=exps.u_pr.evaluate(q),
        u_p_q=exps.u_p.evaluate(q),
        u_r_q=exps.u_r.evaluate(q),
        v1_q=exps.v1.evaluate(q),
        v2_q=exps.v2.evaluate(q),
        norm_exponents={k: norm_exponent(q, n, k) for k in (1, p, r, n)},
    )


@dataclass(frozen=True)
class TorusComponents:
    t1: ExtFieldElement
    tp: ExtFieldElement
    tr: ExtFieldElement
    tpr: ExtFieldElement


def _check_big_field(x: ExtFieldElement, params: TorusParams) -> ExtField:
    field = x.field
    if field.q != params.q or field.n != params.pair.n:
        raise ValueError("element does not live in the configured F_{q^{pr}}")
    return field


def decompose(x: ExtFieldElement, params: TorusParams) -> TorusComponents:
    """Project x onto (T_1, T_p, T_r, T_pr) via the four norm powers U_k(q)."""
    if x.is_zero:
        raise ValueError("cannot decompose zero")
    _check_big_field(x, params)
    p, r, n = params.pair.p, params.pair.r, params.pair.n
    e = params.norm_exponents
    return TorusComponents(
        t1=x ** e[1], tp=x ** e[p], tr=x ** e[r], tpr=x ** e[n]
    )


def recombine(c: TorusComponents, params: TorusParams) -> ExtFieldElement:
    """Two-step reconstruction; recombine(decompose(x)) = x^{pr}.

    Components must satisfy their subgroup memberships; violations raise
    TorusMembershipError.
    """
    p, r, n = params.pair.p, params.pair.r, params.pair.n
    for comp, k in ((c.t1, 1), (c.tp, p), (c.tr, r), (c.tpr, n)):
        _check_big_field(comp, params)
        if not torus_membership(comp, k):
            raise TorusMembershipError(f"component is outside the order-Phi_{k}(q) subgroup")
    y1 = c.t1**params.u1_q * c.tpr**params.u_pr_q
    y2 = c.tp**params.u_p_q * c.tr**params.u_r_q
    return y1**params.v1_q * y2**params.v2_q


# -- single-prime analogue ---------------------------------------------------


def _single_prime_cofactor(p: int, q: int) -> int:
    """Integer b with Phi_p(q)*1 + (q-1)*b = p (the scaled degree-one Bezout pair)."""
    b = -sum((p - 1 - k) * q**k for k in range(p - 1))
    assert cyclotomic(p).evaluate(q) + (q - 1) * b == p
    return b


def decompose_single(x: ExtFieldElement) -> tuple[ExtFieldElement, ExtFieldElement]:
    """Split x in F_{q^p}^x into (x^{Phi_p(q)}, x^{q-1}) in T_1 x T_p."""
    if x.is_zero:
        raise ValueError("cannot decompose zero")
    p, q = x.field.n, x.field.q
    if not is_prime(p):
        raise ValueError("decompose_single needs a prime extension degree")
    return x ** cyclotomic(p).evaluate(q), x ** (q - 1)


def recombine_single(t1: ExtFieldElement, tp: ExtFieldElement) -> ExtFieldElement:
    """Reverse of decompose_single up to p-th powers: returns t1 * tp^b."""
    field = t1._same_field(tp)
    p, q = field.n, field.q
    if not is_prime(p):
        raise ValueError("recombine_single needs a prime extension degree")
    return t1 * tp ** _single_prime_cofactor(p, q)


# -- subfield embeddings -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class _Embedding:
    small: ExtField
    big: ExtField
    powers: tuple[ExtFieldElement, ...]  # images of 1, g, g^2, ..., g^{d-1}


def _frobenius_matrix(field: ExtField) -> list[list[int]]:
    # column j = coordinates of (X^j)^q mod modulus
    q, n = field.q, field.n
    mod = tuple(field.modulus.coeffs)
    cols = []
    for j in range(n):
        img = _ppowmod((0,) * j + (1,), q, mod, q)
        cols.append(list(img) + [0] * (n - len(img)))
    return [[cols[j][i] for j in range(n)] for i in range(n)]  # row-major


def _mat_mul(a, b, q):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) % q for j in range(n)] for i in range(n)]


def _nullspace(m, q) -> list[list[int]]:
    """Basis of the right nullspace of m over F_q (Gaussian elimination)."""
    n = len(m)
    a = [row[:] for row in m]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, n) if a[i][col] % q), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], -1, q)
        a[row] = [c * inv % q for c in a[row]]
        for i in range(n):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [(c - f * d) % q for c, d in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for rr, pc in enumerate(pivots):
            vec[pc] = (-a[rr][fc]) % q
        basis.append(vec)
    return basis


@lru_cache(maxsize=None)
def _embedding(small: ExtField, big: ExtField) -> _Embedding:
    if small.q != big.q:
        raise ValueError("fields have different characteristics")
    d, n, q = small.n, big.n, big.q
    if n % d:
        raise ValueError(f"degree {d} does not divide {n}")
    frob = _frobenius_matrix(big)
    m = frob
    for _ in range(d - 1):
        m = _mat_mul(m, frob, q)
    m_minus_i = [[(m[i][j] - (1 if i == j else 0)) % q for j in range(n)] for i in range(n)]
    basis = _nullspace(m_minus_i, q)
    assert len(basis) == d, "Frobenius-fixed subspace must have dimension d"

    # all q^d subfield elements, scanned in canonical (coefficient-lex) order
    def combo(cs):
        vec = [0] * n
        for c, bvec in zip(cs, basis):
            if c:
                for i, bv in enumerate(bvec):
                    vec[i] = (vec[i] + c * bv) % q
        return tuple(vec)

    candidates = sorted(combo(cs) for cs in itertools.product(range(q), repeat=d))
    fsmall = small.modulus
    beta = None
    for cand in candidates:
        elem = ExtFieldElement(big, cand)
        acc = big.zero
        for c in reversed(fsmall.coeffs):
            acc = acc * elem + big.element((c,))
        if acc.is_zero:
            beta = elem
            break
    assert beta is not None, "the subfield modulus must split in the big field"
    powers = [big.one]
    for _ in range(d - 1):
        powers.append(powers[-1] * beta)
    return _Embedding(small=small, big=big, powers=tuple(powers))


def subfield_embed(x: ExtFieldElement, big: ExtField) -> ExtFieldElement:
    """Ring embedding of x into the larger field.

    Determined by sending the generator class of x's field to the
    canonically smallest root of its modulus in the big field, so the map
    is deterministic and multiplicative.
    """
    emb = _embedding(x.field, big)
    out = big.zero
    for c, pw in zip(x.coeffs, emb.powers):
        if c:
            out = out + pw.scale(c)
    return out


def subfield_extract(y: ExtFieldElement, small: ExtField) -> ExtFieldElement:
    """Inverse of subfield_embed on its image; raises if y is not in the image."""
    emb = _embedding(small, y.field)
    q, n, d = y.field.q, y.field.n, small.n
    # solve sum c_i * powers[i] = y over F_q
    aug = [[emb.powers[j].coeffs[i] for j in range(d)] + [y.coeffs[i]] for i in range(n)]
    row = 0
    pivots = []
    for col in range(d):
        piv = next((i for i in range(row, n) if aug[i][col] % q), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = pow(aug[row][col], -1, q)
        aug[row] = [c * inv % q for c in aug[row]]
        for i in range(n):
            if i != row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [(c - f * dd) % q for c, dd in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    if len(pivots) != d:
        raise AssertionError("embedding powers must be independent")
    sol = [0] * d
    for rr, pc in enumerate(pivots):
        sol[pc] = aug[rr][d]
    for i in range(row, n):
        if aug[i][d] % q:
            raise ValueError("element is not in the subfield image")
    # consistency rows above row index are already zeroed by elimination
    check = subfield_embed(small.element(sol), y.field)
    if check != y:
        raise ValueError("element is not in the subfield image")
    return small.element(sol)


# -- the near-bijective parametrization --------------------------------------


def theta(
    x: ExtFieldElement,
    xp: ExtFieldElement,
    xr: ExtFieldElement,
    params: TorusParams,
) -> tuple[ExtFieldElement, ExtFieldElement]:
    """Map (x in T_pr, xp in F_{q^p}^x, xr in F_{q^r}^x) to (x1 in F_q^x, x_pr).

    xp's norm to T_1 becomes the standalone first output; the tuple
    (xr^{Phi_r(q)}, xp^{q-1}, xr^{q-1}, x) is recombined into the second.
    Coordinate counts balance: phi(pr) + p + r = 1 + pr.
    """
    q, p, r, n = params.q, params.pair.p, params.pair.r, params.pair.n
    big = _check_big_field(x, params)
    if not torus_membership(x, n):
        raise TorusMembershipError("first argument is outside T_pr")
    if xp.is_zero or xr.is_zero:
        raise ValueError("subfield inputs must be nonzero")
    if xp.field.q != q or xp.field.n != p:
        raise ValueError("second argument must live in a degree-p extension")
    if xr.field.q != q or xr.field.n != r:
        raise ValueError("third argument must live in a degree-r extension")
    ep = subfield_embed(xp, big)
    er = subfield_embed(xr, big)
    x1_big = ep ** cyclotomic(p).evaluate(q)
    comps = TorusComponents(
        t1=er ** cyclotomic(r).evaluate(q),
        tp=ep ** (q - 1),
        tr=er ** (q - 1),
        tpr=x,
    )
    xpr = recombine(comps, params)
    assert not any(x1_big.coeffs[1:]), "the T_1 output must be a prime-field constant"
    x1 = make_ext_field(q, 1).element((x1_big.coeffs[0],))
    return x1, xpr


def theta_reverse(
    x1: ExtFieldElement,
    xpr: ExtFieldElement,
    params: TorusParams,
) -> tuple[ExtFieldElement, ExtFieldElement, ExtFieldElement]:
    """Reverse parametrization: decompose x_pr, then rebuild the subfield slots.

    Composing with theta multiplies each input slot by a fixed exponent
    (see composite_exponents); the deviation from the identity is
    annihilated by a power of p*r.
    """
    q, p, r = params.q, params.pair.p, params.pair.r
    if x1.field.n != 1 or x1.field.q != q:
        raise ValueError("first argument must be a prime-field element")
    if x1.is_zero:
        raise ValueError("first argument must be nonzero")
    big = _check_big_field(xpr, params)
    comps = decompose(xpr, params)
    x1_big = subfield_embed(x1, big)
    xp_big = x1_big * comps.tp ** _single_prime_cofactor(p, q)
    xr_big = comps.t1 * comps.tr ** _single_prime_cofactor(r, q)
    xp_small = subfield_extract(xp_big, make_ext_field(q, p))
    xr_small = subfield_extract(xr_big, make_ext_field(q, r))
    return comps.tpr, xp_small, xr_small


def theta_dimensions(p: int, r: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Coordinate counts of theta's domain and codomain from the Moebius split.

    Divisors d of n = p*r with moebius(n/d) = -1 contribute F_{q^d} factors
    to the domain (next to the phi(n)-dimensional torus); those with
    moebius(n/d) = +1 make up the codomain.
    """
    pair = PrimePair.of(p, r)
    n = pair.n
    ins = (euler_phi(n),) + tuple(d for d in divisors(n) if moebius(n // d) == -1)
    outs = tuple(d for d in divisors(n) if moebius(n // d) == +1)
    return ins, outs


def composite_exponents(params: TorusParams) -> tuple[int, int, int]:
    """Fixed exponents (d_x, d_p, d_r) of theta_reverse composed with theta.

    The T_pr slot returns exactly x^{pr}; this is asserted symbolically by
    reducing U_pr * u_pr * v1 - p*r modulo Phi_pr. The subfield slots pick
    up the integer exponents computed here.
    """
    q, p, r, n = params.q, params.pair.p, params.pair.r, params.pair.n
    u_pr_poly, rem = divrem_exact(IntPoly.monomial(n) - IntPoly.one(), cyclotomic(n))
    assert rem.is_zero
    witness = u_pr_poly * params.u_pr * params.v1 - IntPoly.constant(n)
    _, sym_rem = divrem_exact(witness, cyclotomic(n))
    assert sym_rem.is_zero, "T_pr slot exponent must reduce to p*r"
    d_x = n
    phi1_q = q - 1
    a_q = (
        cyclotomic(r).evaluate(q) * params.u1_q * params.v1_q
        + phi1_q * params.u_r_q * params.v2_q
    )
    b_q = phi1_q * params.u_p_q * params.v2_q
    d_p = cyclotomic(p).evaluate(q) + _single_prime_cofactor(p, q) * params.norm_exponents[p] * b_q
    d_r = (params.norm_exponents[1] + _single_prime_cofactor(r, q) * params.norm_exponents[r]) * a_q
    return d_x, d_p, d_r


@dataclass(frozen=True)
class KernelReport:
    """Measured annihilator of the kernel of theta_reverse o theta."""

    d_x: int
    d_p: int
    d_r: int
    exponent: int  # group exponent of the composite map's kernel
    power: int  # least k with exponent | (p*r)^k


def kernel_annihilator(params: TorusParams) -> KernelReport:
    q, p, r, n = params.q, params.pair.p, params.pair.r, params.pair.n
    d_x, d_p, d_r = composite_exponents(params)
    e = math.lcm(
        math.gcd(d_x, cyclotomic(n).evaluate(q)),
        math.gcd(abs(d_p), q**p - 1),
        math.gcd(abs(d_r), q**r - 1),
    )
    for k in range(0, 65):
        if n**k % e == 0:
            return KernelReport(d_x=d_x, d_p=d_p, d_r=d_r, exponent=e, power=k)
    raise ArithmeticError(f"kernel exponent {e} is not {p},{r}-smooth")
