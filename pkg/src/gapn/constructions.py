"""Closed-form GAPN criteria and the binomial/trinomial builders.

Monomial criteria cover exponents of the form k*p^r1 + l*p^r2.  Binomials
X^d1 + u*X^d2 with a GAPN first term are certified through conditions on u
and d2 - d1; three explicit families realize every odd algebraic degree in
[p, 2(p-1)] and, for non-Mersenne p, every even degree as well.  Trinomials
u*X^(2p-1) + v*X^(3p-2) + X^(h(p+1)) close the even-degree gap for the
remaining primes, subject to a root-freeness condition on the subgroup of
(p-1)-th powers.
"""

import math
from dataclasses import dataclass

from .fields import FieldCtx, FieldElem, make_field
from .polynomials import SparsePoly, derivative


@dataclass
class ConstructionRecipe:
    """A built GAPN function together with the parameters that produced it."""

    family: str  # odd-binomial | mod3-binomial | even-binomial | trinomial
    p: int
    params: dict
    result: SparsePoly
    claimed_degree: int

    def __post_init__(self):
        actual = self.result.algebraic_degree()
        if actual != self.claimed_degree:
            raise AssertionError(
                f"claimed degree {self.claimed_degree} but built degree {actual}"
            )
        if not self.p <= self.claimed_degree <= 2 * (self.p - 1):
            raise AssertionError("degree outside [p, 2(p-1)]")

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "p": self.p,
            "params": self.params,
            "degree": self.claimed_degree,
        }


def _digit_args(p: int, n: int, k: int, l: int, r1: int, r2: int) -> None:
    if not (0 <= k <= p - 1 and 0 <= l <= p - 1):
        raise ValueError(f"digits k, l must lie in 0..{p - 1}")
    if not (0 <= r1 < n and 0 <= r2 < n and r1 != r2):
        raise ValueError(f"powers r1, r2 must be distinct and lie in 0..{n - 1}")
    if not p <= k + l < 2 * (p - 1):
        raise ValueError(f"k + l must lie in {p}..{2 * (p - 1) - 1}")


def monomial_gapn_sufficient(p: int, n: int, k: int, l: int, r1: int, r2: int) -> bool:
    """Sufficient criterion for X^(k*p^r1 + l*p^r2) to be GAPN over GF(p^n)."""
    _digit_args(p, n, k, l, r1, r2)
    return math.gcd(r1 - r2, n) == 1 and math.gcd(k + l - (p - 1), p ** n - 1) == 1


def monomial_gapn_necessary(p: int, n: int, k: int, l: int, r1: int, r2: int) -> bool:
    """Necessary criterion for the same monomials: a False return proves the
    monomial is not GAPN; a True return decides nothing on its own."""
    _digit_args(p, n, k, l, r1, r2)
    if math.gcd(r1 - r2, n) != 1:
        return False
    for n1 in range(1, n):
        if n % n1 == 0 and math.gcd(k + l - (p - 1), p ** n1 - 1) != 1:
            return False
    return True


def binomial_reduction_vanishes(ctx: FieldCtx, d1: int, d2: int, u: FieldElem, a: FieldElem) -> bool:
    """Whether the multiplier that reduces the derivative of X^d1 + u*X^d2 to
    the derivative of X^d1 degenerates at direction a, i.e. whether
    (-1)^(d2+1) * (u * a^(d2-d1))^(p-1) == 1."""
    if ctx.n != 2:
        raise ValueError("reduction test is specific to quadratic extensions")
    if u.is_zero() or a.is_zero():
        raise ValueError("u and a must be nonzero")
    val = (u * a ** (d2 - d1)) ** (ctx.p - 1)
    if (d2 + 1) % 2 == 1:
        val = -val
    return val == ctx.one


def binomial_gapn_sufficient(ctx: FieldCtx, d1: int, d2: int, u: FieldElem) -> bool:
    """Sufficient condition for X^d1 + u*X^d2 over GF(p^2) to be GAPN, given
    a GAPN X^d1 (the caller's obligation): either d2 is odd and u is a
    non-square, or d2 is even and some odd N >= 3 divides both p+1 and
    d2 - d1 with u not an N-th power."""
    if ctx.n != 2:
        raise ValueError("binomial criterion is specific to quadratic extensions")
    if u.is_zero():
        raise ValueError("u must be nonzero")
    p = ctx.p
    if d2 % 2 == 1:
        return not u.is_nth_power(2)
    for n_th in range(3, p + 2, 2):
        if (p + 1) % n_th == 0 and (d2 - d1) % n_th == 0 and not u.is_nth_power(n_th):
            return True
    return False


def odd_part(m: int) -> int:
    """Largest odd divisor, by repeated halving."""
    if m < 1:
        raise ValueError("argument must be a positive integer")
    while m % 2 == 0:
        m //= 2
    return m


def is_mersenne(p: int) -> bool:
    """Whether p+1 is a power of two."""
    return odd_part(p + 1) == 1


def _quadratic_ctx(p: int, ctx: FieldCtx | None) -> FieldCtx:
    if ctx is None:
        return make_field(p, 2)
    if ctx.p != p or ctx.n != 2:
        raise ValueError(f"context is not GF({p}^2)")
    return ctx


def build_odd_binomial(p: int, k: int, l: int, ctx: FieldCtx | None = None) -> ConstructionRecipe:
    """X^(2p-1) + g*X^(kp+l) with k+l odd: GAPN of degree max(p, k+l)."""
    ctx = _quadratic_ctx(p, ctx)
    if not (0 <= k <= p - 1 and 0 <= l <= p - 1):
        raise ValueError(f"digits k, l must lie in 0..{p - 1}")
    if (k + l) % 2 == 0:
        raise ValueError("k + l must be odd")
    g = ctx.primitive_element
    result = SparsePoly(ctx, [(2 * p - 1, ctx.one), (k * p + l, g)])
    return ConstructionRecipe(
        "odd-binomial",
        p,
        {"k": k, "l": l, "u": list(g.vector())},
        result,
        max(p, k + l),
    )


def build_mod3_binomial(p: int, h: int, ctx: FieldCtx | None = None) -> ConstructionRecipe:
    """X^(2p-1) + g*X^(h(p+1)) for p = 2 mod 3: GAPN of degree max(p, 2h)."""
    if p % 3 != 2:
        raise ValueError(f"p must be 2 mod 3, got {p}")
    ctx = _quadratic_ctx(p, ctx)
    if not 1 <= h <= p - 1:
        raise ValueError(f"h must lie in 1..{p - 1}")
    g = ctx.primitive_element
    result = SparsePoly(ctx, [(2 * p - 1, ctx.one), (h * (p + 1), g)])
    return ConstructionRecipe(
        "mod3-binomial",
        p,
        {"h": h, "u": list(g.vector())},
        result,
        max(p, 2 * h),
    )


def build_even_binomial(p: int, h: int, ctx: FieldCtx | None = None) -> ConstructionRecipe:
    """X^((p^2+p-N(p-1))/2) + g*X^(h(p+1)) with N the odd part of p+1:
    GAPN of degree max(p, 2h) whenever p is not Mersenne."""
    n_odd = odd_part(p + 1)
    if n_odd == 1:
        raise ValueError(f"p = {p} is a Mersenne prime, no even-degree binomial here")
    ctx = _quadratic_ctx(p, ctx)
    if not 1 <= h <= p - 1:
        raise ValueError(f"h must lie in 1..{p - 1}")
    k1 = (p - n_odd) // 2
    l1 = (p + n_odd) // 2
    d1 = k1 * p + l1
    d2 = h * (p + 1)
    # the two facts the certificate rests on
    assert k1 + l1 - (p - 1) == 1
    assert (d2 - d1) % n_odd == 0
    g = ctx.primitive_element
    result = SparsePoly(ctx, [(d1, ctx.one), (d2, g)])
    return ConstructionRecipe(
        "even-binomial",
        p,
        {"h": h, "N": n_odd, "k1": k1, "l1": l1, "u": list(g.vector())},
        result,
        max(p, 2 * h),
    )


def p_to_one_condition(ctx: FieldCtx, s: int, coeffs, a: FieldElem) -> bool:
    """Closed-form test that the derivative at direction a of
    sum_{i=s}^{p-1} c_i X^(i*p + (p-1+s-i)) over GF(p^2) is p-to-1:
    sum_{i=0}^{p-1-s} c_{i+s} * C(p-1-s, i) * (-a^(p-1))^i != 0.

    coeffs lists c_s..c_{p-1}; zero entries are allowed.
    """
    if ctx.n != 2:
        raise ValueError("condition is specific to quadratic extensions")
    p = ctx.p
    if not 1 <= s <= p - 2:
        raise ValueError(f"s must lie in 1..{p - 2}")
    if math.gcd(s, ctx.q - 1) != 1:
        raise ValueError(f"s must be coprime to {ctx.q - 1}")
    if a.is_zero():
        raise ValueError("direction a must be nonzero")
    coeffs = list(coeffs)
    if len(coeffs) != p - s:
        raise ValueError(f"expected {p - s} coefficients c_{s}..c_{p - 1}")
    base = -(a ** (p - 1))
    term = ctx.one
    acc = ctx.zero
    for i in range(p - s):
        bc = math.comb(p - 1 - s, i) % p
        acc = acc + ctx.scalar(bc) * coeffs[i] * term
        term = term * base
    return not acc.is_zero()


def trinomial_condition(ctx: FieldCtx, u: FieldElem, v: FieldElem) -> bool:
    """Whether 2v*A^5 + u*A^4 + u^p*A + 2v^p is nonzero on the whole
    subgroup of (p-1)-th powers (the p+1 solutions of A^(p+1) = 1)."""
    if ctx.n != 2:
        raise ValueError("trinomial condition is specific to quadratic extensions")
    if u.is_zero() or v.is_zero():
        raise ValueError("u and v must be nonzero")
    two = ctx.scalar(2)
    up = u.frobenius(1)
    vp = v.frobenius(1)
    for big_a in ctx.subgroup(ctx.p - 1):
        val = two * v * big_a ** 5 + u * big_a ** 4 + up * big_a + two * vp
        if val.is_zero():
            return False
    return True


def find_trinomial_u(ctx: FieldCtx, v: FieldElem | None = None) -> FieldElem:
    """First u (ascending discrete-log index) passing trinomial_condition
    with v = 1/2 by default; requires p > 3."""
    if ctx.n != 2:
        raise ValueError("trinomial search is specific to quadratic extensions")
    if ctx.p <= 3:
        raise ValueError("the trinomial coefficient search requires p > 3")
    if v is None:
        v = ctx.scalar(2).inv()
    for u in ctx.units():
        if trinomial_condition(ctx, u, v):
            return u
    raise RuntimeError("no admissible trinomial coefficient u exists in this field")


def build_trinomial(
    p: int,
    h: int,
    u: FieldElem | None = None,
    v: FieldElem | None = None,
    ctx: FieldCtx | None = None,
) -> ConstructionRecipe:
    """u*X^(2p-1) + v*X^(3p-2) + X^(h(p+1)): GAPN of degree max(p, 2h),
    provided (u, v) passes trinomial_condition.  Omitted coefficients
    default to v = 1/2 and the first admissible u."""
    ctx = _quadratic_ctx(p, ctx)
    if not 0 <= h <= p - 1:
        raise ValueError(f"h must lie in 0..{p - 1}")
    if v is None:
        v = ctx.scalar(2).inv()
    if u is None:
        u = find_trinomial_u(ctx, v)
    elif not trinomial_condition(ctx, u, v):
        raise ValueError("coefficients (u, v) fail the trinomial condition")
    result = SparsePoly(ctx, [(2 * p - 1, u), (3 * p - 2, v), (h * (p + 1), ctx.one)])
    return ConstructionRecipe(
        "trinomial",
        p,
        {"h": h, "u": list(u.vector()), "v": list(v.vector())},
        result,
        max(p, 2 * h),
    )


def derivative_conjugate_premise(f: SparsePoly, r: int) -> FieldElem | None:
    """The constant c with D(x)^(p^r) == c*D(x) for all x, where D is the
    derivative of f at direction 1; None if no such constant exists.
    An identically-zero derivative returns c = 0.

    For n > 2, any f admitting such a constant cannot be GAPN.
    """
    ctx = f.field
    if not 1 <= r <= ctx.n - 1:
        raise ValueError(f"r must lie in 1..{ctx.n - 1}")
    dm = derivative(f, ctx.one)
    distinct = set(dm.values)
    nonzero = sorted(code for code in distinct if code != 0)
    if not nonzero:
        return ctx.zero
    y0 = ctx.from_code(nonzero[0])
    c = y0.frobenius(r) / y0
    for code in nonzero[1:]:
        y = ctx.from_code(code)
        if y.frobenius(r) != c * y:
            return None
    return c
