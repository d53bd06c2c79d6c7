"""Sparse polynomial functions on a field and their GAPN analysis.

A SparsePoly represents a function GF(p^n) -> GF(p^n) by its nonzero terms,
with exponents in 0..q-1 kept as-is (X^(q-1) and X^0 differ at X = 0).  The
order-(p-1) discrete derivative in direction a is the map
X -> sum over i in F_p of F(X + i*a); it is constant on the cosets of the
line F_p*a, so it is computed on one representative per coset.  A function
is GAPN exactly when every such derivative at a != 0 is p-to-1.
"""

from dataclasses import dataclass

from .fields import FieldCtx, FieldElem


def digit_sum(p: int, u: int) -> int:
    """Sum of the base-p digits of a non-negative integer."""
    if u < 0:
        raise ValueError("digit_sum is defined for non-negative integers")
    s = 0
    while u:
        u, r = divmod(u, p)
        s += r
    return s


class SparsePoly:
    """Function GF(p^n) -> GF(p^n) as sorted (exponent, coefficient) terms.

    Duplicate exponents are merged and zero coefficients dropped on
    construction; exponents must lie in 0..q-1.
    """

    __slots__ = ("field", "terms", "_vt")

    def __init__(self, field: FieldCtx, terms):
        merged: dict[int, FieldElem] = {}
        for exp, coeff in terms:
            exp = int(exp)
            if not 0 <= exp <= field.q - 1:
                raise ValueError(f"exponent {exp} out of range 0..{field.q - 1}")
            if not isinstance(coeff, FieldElem):
                raise TypeError("coefficients must be field elements")
            if coeff.ctx is not field and coeff.ctx.key != field.key:
                raise ValueError("coefficient from a different field")
            prev = merged.get(exp)
            merged[exp] = coeff if prev is None else prev + coeff
        self.field = field
        self.terms = tuple(sorted((e, c) for e, c in merged.items() if not c.is_zero()))
        self._vt = None

    @classmethod
    def monomial(cls, field: FieldCtx, exp: int, coeff: FieldElem | None = None) -> "SparsePoly":
        return cls(field, [(exp, field.one if coeff is None else coeff)])

    def is_zero(self) -> bool:
        return not self.terms

    def algebraic_degree(self) -> int | None:
        """Max base-p digit sum over exponents; None for the zero function."""
        if not self.terms:
            return None
        p = self.field.p
        return max(digit_sum(p, e) for e, _ in self.terms)

    def evaluate(self, x: FieldElem) -> FieldElem:
        if x.ctx is not self.field and x.ctx.key != self.field.key:
            raise ValueError("argument from a different field")
        acc = self.field.zero
        for exp, coeff in self.terms:
            acc = acc + coeff * x ** exp
        return acc

    def value_table(self) -> list[int]:
        """Codes of F(x) for every x code 0..q-1 (cached)."""
        if self._vt is not None:
            return self._vt
        ctx = self.field
        q = ctx.q
        out = [0] * q
        for exp, coeff in self.terms:
            if exp == 0:
                out[0] = coeff.code  # 0^0 = 1; higher terms vanish at 0
        if self.terms:
            add = ctx.add_code
            antilog = ctx.antilog
            m = q - 1
            tls = [(exp, coeff.idx) for exp, coeff in self.terms]
            for k in range(m):
                acc = 0
                for exp, ci in tls:
                    acc = add(acc, antilog[(ci + exp * k) % m])
                out[antilog[k]] = acc
        self._vt = out
        return out

    def restrict_min_digit_sum(self, min_sum: int) -> "SparsePoly":
        """Copy keeping only terms whose exponent has digit sum >= min_sum."""
        p = self.field.p
        return SparsePoly(self.field, [(e, c) for e, c in self.terms if digit_sum(p, e) >= min_sum])

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return NotImplemented
        if other.field.key != self.field.key:
            raise ValueError("polynomials over different fields")
        return SparsePoly(self.field, list(self.terms) + list(other.terms))

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.field.key == other.field.key and self.terms == other.terms

    def __hash__(self):
        return hash((self.field.key, self.terms))

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "terms": [{"exp": e, "coeff": list(c.vector())} for e, c in self.terms],
        }

    def __repr__(self):
        if not self.terms:
            return f"SparsePoly(F{self.field.q}: 0)"
        body = " + ".join(f"{list(c.vector())}*X^{e}" for e, c in self.terms)
        return f"SparsePoly(F{self.field.q}: {body})"


def function_from_json(obj: dict, table_cap=None) -> SparsePoly:
    """Parse {"field": {...}, "terms": [{"exp": int, "coeff": [int,...]}]}."""
    from .fields import DEFAULT_TABLE_CAP, field_from_json

    cap = DEFAULT_TABLE_CAP if table_cap is None else table_cap
    ctx = field_from_json(obj["field"], table_cap=cap)
    terms = [(int(t["exp"]), ctx.element(t["coeff"])) for t in obj["terms"]]
    return SparsePoly(ctx, terms)


@dataclass
class DerivativeMap:
    """Total map of one order-(p-1) derivative plus its fiber histogram.

    values[x] is the element code of the derivative at the element with
    code x; fiber_histogram maps each image code to its preimage count
    (always a multiple of p, by constancy on cosets of the line).
    """

    direction: FieldElem
    values: list[int]
    fiber_histogram: dict[int, int]

    def value_at(self, x: FieldElem) -> FieldElem:
        return self.direction.ctx.from_code(self.values[x.code])


def derivative(f: SparsePoly, a: FieldElem) -> DerivativeMap:
    """Order-(p-1) discrete derivative of f in direction a != 0.

    Computed once per coset of F_p*a and replicated across the coset.
    """
    ctx = f.field
    if a.ctx is not ctx and a.ctx.key != ctx.key:
        raise ValueError("direction from a different field")
    if a.is_zero():
        raise ValueError("derivative direction must be nonzero")
    q, p = ctx.q, ctx.p
    gt = f.value_table()
    add = ctx.add_code
    span = [0]
    c = 0
    for _ in range(p - 1):
        c = add(c, a.code)
        span.append(c)
    assert len(set(span)) == p
    values = [0] * q
    hist: dict[int, int] = {}
    seen = bytearray(q)
    for x in range(q):
        if seen[x]:
            continue
        coset = [add(x, v) for v in span]
        s = 0
        for y in coset:
            seen[y] = 1
            s = add(s, gt[y])
        for y in coset:
            values[y] = s
        hist[s] = hist.get(s, 0) + p
    assert all(seen)
    return DerivativeMap(a, values, hist)


def is_p_to_one(m: DerivativeMap) -> tuple[bool, int]:
    """Whether every fiber has size 0 or p; also returns the max fiber."""
    mx = max(m.fiber_histogram.values())
    return mx == m.direction.ctx.p, mx


@dataclass
class GapnVerdict:
    """Outcome of checking all derivative directions of one function.

    is_gapn holds exactly when worst_fiber <= p, i.e. every derivative is
    p-to-1.  witness is a pair (a, b) with fiber size of b under the
    derivative at a exceeding p (smallest direction code, then smallest
    image code); per_direction lists (a, max fiber) for the directions that
    were scanned.
    """

    is_gapn: bool
    worst_fiber: int
    witness: tuple[FieldElem, FieldElem] | None
    per_direction: list[tuple[FieldElem, int]]

    def to_json(self) -> dict:
        wit = None
        if self.witness is not None:
            a, b = self.witness
            wit = {"a": list(a.vector()), "b": list(b.vector())}
        return {"is_gapn": self.is_gapn, "worst_fiber": self.worst_fiber, "witness": wit}


def is_gapn(f: SparsePoly, fail_fast: bool = False) -> GapnVerdict:
    """Exhaustive GAPN check over all q-1 directions.

    Directions on the same line F_p*a share one derivative, so fiber
    statistics are computed once per line and attributed to every direction
    on it.  With fail_fast, scanning stops at the first failing line (its
    per-direction stats stay exact; later directions are not reported).
    """
    ctx = f.field
    q, p = ctx.q, ctx.p
    gt = f.value_table()
    add = ctx.add_code
    maxf = [0] * q
    handled = bytearray(q)
    handled[0] = 1
    worst = 0
    witness = None
    for a in range(1, q):
        if handled[a]:
            continue
        span = [0]
        c = 0
        for _ in range(p - 1):
            c = add(c, a)
            span.append(c)
        counts: dict[int, int] = {}
        seen = bytearray(q)
        for x in range(q):
            if seen[x]:
                continue
            s = 0
            for v in span:
                y = add(x, v)
                seen[y] = 1
                s = add(s, gt[y])
            counts[s] = counts.get(s, 0) + 1
        mx = p * max(counts.values())
        for v in span[1:]:
            handled[v] = 1
            maxf[v] = mx
        if mx > worst:
            worst = mx
        if mx > p and witness is None:
            b = min(s for s, cnt in counts.items() if cnt > 1)
            witness = (ctx.from_code(a), ctx.from_code(b))
            if fail_fast:
                break
    per_direction = [(ctx.from_code(a), maxf[a]) for a in range(1, q) if maxf[a]]
    return GapnVerdict(witness is None, worst, witness, per_direction)


def verify_power_identity(ctx: FieldCtx, d: int) -> bool:
    """Check that over GF(p^2) the derivative of X^d at direction 1
    satisfies D(x)^p == (-1)^d * D(x) for every x."""
    if ctx.n != 2:
        raise ValueError("the power identity is specific to quadratic extensions")
    if not 0 <= d <= ctx.q - 1:
        raise ValueError(f"exponent must lie in 0..{ctx.q - 1}")
    dm = derivative(SparsePoly.monomial(ctx, d), ctx.one)
    for code in set(dm.values):
        y = ctx.from_code(code)
        rhs = y if d % 2 == 0 else -y
        if y.frobenius(1) != rhs:
            return False
    return True
