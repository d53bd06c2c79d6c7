"""Exact arithmetic in GF(p^n) for odd primes p.

A FieldCtx is an immutable description of one field: the modulus polynomial,
the log/antilog tables and the canonical generator g (the residue class of
x).  Construction is deterministic: when no modulus is supplied, the
lexicographically smallest primitive monic polynomial (coefficient vectors
compared constant term first) is selected, so the same (p, n) always yields
identical tables and g = x.

Elements are identified by an integer "code" in 0..q-1 whose base-p digits
are the coefficients in the basis {1, x, ..., x^(n-1)}, constant term first.
Nonzero elements are carried as discrete-log indices, which turns
multiplication into index addition and powering by huge exponents into a
single modular multiply; addition drops down to coefficient vectors.
"""

import math
from itertools import product

DEFAULT_TABLE_CAP = 1 << 22

_ZERO_IDX = -1


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


class FieldElem:
    """One element of a specific FieldCtx.

    Stored as the discrete-log index of the element (-1 for zero);
    elements from different fields never combine.
    """

    __slots__ = ("ctx", "idx")

    def __init__(self, ctx: "FieldCtx", idx: int):
        self.ctx = ctx
        self.idx = idx

    @property
    def code(self) -> int:
        return 0 if self.idx == _ZERO_IDX else self.ctx.antilog[self.idx]

    def vector(self) -> tuple[int, ...]:
        """Coefficient vector over F_p, constant term first."""
        return self.ctx.code_to_vector(self.code)

    def is_zero(self) -> bool:
        return self.idx == _ZERO_IDX

    def _check_same(self, other):
        if not isinstance(other, FieldElem):
            raise TypeError(f"expected a field element, got {type(other).__name__}")
        if self.ctx is not other.ctx and self.ctx.key != other.ctx.key:
            raise ValueError("elements from different fields cannot be combined")

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._check_same(other)
        return self.ctx.from_code(self.ctx.add_code(self.code, other.code))

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        self._check_same(other)
        return self + (-other)

    def __neg__(self) -> "FieldElem":
        if self.idx == _ZERO_IDX:
            return self
        m = self.ctx.q - 1
        return FieldElem(self.ctx, (self.idx + m // 2) % m)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        self._check_same(other)
        if self.idx == _ZERO_IDX or other.idx == _ZERO_IDX:
            return self.ctx.zero
        return FieldElem(self.ctx, (self.idx + other.idx) % (self.ctx.q - 1))

    def inv(self) -> "FieldElem":
        if self.idx == _ZERO_IDX:
            raise ValueError("zero has no multiplicative inverse")
        return FieldElem(self.ctx, (-self.idx) % (self.ctx.q - 1))

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        self._check_same(other)
        return self * other.inv()

    def __pow__(self, e: int) -> "FieldElem":
        """y**e for any integer e, with 0**0 = 1 and 0**e = 0 for e > 0."""
        if self.idx == _ZERO_IDX:
            if e == 0:
                return self.ctx.one
            if e > 0:
                return self
            raise ValueError("zero cannot be raised to a negative power")
        return FieldElem(self.ctx, (self.idx * e) % (self.ctx.q - 1))

    def frobenius(self, r: int = 1) -> "FieldElem":
        """y^(p^r); additive, multiplicative, fixes the prime subfield."""
        if not 0 <= r < self.ctx.n:
            raise ValueError(f"frobenius power must lie in 0..{self.ctx.n - 1}")
        if self.idx == _ZERO_IDX:
            return self
        m = self.ctx.q - 1
        return FieldElem(self.ctx, (self.idx * pow(self.ctx.p, r, m)) % m)

    def trace(self) -> "FieldElem":
        """Absolute trace: sum of y^(p^r) for r = 0..n-1; lies in F_p."""
        ctx = self.ctx
        acc = 0
        for r in range(ctx.n):
            acc = ctx.add_code(acc, self.frobenius(r).code)
        return ctx.from_code(acc)

    def order(self) -> int:
        """Multiplicative order of a nonzero element; divides q-1."""
        if self.idx == _ZERO_IDX:
            raise ValueError("zero has no multiplicative order")
        m = self.ctx.q - 1
        return m // math.gcd(self.idx, m)

    def is_nth_power(self, n_th: int) -> bool:
        """Whether y = z^N for some z, tested as y^((q-1)/gcd(N, q-1)) == 1."""
        if self.idx == _ZERO_IDX:
            raise ValueError("the N-th power test requires a nonzero element")
        if n_th <= 0:
            raise ValueError("N must be a positive integer")
        e = (self.ctx.q - 1) // math.gcd(n_th, self.ctx.q - 1)
        return (self ** e).idx == 0

    def __eq__(self, other):
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.idx == other.idx and self.ctx.key == other.ctx.key

    def __hash__(self):
        return hash((self.ctx.key, self.idx))

    def __bool__(self):
        return self.idx != _ZERO_IDX

    def __repr__(self):
        return f"F{self.ctx.q}{list(self.vector())}"


class FieldCtx:
    """Immutable context for GF(p^n): modulus, tables, canonical generator.

    Safe to share across workers; every operation is a pure function of its
    inputs.  Do not instantiate directly, use make_field.
    """

    def __init__(self, p, n, modulus, antilog, log):
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = tuple(modulus)
        self.antilog = antilog
        self.log = log
        self.key = (p, n, self.modulus)
        # digit cache makes add_code a table walk; skipped for huge fields
        if self.q <= (1 << 16):
            self._dig = [self._decompose(c) for c in range(self.q)]
        else:
            self._dig = None
        self.zero = FieldElem(self, _ZERO_IDX)
        self.one = FieldElem(self, 0)
        self.primitive_element = FieldElem(self, 1)

    def _decompose(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def code_to_vector(self, code: int) -> tuple[int, ...]:
        return self._dig[code] if self._dig is not None else self._decompose(code)

    def vector_to_code(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            raise ValueError(f"coefficient vector longer than extension degree {self.n}")
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + int(c) % self.p
        return code

    def add_code(self, c1: int, c2: int) -> int:
        """Field addition on element codes (digit-wise mod p)."""
        p = self.p
        if self.n == 2:
            return (c1 + c2) % p + p * ((c1 // p + c2 // p) % p)
        out = 0
        mult = 1
        for _ in range(self.n):
            out += ((c1 + c2) % p) * mult
            c1 //= p
            c2 //= p
            mult *= p
        return out

    # --- element factories ---

    def from_code(self, code: int) -> FieldElem:
        if not 0 <= code < self.q:
            raise ValueError(f"element code out of range 0..{self.q - 1}")
        return FieldElem(self, self.log[code])

    def element(self, coeffs) -> FieldElem:
        return self.from_code(self.vector_to_code(coeffs))

    def scalar(self, k: int) -> FieldElem:
        """Embed an integer into the prime subfield."""
        return self.from_code(k % self.p)

    def elements(self):
        """All q elements, by ascending code."""
        return (self.from_code(c) for c in range(self.q))

    def units(self):
        """All nonzero elements, by ascending discrete-log index."""
        return (FieldElem(self, i) for i in range(self.q - 1))

    def subgroup(self, m: int) -> list[FieldElem]:
        """The cyclic subgroup {g^(i*m)}, enumerated for i ascending."""
        if m <= 0:
            raise ValueError("subgroup exponent must be positive")
        count = (self.q - 1) // math.gcd(m, self.q - 1)
        return [FieldElem(self, (i * m) % (self.q - 1)) for i in range(count)]

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"FieldCtx(p={self.p}, n={self.n}, modulus={list(self.modulus)})"


def _build_tables(p: int, n: int, lower: list[int]):
    """Fill antilog/log for x modulo the monic polynomial with the given
    lower coefficients; returns None unless x has full order q-1 (which
    certifies the modulus both irreducible and primitive)."""
    q = p ** n
    mneg = [(-c) % p for c in lower]
    antilog = [0] * (q - 1)
    log = [_ZERO_IDX] * q
    antilog[0] = 1
    log[1] = 0
    cur = [1] + [0] * (n - 1)

    def shift(digits):
        carry = digits[-1]
        digits = [0] + digits[:-1]
        if carry:
            for i in range(n):
                digits[i] = (digits[i] + carry * mneg[i]) % p
        return digits

    for k in range(1, q - 1):
        cur = shift(cur)
        code = 0
        for i in range(n - 1, -1, -1):
            code = code * p + cur[i]
        if code == 0 or log[code] != _ZERO_IDX:
            return None
        antilog[k] = code
        log[code] = k
    if shift(cur) != [1] + [0] * (n - 1):
        return None
    return antilog, log


def _has_root(p: int, n: int, lower) -> bool:
    for r in range(p):
        acc = pow(r, n, p)
        for i, c in enumerate(lower):
            acc = (acc + c * pow(r, i, p)) % p
        if acc == 0:
            return True
    return False


def _prime_factors(m: int) -> list[int]:
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


def _poly_mulmod(p: int, n: int, mneg, s, t):
    # product of two residues mod the monic modulus; mneg holds -lower mod p
    prod = [0] * (2 * n - 1)
    for i, a in enumerate(s):
        if a:
            for j, b in enumerate(t):
                prod[i + j] = (prod[i + j] + a * b) % p
    for i in range(2 * n - 2, n - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(n):
                prod[i - n + j] = (prod[i - n + j] + c * mneg[j]) % p
    return prod[:n]


def _poly_pow(p: int, n: int, mneg, base, e: int):
    acc = [1] + [0] * (n - 1)
    while e:
        if e & 1:
            acc = _poly_mulmod(p, n, mneg, acc, base)
        base = _poly_mulmod(p, n, mneg, base, base)
        e >>= 1
    return acc


def _norm_constant_terms(p: int, n: int) -> set[int]:
    """Constant terms a primitive degree-n modulus can have: (-1)^n * c0 is
    the norm of the root, which must generate F_p*."""
    fac = _prime_factors(p - 1)
    sign = 1 if n % 2 == 0 else -1
    out = set()
    for c0 in range(1, p):
        val = (sign * c0) % p
        if all(pow(val, (p - 1) // r, p) != 1 for r in fac):
            out.add(c0)
    return out


def _order_screen(p: int, n: int, lower, factors) -> bool:
    """Exact primitivity test for the monic modulus with the given lower
    coefficients.  Irreducibility first, by walking the Frobenius chain
    x -> x^p: the modulus is irreducible iff x^(p^k) != x for k < n while
    x^(p^n) == x.  Then x generates the whole unit group iff x^((q-1)/r)
    != 1 for every prime r | q-1."""
    q = p ** n
    mneg = [(-c) % p for c in lower]
    x = [0, 1] + [0] * (n - 2) if n > 1 else [mneg[0] % p]
    t = x
    for _ in range(1, n):
        t = _poly_pow(p, n, mneg, t, p)
        if t == x:
            return False  # every factor degree divides k < n
    if _poly_pow(p, n, mneg, t, p) != x:
        return False  # some factor degree does not divide n
    one = [1] + [0] * (n - 1)
    for r in factors:
        if _poly_pow(p, n, mneg, x, (q - 1) // r) == one:
            return False
    return True


def _poly_rem(p: int, num, den):
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            off = i - dd
            for j, d in enumerate(den):
                num[off + j] = (num[off + j] - c * d) % p
    return num[:dd]


def _is_irreducible(p: int, n: int, coeffs) -> bool:
    # trial division by monic divisors of degree up to n/2; fine at desk scale
    if n == 1:
        return True
    for k in range(1, n // 2 + 1):
        for tail in product(range(p), repeat=k):
            den = list(tail) + [1]
            if not any(_poly_rem(p, coeffs, den)):
                return False
    return True


def make_field(p: int, n: int, modulus=None, table_cap: int = DEFAULT_TABLE_CAP) -> FieldCtx:
    """Build GF(p^n) for an odd prime p.

    With no modulus, scans monic degree-n polynomials in lexicographic order
    (constant term first) and takes the first primitive one, so x itself is
    the returned primitive element.  A supplied modulus must be monic of
    degree n and primitive, otherwise ValueError is raised.
    """
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    if n < 1:
        raise ValueError("extension degree must be at least 1")
    q = p ** n
    if q > table_cap:
        raise ValueError(f"field size {q} exceeds the table cap {table_cap}")

    if modulus is not None:
        m = [int(c) % p for c in modulus]
        if len(m) != n + 1 or m[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {n}")
        tables = _build_tables(p, n, m[:-1])
        if tables is None:
            if not _is_irreducible(p, n, m):
                raise ValueError("supplied modulus is reducible over F_p")
            raise ValueError("supplied modulus is irreducible but not primitive")
        return FieldCtx(p, n, m, *tables)

    factors = _prime_factors(q - 1)
    norm_ok = _norm_constant_terms(p, n)
    for tail in product(range(p), repeat=n):
        if tail[0] not in norm_ok:
            continue  # constant term cannot be the norm of a generator
        if n >= 2 and _has_root(p, n, tail):
            continue
        if not _order_screen(p, n, tail, factors):
            continue
        tables = _build_tables(p, n, list(tail))
        if tables is None:
            raise RuntimeError("order screen and table build disagree")  # unreachable
        return FieldCtx(p, n, list(tail) + [1], *tables)
    raise RuntimeError(f"no primitive polynomial of degree {n} over F_{p}")  # unreachable


def field_from_json(obj: dict, table_cap: int = DEFAULT_TABLE_CAP) -> FieldCtx:
    """Parse a field description {"p": int, "n": int, "modulus": [int,...]}."""
    p = int(obj["p"])
    n = int(obj["n"])
    modulus = obj.get("modulus")
    return make_field(p, n, modulus=modulus, table_cap=table_cap)
