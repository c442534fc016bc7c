"""Exact arithmetic in F_q (q = p^m) and in the polynomial ring F_q[T].

Fields are represented by FqContext objects carrying a deterministic
modulus and multiplicative generator, so every computation is
byte-reproducible across runs. A context is either flat (coefficients
are integers mod p) or an extension of another context (a tower), which
lets constants of a base field embed into bigger fields without any
explicit embedding maps.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass
from math import gcd

import sympy

MAX_Q = 1 << 16
MAX_TOWER_DEG = 64
MAX_POLY_DEG = 64


class DomainError(ValueError):
    """Input is well formed but outside the mathematical domain."""


class ParseError(ValueError):
    """Malformed literal input."""


def _prime_factors(n):
    return sorted(sympy.factorint(n).keys())


class FqElem:
    """Element of an FqContext: coefficient vector over the base scalars.

    Scalars are integers 0..p-1 for a flat context and base-field
    elements for a tower context. Instances are immutable.
    """

    __slots__ = ("ctx", "coeffs", "_hash")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = tuple(coeffs)
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.ctx), self.coeffs))
        return self._hash

    def __add__(self, other):
        c = self.ctx
        return FqElem(c, tuple(c._s_add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        c = self.ctx
        return FqElem(c, tuple(c._s_sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        c = self.ctx
        return FqElem(c, tuple(c._s_neg(a) for a in self.coeffs))

    def __mul__(self, other):
        c = self.ctx
        if c.m == 1:
            return FqElem(c, (c._s_mul(self.coeffs[0], other.coeffs[0]),))
        raw = [c._s_zero()] * (2 * c.m - 1)
        for i, a in enumerate(self.coeffs):
            if c._s_is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                raw[i + j] = c._s_add(raw[i + j], c._s_mul(a, b))
        return FqElem(c, c._reduce_vec(raw))

    def __pow__(self, e):
        c = self.ctx
        if self.is_zero():
            if e > 0:
                return self
            if e == 0:
                return c.one()
            raise DomainError("zero has no inverse")
        e %= c.q - 1
        result = c.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise DomainError("zero has no inverse")
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        return self * other.inverse()

    def is_zero(self):
        c = self.ctx
        return all(c._s_is_zero(a) for a in self.coeffs)

    def to_int(self):
        return self.ctx.elem_to_int(self)

    def multiplicative_order(self):
        if self.is_zero():
            raise DomainError("zero has no multiplicative order")
        n = self.ctx.q - 1
        for r in _prime_factors(n):
            while n % r == 0 and (self ** (n // r)) == self.ctx.one():
                n //= r
        return n

    def __repr__(self):
        return f"FqElem({self.ctx!r}, {render_element(self)!r})"


class FqContext:
    """The finite field F_q with a deterministic modulus and generator.

    The modulus is the lexicographically smallest monic irreducible of
    its degree over the coefficient field (coefficient tuples compared
    as integer tuples, low degree first) and the generator is the
    smallest element of full multiplicative order, so two contexts with
    the same parameters behave identically.
    """

    def __init__(self, p, m, base, modulus):
        self.p = p
        self.m = m
        self.base = base
        self.mtot = m * (base.mtot if base is not None else 1)
        self.q = p ** self.mtot
        self.qbase = p ** (base.mtot if base is not None else 1)
        self.modulus = modulus
        self._generator = None
        self._ext_cache = {}
        self._dlog_table = None

    # -- scalar ring: ints mod p (flat) or base elements (tower) --

    def _s_zero(self):
        return 0 if self.base is None else self.base.zero()

    def _s_one(self):
        return 1 if self.base is None else self.base.one()

    def _s_add(self, a, b):
        return (a + b) % self.p if self.base is None else a + b

    def _s_sub(self, a, b):
        return (a - b) % self.p if self.base is None else a - b

    def _s_neg(self, a):
        return (-a) % self.p if self.base is None else -a

    def _s_mul(self, a, b):
        return (a * b) % self.p if self.base is None else a * b

    def _s_inv(self, a):
        return pow(a, self.p - 2, self.p) if self.base is None else a.inverse()

    def _s_is_zero(self, a):
        return a == 0 if self.base is None else a.is_zero()

    def _s_from_int(self, i):
        return i if self.base is None else self.base.from_int(i)

    def _s_to_int(self, a):
        return a if self.base is None else self.base.elem_to_int(a)

    def _reduce_vec(self, raw):
        """Reduce a raw coefficient list mod the modulus, in place."""
        mod = self.modulus
        m = self.m
        for i in range(len(raw) - 1, m - 1, -1):
            lead = raw[i]
            if self._s_is_zero(lead):
                continue
            raw[i] = self._s_zero()
            for j in range(m):
                raw[i - m + j] = self._s_sub(raw[i - m + j], self._s_mul(lead, mod[j]))
        return tuple(raw[:m])

    # -- element constructors --

    def zero(self):
        return FqElem(self, (self._s_zero(),) * self.m)

    def one(self):
        return self.from_int(1)

    def from_int(self, i):
        """The i-th element in canonical order, 0 <= i < q."""
        qb = self.qbase
        coeffs = []
        for _ in range(self.m):
            coeffs.append(self._s_from_int(i % qb))
            i //= qb
        return FqElem(self, tuple(coeffs))

    def elem_to_int(self, a):
        i = 0
        for c in reversed(a.coeffs):
            i = i * self.qbase + self._s_to_int(c)
        return i

    def elem(self, int_coeffs):
        """Element from a coefficient vector of integers (low degree first)."""
        if len(int_coeffs) > self.m:
            raise ParseError("coefficient vector longer than the field degree")
        coeffs = [self._s_from_int(c % self.qbase) for c in int_coeffs]
        coeffs += [self._s_zero()] * (self.m - len(coeffs))
        return FqElem(self, tuple(coeffs))

    def lift(self, a):
        """Embed an element of the base context (a tower constant)."""
        if self.base is None or a.ctx is not self.base:
            raise DomainError("lift requires an element of the base context")
        return FqElem(self, (a,) + (self.base.zero(),) * (self.m - 1))

    def elements(self):
        for i in range(self.q):
            yield self.from_int(i)

    @property
    def generator(self):
        if self._generator is None:
            primes = _prime_factors(self.q - 1) if self.q > 2 else []
            one = self.one()
            for i in range(1, self.q):
                g = self.from_int(i)
                if all((g ** ((self.q - 1) // r)) != one for r in primes):
                    self._generator = g
                    break
        return self._generator

    def extension(self, r):
        """The tower context of degree r over this one (cached)."""
        if r == 1:
            return self
        if r in self._ext_cache:
            return self._ext_cache[r]
        if r < 1:
            raise DomainError("extension degree must be positive")
        if r * self.mtot > MAX_TOWER_DEG:
            raise DomainError(
                f"extension degree {r * self.mtot} over F_{self.p} exceeds cap {MAX_TOWER_DEG}")
        modulus = None
        # constant coefficient must vary fastest: every candidate whose
        # constant term is zero is divisible by X, and enumerating them
        # first stalls the search for q^(r-1) candidates
        for tail in itertools.product(range(self.q), repeat=r):
            coeffs = tuple(self.from_int(c) for c in reversed(tail))
            cand = FqPoly(self, coeffs + (self.one(),))
            if is_irreducible(cand):
                modulus = tuple(cand.coeffs[:r])
                break
        ctx = FqContext(self.p, r, self, modulus)
        self._ext_cache[r] = ctx
        return ctx

    def dlog(self, a):
        """Discrete log of a nonzero element base the context generator."""
        if a.is_zero():
            raise DomainError("dlog of zero")
        if self._dlog_table is None:
            table = {}
            g = self.generator
            x = self.one()
            for i in range(self.q - 1):
                table[x] = i
                x = x * g
            self._dlog_table = table
        return self._dlog_table[a]

    def __repr__(self):
        if self.base is None:
            return f"F_{self.p}^{self.mtot}" if self.mtot > 1 else f"F_{self.p}"
        return f"{self.base!r}[^{self.m}]"


_CTX_CACHE = {}


def make_context(p, m):
    """Construct F_{p^m} with the canonical modulus and generator.

    The modulus is the lexicographically smallest monic irreducible of
    degree m over F_p and the generator the smallest element of order
    p^m - 1, making all downstream output reproducible.
    """
    if not isinstance(p, int) or not isinstance(m, int):
        raise DomainError("p and m must be integers")
    if m < 1:
        raise DomainError("m must be at least 1")
    if not sympy.isprime(p):
        raise DomainError(f"{p} is not prime")
    if p ** m > MAX_Q:
        raise DomainError(f"q = {p}^{m} exceeds cap {MAX_Q}")
    key = (p, m)
    if key in _CTX_CACHE:
        return _CTX_CACHE[key]
    if m == 1:
        ctx = FqContext(p, 1, None, (0,))
    else:
        base = make_context(p, 1)
        modulus = None
        for tail in itertools.product(range(p), repeat=m):
            cand = FqPoly.from_ints(base, list(tail) + [1])
            if is_irreducible(cand):
                modulus = tail
                break
        ctx = FqContext(p, m, None, modulus)
    ctx.generator  # force deterministic eager computation
    _CTX_CACHE[key] = ctx
    return ctx


class FqPoly:
    """Dense polynomial over an FqContext, low degree first, no trailing zeros."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, ctx, ints):
        return cls(ctx, tuple(ctx.from_int(i % ctx.q) for i in ints))

    @classmethod
    def const(cls, ctx, a):
        return cls(ctx, (a,))

    @classmethod
    def x(cls, ctx):
        return cls(ctx, (ctx.zero(), ctx.one()))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        if self.is_zero():
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one()

    def __eq__(self, other):
        if not isinstance(other, FqPoly):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return FqPoly(self.ctx, tuple(out))

    def __neg__(self):
        return FqPoly(self.ctx, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return FqPoly(self.ctx, ())
        zero = self.ctx.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return FqPoly(self.ctx, tuple(out))

    def scale(self, a):
        return FqPoly(self.ctx, tuple(a * c for c in self.coeffs))

    def divrem(self, other):
        if other.is_zero():
            raise DomainError("division by zero polynomial")
        if self.degree < other.degree:
            return FqPoly(self.ctx, ()), self
        inv_lead = other.leading.inverse()
        rem = list(self.coeffs)
        qt = [self.ctx.zero()] * (self.degree - other.degree + 1)
        db = other.degree
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            f = c * inv_lead
            qt[i - db] = f
            for j in range(db + 1):
                rem[i - db + j] = rem[i - db + j] - f * other.coeffs[j]
        return FqPoly(self.ctx, tuple(qt)), FqPoly(self.ctx, tuple(rem))

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def __pow__(self, e):
        result = FqPoly.const(self.ctx, self.ctx.one())
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self):
        if self.is_zero() or self.is_monic:
            return self
        return self.scale(self.leading.inverse())

    def eval(self, a):
        acc = a.ctx.zero()
        for c in reversed(self.coeffs):
            val = c if c.ctx is a.ctx else a.ctx.lift(c)
            acc = acc * a + val
        return acc

    def derivative(self):
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            out.append(c * self.ctx.from_int(i % self.ctx.p))
        return FqPoly(self.ctx, tuple(out))

    def frobenius_power(self, e):
        """self**(q^j) for q^j = e computed by the semilinear exponent map."""
        if self.is_zero():
            return self
        zero = self.ctx.zero()
        out = [zero] * (self.degree * e + 1)
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                out[i * e] = c ** e
        return FqPoly(self.ctx, tuple(out))

    def sort_key(self):
        return (self.degree, tuple(c.to_int() for c in self.coeffs))

    def __repr__(self):
        return f"FqPoly({render_poly(self)!r})"


def poly_gcd(a, b):
    """Monic gcd of two polynomials over the same context."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def poly_arith(a, b, op):
    """Dispatcher kept for a uniform functional surface."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "divrem":
        return a.divrem(b)
    if op == "gcd":
        return poly_gcd(a, b)
    raise DomainError(f"unknown op {op!r}")


def powmod(base, e, mod):
    """base**e mod `mod` by square and multiply."""
    result = FqPoly.const(base.ctx, base.ctx.one())
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def is_irreducible(f):
    """Distinct-degree sieve: x^{q^d} = x tests against every prime d | n."""
    n = f.degree
    if n < 1:
        raise DomainError("irreducibility is defined for non-constant polynomials")
    if n == 1:
        return True
    ctx = f.ctx
    x = FqPoly.x(ctx)
    need = {n // r for r in _prime_factors(n)}
    xp = x
    for d in range(1, n + 1):
        xp = powmod(xp, ctx.q, f)
        if d in need and poly_gcd(xp - x, f).degree != 0:
            return False
        if d == n:
            return xp == x
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class Factorization:
    """unit * prod(poly^mult); factors monic irreducible, canonically sorted."""

    unit: FqElem
    factors: tuple

    def expand(self):
        ctx = self.unit.ctx
        out = FqPoly.const(ctx, self.unit)
        for g, mult in self.factors:
            out = out * g ** mult
        return out

    def degree_multiset(self):
        out = []
        for g, mult in self.factors:
            out.extend([g.degree] * mult)
        return sorted(out)


def _poly_seed(f):
    parts = [str(f.ctx.p), str(f.ctx.mtot)]
    parts.extend(str(c.to_int()) for c in f.coeffs)
    digest = hashlib.sha256(",".join(parts).encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _pth_root(f):
    ctx = f.ctx
    p = ctx.p
    root_exp = ctx.q // p  # c^(q/p) is the p-th root of c
    out = []
    for i in range(0, f.degree + 1, p):
        out.append(f.coeffs[i] ** root_exp)
    return FqPoly(ctx, tuple(out))


def _squarefree_parts(f):
    """Decompose monic f into pairwise coprime squarefree parts with multiplicities."""
    ctx = f.ctx
    parts = []
    e = 1
    while f.degree > 0:
        fp = f.derivative()
        if fp.is_zero():
            f = _pth_root(f)
            e *= ctx.p
            continue
        c = poly_gcd(f, fp)
        w = (f // c).monic()
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, c)
            z = (w // y).monic()
            if z.degree > 0:
                parts.append((z, i * e))
            w = y
            c = (c // y).monic()
            i += 1
        f = c
    return parts


def _edf_split(g, d, rng):
    """Split a product of distinct degree-d irreducibles (Cantor-Zassenhaus)."""
    ctx = g.ctx
    if g.degree == d:
        return [g]
    one = FqPoly.const(ctx, ctx.one())
    while True:
        h = FqPoly(ctx, tuple(ctx.from_int(rng.randrange(ctx.q)) for _ in range(g.degree)))
        if h.degree < 1:
            continue
        s = poly_gcd(h, g)
        if not 0 < s.degree < g.degree:
            if ctx.p == 2:
                # trace map to F_2 over all Frobenius steps of F_{q^d}
                t = h
                acc = h
                for _ in range(ctx.mtot * d - 1):
                    t = (t * t) % g
                    acc = acc + t
            else:
                acc = powmod(h, (ctx.q ** d - 1) // 2, g) - one
            s = poly_gcd(acc, g)
        if 0 < s.degree < g.degree:
            left = _edf_split(s, d, rng)
            right = _edf_split((g // s).monic(), d, rng)
            return left + right


def factor(f):
    """Complete factorization into a unit times monic irreducibles.

    Distinct-degree then equal-degree splitting, with the splitting RNG
    seeded from the input bytes so output order and content are stable.
    """
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    if f.degree > MAX_POLY_DEG:
        raise DomainError(f"degree {f.degree} exceeds cap {MAX_POLY_DEG}")
    ctx = f.ctx
    unit = f.leading
    if f.degree == 0:
        return Factorization(unit, ())
    rng = random.Random(_poly_seed(f))
    work = f.monic()
    found = []
    for sqfree, mult in _squarefree_parts(work):
        x = FqPoly.x(ctx)
        xp = x
        rem = sqfree
        d = 0
        while rem.degree > 0:
            d += 1
            if 2 * d > rem.degree:
                found.append((rem, mult))
                break
            xp = powmod(xp, ctx.q, rem)
            gd = poly_gcd(xp - x, rem)
            if gd.degree > 0:
                for irr in _edf_split(gd, d, rng):
                    found.append((irr, mult))
                rem = (rem // gd).monic()
                xp = xp % rem
    found.sort(key=lambda fm: fm[0].sort_key())
    return Factorization(unit, tuple(found))


def is_eth_power(gamma, e):
    """Whether gamma lies in (F_q*)^e, via one exponentiation."""
    if gamma.is_zero():
        raise DomainError("gamma must be nonzero")
    if e < 1:
        raise DomainError("e must be positive")
    q = gamma.ctx.q
    g = gcd(e, q - 1)
    return (gamma ** ((q - 1) // g)) == gamma.ctx.one()


def monic_polys(ctx, degree):
    """All monic polynomials of the given degree, in canonical order."""
    one = ctx.one()
    for tail in itertools.product(range(ctx.q), repeat=degree):
        yield FqPoly(ctx, tuple(ctx.from_int(c) for c in tail) + (one,))


# -- literal parsing and rendering --
#
# Grammar (whitespace ignored):
#   expr   := term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := '-'* atom ('^' INT)?
#   atom   := INT | NAME | '(' expr ')' | '[' INT (',' INT)* ']'
# NAME 'g' is the context generator; any other single letter is the
# polynomial variable. Bracketed vectors are extension-field
# coefficient lists over the prime subfield.


class _Tokens:
    def __init__(self, text):
        self.toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.toks.append(("int", int(text[i:j])))
                i = j
            elif ch.isalpha():
                self.toks.append(("name", ch))
                i += 1
            elif ch in "+-*^()[],":
                self.toks.append((ch, ch))
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}")
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def next(self):
        if self.pos >= len(self.toks):
            raise ParseError("unexpected end of input")
        t = self.toks[self.pos]
        self.pos += 1
        return t


class _PolyParser:
    def __init__(self, ctx, text):
        self.ctx = ctx
        self.toks = _Tokens(text)
        self.var = None

    def parse(self):
        out = self._expr()
        if self.toks.peek() is not None:
            raise ParseError("trailing input after expression")
        return out

    def _expr(self):
        acc = self._term()
        while self.toks.peek() in ("+", "-"):
            op = self.toks.next()[0]
            rhs = self._term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def _term(self):
        acc = self._factor()
        while self.toks.peek() == "*":
            self.toks.next()
            acc = acc * self._factor()
        return acc

    def _factor(self):
        neg = False
        while self.toks.peek() == "-":
            self.toks.next()
            neg = not neg
        atom = self._atom()
        if self.toks.peek() == "^":
            self.toks.next()
            kind, val = self.toks.next()
            if kind != "int":
                raise ParseError("exponent must be an integer")
            atom = atom ** val
        return -atom if neg else atom

    def _atom(self):
        kind, val = self.toks.next()
        ctx = self.ctx
        if kind == "int":
            return FqPoly.const(ctx, ctx.from_int(val % ctx.p))
        if kind == "name":
            if val == "g":
                if ctx.mtot == 1:
                    raise ParseError("generator literal 'g' needs an extension field")
                return FqPoly.const(ctx, ctx.generator)
            if self.var is None:
                self.var = val
            elif self.var != val:
                raise ParseError(f"two variables {self.var!r} and {val!r} in one literal")
            return FqPoly.x(ctx)
        if kind == "(":
            inner = self._expr()
            if self.toks.next()[0] != ")":
                raise ParseError("expected ')'")
            return inner
        if kind == "[":
            ints = []
            while True:
                k, v = self.toks.next()
                if k != "int":
                    raise ParseError("vector entries must be integers")
                ints.append(v)
                k2 = self.toks.next()[0]
                if k2 == "]":
                    break
                if k2 != ",":
                    raise ParseError("expected ',' or ']' in vector")
            return FqPoly.const(ctx, ctx.elem(ints))
        raise ParseError(f"unexpected token {val!r}")


def parse_poly(ctx, text):
    """Parse a polynomial literal over the context."""
    if not text or not text.strip():
        raise ParseError("empty polynomial literal")
    return _PolyParser(ctx, text).parse()


def parse_element(ctx, text):
    """Parse a constant literal (integer, g^k, or bracketed vector)."""
    poly = parse_poly(ctx, text)
    if poly.degree > 0:
        raise ParseError(f"{text!r} is not a constant")
    return poly.coeffs[0] if poly.coeffs else ctx.zero()


def render_element(a):
    """Canonical string: prime-subfield values as integers, else g^k."""
    ctx = a.ctx
    i = ctx.elem_to_int(a)
    if i < ctx.p:
        return str(i)
    k = ctx.dlog(a)
    return "g" if k == 1 else f"g^{k}"


def render_poly(f, var="T"):
    """Canonical polynomial string, highest degree first."""
    if f.is_zero():
        return "0"
    terms = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c.is_zero():
            continue
        cs = render_element(c)
        if i == 0:
            terms.append(cs)
        else:
            xs = var if i == 1 else f"{var}^{i}"
            terms.append(xs if cs == "1" else f"{cs}*{xs}")
    return " + ".join(terms)
