"""Brute-force recomputation of formula-derived quantities at desk scale.

Each function here recomputes something the other modules obtain by formula
(factorizations, unit counts, the Carlitz module laws, constant degrees of
root fields, splitting of finite primes) by exhaustive enumeration or trial
division, sharing only base field arithmetic with the code under test. The
caps fail loudly instead of degrading, so a sweep that ran is a sweep that
covered what it claims.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from math import gcd

from .carlitz import carlitz_action
from .ffpoly import (
    MAX_POLY_DEG,
    MAX_Q,
    DomainError,
    Factorization,
    FqPoly,
    monic_polys,
    poly_gcd,
)

MAX_ENUM = 1 << 20


@dataclass(frozen=True)
class OracleConfig:
    """Enumeration caps and the seed used by deterministic random sweeps."""

    max_q: int = 81
    max_deg: int = 16
    seed: int = 20260815

    def __post_init__(self):
        if not 2 <= self.max_q <= MAX_Q:
            raise DomainError(f"max_q = {self.max_q} outside [2, {MAX_Q}]")
        if not 1 <= self.max_deg <= MAX_POLY_DEG:
            raise DomainError(f"max_deg = {self.max_deg} outside [1, {MAX_POLY_DEG}]")


DEFAULT_CONFIG = OracleConfig()


def naive_factor(f, config=None):
    """Factorization by trial division, candidates in ascending degree.

    Divisors are extracted smallest first, so everything extracted is
    irreducible and whatever survives past degree deg/2 is too.
    """
    cfg = config or DEFAULT_CONFIG
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    ctx = f.ctx
    if ctx.q > cfg.max_q:
        raise DomainError(f"field size {ctx.q} exceeds oracle cap {cfg.max_q}")
    if f.degree > cfg.max_deg:
        raise DomainError(f"degree {f.degree} exceeds oracle cap {cfg.max_deg}")
    unit = f.leading
    work = f.monic()
    found = []
    d = 1
    while 2 * d <= work.degree:
        for g in monic_polys(ctx, d):
            mult = 0
            while work.degree >= d:
                quo, rem = work.divrem(g)
                if not rem.is_zero():
                    break
                work, mult = quo, mult + 1
            if mult:
                found.append((g, mult))
        d += 1
    if work.degree > 0:
        found.append((work, 1))
    found.sort(key=lambda fm: fm[0].sort_key())
    return Factorization(unit, tuple(found))


def unit_count(M, config=None):
    """Order of (F_q[T]/M)^* counted residue by residue via gcd."""
    cfg = config or DEFAULT_CONFIG
    if M.is_zero() or M.degree < 1:
        raise DomainError("modulus must be nonconstant")
    ctx = M.ctx
    if ctx.q > min(9, cfg.max_q):
        raise DomainError(f"field size {ctx.q} exceeds the unit count cap")
    if M.degree > min(3, cfg.max_deg):
        raise DomainError(f"degree {M.degree} exceeds the unit count cap")
    count = 0
    for ints in itertools.product(range(ctx.q), repeat=M.degree):
        r = FqPoly.from_ints(ctx, ints)
        if not r.is_zero() and poly_gcd(r, M).degree == 0:
            count += 1
    return count


# cached powers rho_N(X)^(q^j) and actions rho_M, keyed by context and inputs
_POW_CACHE = {}
_RHO_CACHE = {}


def _rho(f):
    key = (id(f.ctx), f.sort_key())
    if key not in _RHO_CACHE:
        _RHO_CACHE[key] = carlitz_action(f)
    return _RHO_CACHE[key]


def _xdict(rho):
    q = rho.ctx.q
    return {q ** j: c for j, c in enumerate(rho.coeffs) if not c.is_zero()}


def _xdict_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            prev = out.get(e1 + e2)
            prod = c1 * c2
            out[e1 + e2] = prod if prev is None else prev + prod
    return {e: c for e, c in out.items() if not c.is_zero()}


def _xdict_pow(a, e):
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else _xdict_mul(result, base)
        e >>= 1
        if e:
            base = _xdict_mul(base, base)
    return result


def _cached_qpow(N, gx, j):
    """gx^(q^j) as j successive generic q-th powers, cached along the chain.

    Grouping the exponent this way keeps intermediates small (each exact
    q-th power collapses numerically in characteristic p) without assuming
    any Frobenius identity: every step is plain repeated multiplication.
    """
    if j == 0:
        return gx
    key = (id(N.ctx), N.sort_key(), j)
    if key not in _POW_CACHE:
        _POW_CACHE[key] = _xdict_pow(_cached_qpow(N, gx, j - 1), N.ctx.q)
    return _POW_CACHE[key]


def _xdict_sum(a, b):
    out = dict(a)
    for e, c in b.items():
        prev = out.get(e)
        out[e] = c if prev is None else prev + c
    return {e: c for e, c in out.items() if not c.is_zero()}


def carlitz_compose_check(M, N, config=None):
    """Both ring laws of the Carlitz action, recomputed formally.

    The composite rho_M(rho_N(X)) is expanded by substituting rho_N into
    rho_M as a plain polynomial in X (dict arithmetic, generic powering),
    not by the twisted product, and compared against rho_{M*N}; the sum
    law rho_{M+N} = rho_M + rho_N is compared componentwise.
    """
    cfg = config or DEFAULT_CONFIG
    for f in (M, N):
        if f.is_zero():
            raise DomainError("multipliers must be nonzero")
        if f.degree > min(2, cfg.max_deg) or f.ctx.q > cfg.max_q:
            raise DomainError("multiplier outside the composition oracle caps")
    rho_m, rho_n = _rho(M), _rho(N)
    gx = _xdict(rho_n)
    composed = {}
    for j, a in enumerate(rho_m.coeffs):
        if a.is_zero():
            continue
        for e, c in _cached_qpow(N, gx, j).items():
            prev = composed.get(e)
            term = a * c
            composed[e] = term if prev is None else prev + term
    composed = {e: c for e, c in composed.items() if not c.is_zero()}
    if composed != _xdict(_rho(M * N)):
        return False
    total = M + N
    lhs = {} if total.is_zero() else _xdict(_rho(total))
    return lhs == _xdict_sum(_xdict(rho_m), _xdict(rho_n))


def t0_root_degrees(gamma, d, config=None):
    """gcd of the degrees over F_q of all d-th roots of gamma.

    Builds the explicit splitting field F_{q^b} with d*ord(gamma) dividing
    q^b - 1, collects the d roots by scanning it, and measures each root's
    degree as its Frobenius orbit length.
    """
    cfg = config or DEFAULT_CONFIG
    if gamma.is_zero():
        raise DomainError("gamma must be nonzero")
    if not isinstance(d, int) or d < 1:
        raise DomainError("d must be a positive integer")
    ctx = gamma.ctx
    if d % ctx.p == 0:
        raise DomainError("d must be prime to the characteristic")
    if ctx.q > cfg.max_q:
        raise DomainError(f"field size {ctx.q} exceeds oracle cap {cfg.max_q}")
    target = d * gamma.multiplicative_order()
    b, qb = 1, ctx.q % target
    while qb != 1 % target:
        b += 1
        qb = (qb * ctx.q) % target
        assert b <= target
    if ctx.q ** b > MAX_ENUM:
        raise DomainError(f"splitting field F_{ctx.q}^{b} exceeds the enumeration cap")
    ext = ctx.extension(b)
    glift = gamma if ext is ctx else ext.lift(gamma)
    roots = [x for x in ext.elements() if x ** d == glift and not x.is_zero()]
    assert len(roots) == d
    degs = []
    for r in roots:
        j, y = 1, r ** ctx.q
        while y != r:
            y, j = y ** ctx.q, j + 1
        degs.append(j)
    return reduce(gcd, degs)


def splitting_at_finite(K, P, config=None):
    """Splitting of the finite prime P in a radical extension, from scratch.

    When P does not divide gamma*D the extension is unramified at P and
    its splitting is read off a residue factorization: X^n - (gamma*D mod P)
    over F_{q^deg P}, giving (1, sorted factor degrees). When P divides
    gamma*D the Newton polygon of X^n - gamma*D at P is one segment from
    (0, v_P) to (n, 0), giving (n/gcd(n, v_P), ()).
    """
    cfg = config or DEFAULT_CONFIG
    ctx = K.ctx
    if K.s != 1:
        raise DomainError("the splitting oracle runs over the plain base s = 1")
    if P.ctx is not ctx or P.degree < 1 or not P.is_monic:
        raise DomainError("P must be a nonconstant monic polynomial over the base")
    if P.degree > cfg.max_deg:
        raise DomainError(f"degree {P.degree} exceeds oracle cap {cfg.max_deg}")
    if ctx.q ** P.degree > cfg.max_q:
        raise DomainError(f"residue field F_{ctx.q ** P.degree} exceeds oracle cap {cfg.max_q}")
    if naive_factor(P, cfg).factors != ((P, 1),):
        raise DomainError("P must be irreducible")
    work = FqPoly.const(ctx, K.gamma) * K.D
    v = 0
    while True:
        quo, rem = work.divrem(P)
        if not rem.is_zero():
            break
        work, v = quo, v + 1
    if v:
        return K.n // gcd(K.n, v), ()
    ext = ctx.extension(P.degree)
    theta = next(x for x in ext.elements() if P.eval(x).is_zero())
    c = work.eval(theta)
    coeffs = [-c] + [ext.zero()] * (K.n - 1) + [ext.one()]
    fact = naive_factor(FqPoly(ext, tuple(coeffs)), cfg)
    degs = tuple(sorted(g.degree for g, mult in fact.factors for _ in range(mult)))
    assert sum(degs) == K.n
    return 1, degs
