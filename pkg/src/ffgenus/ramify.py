"""Ramification analysis over k = F_q(T) for radical extensions and profiles.

A radical extension K = k((gamma*D)^(1/n)) with p not dividing n is tame
everywhere, and its ramification is determined by elementary gcd data:
e at a finite prime P | D is n/gcd(v_P(D), n), e at the infinite prime is
n/gcd(deg D, n), and the residue behaviour at infinity is read off the
factorization of X^d - gamma over the constant field. Everything here is
also exposed for abstract ramification profiles (per-place exponent lists
with no radical model behind them), which is the intake for the general
genus-field bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

import sympy

from .ffpoly import (
    DomainError,
    Factorization,
    FqElem,
    FqPoly,
    factor,
    is_eth_power,
)


def p_adic_val(l, n):
    """The exponent of the prime l in n (n positive)."""
    if n < 1:
        raise DomainError("valuation needs a positive argument")
    v = 0
    while n % l == 0:
        n //= l
        v += 1
    return v


@dataclass(frozen=True)
class RadicalExtension:
    """The datum K = k((gamma*D)^(1/n)), with F_{q^s} already adjoined.

    D is monic and n-th-power free (every exponent in its factorization is
    below n), p does not divide n, and X^n - gamma*D is irreducible over
    k, so [K : k(F_{q^s})] = n. s = 1 is the plain radical extension.
    """

    ctx: object
    n: int
    gamma: FqElem
    D: FqPoly
    D_factors: Factorization
    s: int


def radical_extension(ctx, n, gamma, D, s=1):
    """Validated constructor; rejects wild n and reducible X^n - gamma*D."""
    if not isinstance(n, int) or n < 1:
        raise DomainError("n must be a positive integer")
    if not isinstance(s, int) or s < 1:
        raise DomainError("base constants degree s must be a positive integer")
    if n % ctx.p == 0:
        raise DomainError(f"wild case p | n is out of scope (p = {ctx.p}, n = {n})")
    if not isinstance(gamma, FqElem) or gamma.ctx is not ctx or gamma.is_zero():
        raise DomainError("gamma must be a nonzero constant of the base field")
    if D.ctx is not ctx or D.is_zero() or not D.is_monic:
        raise DomainError("D must be monic over the base field")
    fac = factor(D)
    alphas = [mult for _, mult in fac.factors]
    if any(a >= n for a in alphas):
        raise DomainError("D must be n-th-power free (all exponents below n)")
    # X^n - a is irreducible iff a is no l-th power for primes l | n,
    # and additionally a is outside -4 k^4 whenever 4 | n
    for l in sympy.primefactors(n):
        if all(a % l == 0 for a in alphas) and is_eth_power(gamma, l):
            raise DomainError(
                f"X^{n} - gamma*D is reducible: gamma*D is an {l}-th power")
    if n % 4 == 0 and all(a % 4 == 0 for a in alphas):
        minus_four = -(ctx.one() + ctx.one() + ctx.one() + ctx.one())
        if is_eth_power(gamma / minus_four, 4):
            raise DomainError(
                f"X^{n} - gamma*D is reducible: gamma*D lies in -4*k^4")
    return RadicalExtension(ctx, n, gamma, D, fac, s)


def ram_finite(K):
    """Ramified finite places of K/k: list of (P, e_P) with e_P = n/gcd(alpha, n)."""
    out = []
    for P, alpha in K.D_factors.factors:
        e = K.n // gcd(alpha, K.n)
        if e > 1:
            out.append((P, e))
    return out


def ram_infinity(K):
    """Ramification index of the infinite prime: n/gcd(deg D, n)."""
    return K.n // gcd(K.D.degree, K.n)


def _infinity_factorization(gamma, d, s):
    """X^d - gamma factored over F_{q^s}; one factor per infinite prime."""
    ctx = gamma.ctx
    ext = ctx.extension(s)
    g = ext.lift(gamma) if s > 1 else gamma
    f = FqPoly.x(ext) ** d - FqPoly.const(ext, g)
    fac = factor(f)
    assert all(mult == 1 for _, mult in fac.factors)  # separable since p does not divide d
    return [h for h, _ in fac.factors]


def t0_radical(gamma, d, s=1):
    """gcd of the constant-field degrees of the d-th roots of gamma.

    Factor X^d - gamma over F_{q^s}; each irreducible factor of degree f
    contributes a root generating F_{q^{s f}}, and t_0 is the gcd of those
    degrees s*f over F_q.
    """
    if gamma.is_zero():
        raise DomainError("gamma must be nonzero")
    if d < 1 or s < 1:
        raise DomainError("d and s must be positive")
    if d % gamma.ctx.p == 0:
        raise DomainError("d must be prime to the characteristic")
    return reduce(gcd, (s * h.degree for h in _infinity_factorization(gamma, d, s)))


@dataclass(frozen=True)
class FinitePlace:
    """Ramification record of one finite place.

    e_list holds the exponents of the primes above P; e_P is their gcd,
    split as p^{u_P} * e0 with e0 prime to p. P itself is attached when a
    polynomial model exists, otherwise only the degree is known.
    """

    deg: int
    e_list: tuple
    e_P: int
    u_P: int
    e0: int
    P: FqPoly = None


@dataclass(frozen=True)
class RamificationProfile:
    """Per-place ramification data of some separable K/k.

    finite lists only places with a ramified prime above them; infinity
    holds one (e, t) pair per infinite prime of K. geometric is True/False
    when certified and None when the criteria are silent.
    """

    q: int
    p: int
    s: int
    finite: tuple
    infinity: tuple
    e_inf: int
    t0: int
    geometric: object
    radical: RadicalExtension = None


def _geometric_flag(K, alphas):
    if K.s > 1:
        return False
    if any(gcd(a, K.n) == 1 for a in alphas):
        return True
    ln = sympy.primefactors(K.n)
    if len(ln) == 1 and (K.ctx.q - 1) % K.n == 0:
        return False  # prime-power Kummer case: coprime exponent is also necessary
    return None


def build_profile(K):
    """Full ramification profile of a radical extension."""
    n = K.n
    finite = []
    for P, alpha in K.D_factors.factors:
        e = n // gcd(alpha, n)
        if e > 1:
            finite.append(FinitePlace(P.degree, (e,), e, 0, e, P))
    d = gcd(K.D.degree, n)
    e_inf = n // d
    infinity = tuple((e_inf, K.s * h.degree) for h in _infinity_factorization(K.gamma, d, K.s))
    t0 = reduce(gcd, (t for _, t in infinity))
    geo = _geometric_flag(K, [a for _, a in K.D_factors.factors])
    return RamificationProfile(
        q=K.ctx.q, p=K.ctx.p, s=K.s, finite=tuple(finite), infinity=infinity,
        e_inf=reduce(gcd, (e for e, _ in infinity)), t0=t0, geometric=geo, radical=K)


def profile_from_dict(data):
    """Abstract profile intake: per-place exponent lists, no radical model.

    Expected shape:
      {"q": int, "finite": [{"deg": int, "e": [int, ...]}, ...],
       "infinity": [{"e": int, "t": int}, ...], "s": int?, "geometric": bool?}
    Finite places where every exponent is 1 are dropped.
    """
    try:
        q = int(data["q"])
        finite_in = list(data.get("finite", []))
        infinity_in = list(data["infinity"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed profile: {exc}") from None
    primes = sympy.primefactors(q)
    if len(primes) != 1 or q < 2:
        raise DomainError(f"q = {q} is not a prime power")
    p = primes[0]
    s = int(data.get("s", 1))
    if s < 1:
        raise DomainError("s must be positive")
    finite = []
    for entry in finite_in:
        deg = int(entry["deg"])
        e_list = tuple(int(e) for e in entry["e"])
        if deg < 1 or not e_list or any(e < 1 for e in e_list):
            raise DomainError(f"bad finite place entry {entry!r}")
        if all(e == 1 for e in e_list):
            continue
        e_P = reduce(gcd, e_list)
        u = p_adic_val(p, e_P)
        finite.append(FinitePlace(deg, e_list, e_P, u, e_P // p ** u))
    infinity = []
    for entry in infinity_in:
        e, t = int(entry["e"]), int(entry["t"])
        if e < 1 or t < 1:
            raise DomainError(f"bad infinite place entry {entry!r}")
        infinity.append((e, t))
    if not infinity:
        raise DomainError("profile needs at least one infinite prime")
    geo = data.get("geometric")
    if geo is not None:
        geo = bool(geo)
    return RamificationProfile(
        q=q, p=p, s=s, finite=tuple(finite), infinity=tuple(infinity),
        e_inf=reduce(gcd, (e for e, _ in infinity)),
        t0=reduce(gcd, (t for _, t in infinity)), geometric=geo)


def abhyankar_lcm(e1, e2, tame):
    """Ramification index in a compositum: lcm of the sides, tame case only."""
    if e1 < 1 or e2 < 1:
        raise DomainError("ramification indices must be positive")
    if not tame:
        raise DomainError("composite ramification index needs a tame side")
    return lcm(e1, e2)


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of (exponent, valuation) points; slopes increase."""

    vertices: tuple
    slopes: tuple


def newton_polygon(points):
    pts = sorted(set(points))
    if len(pts) < 2:
        raise DomainError("a polygon needs at least two distinct points")
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # keep the middle point only while it dips strictly below the chord
            if (y2 - y1) * (pt[0] - x1) < (pt[1] - y1) * (x2 - x1):
                break
            hull.pop()
        hull.append(pt)
    slopes = tuple(
        Fraction(hull[i + 1][1] - hull[i][1], hull[i + 1][0] - hull[i][0])
        for i in range(len(hull) - 1))
    assert all(slopes[i] <= slopes[i + 1] for i in range(len(slopes) - 1))
    return NewtonPolygon(tuple(hull), slopes)


def newton_polygon_e(n, alpha):
    """Ramification index read off the polygon of X^n - u with v(u) = alpha.

    The polygon has the single segment (0, alpha) -- (n, 0), so every root
    has valuation alpha/n and the index is the reduced denominator.
    """
    if n < 1 or alpha < 0:
        raise DomainError("need n >= 1 and alpha >= 0")
    if alpha == 0:
        return 1
    poly = newton_polygon([(0, alpha), (n, 0)])
    assert len(poly.slopes) == 1
    return poly.slopes[0].denominator
