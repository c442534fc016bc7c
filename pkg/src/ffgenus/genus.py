"""Genus-field components and reports over k = F_q(T).

For a tame abelian-over-k piece attached to each ramified finite prime P
there is a cyclic subfield F_P of the P-torsion field of degree
c_P = gcd(e_P, q^{deg P} - 1); their compositum F_0 and its infinite-prime
behaviour (c_inf, the splitting index c'_inf, the maximal fully-split
subfield F, and the constant degree t_0) determine a sandwich

    K * F * F_{q^{t_0}}  <=  K_ge  <=  K * F_0 * F_{q^u}

for the genus field K_ge of a radical extension K = k((gamma*D)^(1/n)).
This module assembles those components, decides the sandwich exactly when
one of three certificates applies (F = F_0, abelian K/k, or collapse of
F_0 into K times constants), and otherwise reports certified bounds. The
same machinery runs on abstract ramification profiles, where only the
bound form is available.

Field expressions are symbolic: sorted radical/cyclotomic/opaque generator
lists plus a constants degree, so equality is decidable by comparison.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, replace
from functools import reduce
from math import gcd, lcm, prod

import sympy

from .carlitz import subfield_FP
from .ffpoly import (
    DomainError,
    FqElem,
    FqPoly,
    factor,
    is_eth_power,
    render_element,
    render_poly,
)
from .ramify import build_profile, p_adic_val

MAX_LATTICE = 1 << 16


# -- symbolic field expressions --


@dataclass(frozen=True)
class RadicalGen:
    """One Kummer generator, the e-th root of unit * poly.

    degree is [k(root) : k]; it equals e except for generators kept in
    unreduced form, where only the degree of the root is certified.
    sign is +-1 when the unit is +-1 and 0 for a general constant.
    """

    e: int
    unit: str
    sign: int
    poly: str
    degree: int

    def render(self):
        if self.sign == 1:
            body = f"({self.poly})^(1/{self.e})"
        elif self.sign == -1:
            body = f"(-({self.poly}))^(1/{self.e})"
        else:
            body = f"({self.unit}*({self.poly}))^(1/{self.e})"
        if self.degree != self.e:
            body += f"[deg {self.degree}]"
        return body

    def json(self):
        d = {"e": self.e}
        if self.sign != 0:
            d["sign"] = self.sign
        else:
            d["unit"] = self.unit
        d["poly"] = self.poly
        if self.degree != self.e:
            d["degree"] = self.degree
        return d


@dataclass(frozen=True)
class CycloGen:
    """A cyclic subfield of the P-torsion field, named by degree over k.

    Used when the subfield has no Kummer radical model over k (its degree
    does not divide q - 1) or when the place has no polynomial model
    (poly is None and only the place degree is known).
    """

    poly: object
    place_deg: int
    degree: int

    def render(self):
        if self.poly is not None:
            return f"cyclo[{self.poly}; deg {self.degree}]"
        return f"cyclo[place deg {self.place_deg}; deg {self.degree}]"

    def json(self):
        return {"cyclo": self.poly, "place_deg": self.place_deg, "degree": self.degree}


@dataclass(frozen=True)
class OpaqueGen:
    """A component field known only by name and (optionally) its degree."""

    name: str
    degree: object

    def render(self):
        if self.degree is None:
            return self.name
        return f"{self.name}[deg {self.degree}]"

    def json(self):
        return {"name": self.name, "degree": self.degree}


@dataclass(frozen=True)
class FieldExpr:
    """A composite field k(generators) * F_{q^constants_deg}.

    constants_deg None means the expression carries an extension of
    constants whose exact degree is not determined (bound form only).
    Generator tuples are canonically sorted, so equal expressions compare
    equal structurally and serialize to identical JSON.
    """

    q: int
    radicals: tuple
    cyclo: tuple
    opaque: tuple
    constants_deg: object

    def render(self):
        adjoined = [g.render() for g in self.radicals + self.cyclo]
        parts = [g.render() for g in self.opaque]
        if adjoined or not parts:
            parts.append("k(" + ", ".join(adjoined) + ")" if adjoined else "k")
        body = " * ".join(parts)
        if self.constants_deg is None:
            return body + f" * F_{self.q}^u (u unknown)"
        if self.constants_deg > 1:
            return body + f" * F_{self.q ** self.constants_deg}"
        return body

    def json(self):
        d = {"radicals": [g.json() for g in self.radicals]}
        if self.cyclo:
            d["cyclo"] = [g.json() for g in self.cyclo]
        if self.opaque:
            d["opaque"] = [g.json() for g in self.opaque]
        d["constants_deg"] = self.constants_deg
        return d


def field_expr(q, gens=(), constants_deg=1):
    """Canonically sorted field expression from a mixed generator list."""
    gens = list(dict.fromkeys(gens))
    rads = tuple(sorted((g for g in gens if isinstance(g, RadicalGen)),
                        key=lambda g: (g.e, g.poly, g.unit)))
    cyc = tuple(sorted((g for g in gens if isinstance(g, CycloGen)),
                       key=lambda g: (g.degree, g.place_deg, g.poly or "")))
    opq = tuple(sorted((g for g in gens if isinstance(g, OpaqueGen)),
                       key=lambda g: g.name))
    return FieldExpr(q, rads, cyc, opq, constants_deg)


def adjoin_constants(expr, t):
    """The compositum of an expression with the constant extension of degree t."""
    if not isinstance(t, int) or t < 1:
        raise DomainError("constants degree must be a positive integer")
    if expr.constants_deg is None:
        return expr
    return replace(expr, constants_deg=lcm(expr.constants_deg, t))


def _radical_gen(e, unit, poly, degree=None):
    ctx = unit.ctx
    if unit == ctx.one():
        sign = 1
    elif unit == -ctx.one():
        sign = -1
    else:
        sign = 0
    return RadicalGen(e, render_element(unit), sign, render_poly(poly),
                      e if degree is None else degree)


# -- per-place components --


def c_P(q, e_P, degP):
    """The degree gcd(e_P, q^{deg P} - 1) of the place component F_P."""
    if e_P < 1 or degP < 1:
        raise DomainError("e_P and deg P must be positive")
    return gcd(e_P, q ** degP - 1)


def unramified_in_composite(e_list, e_star):
    """Whether a tame cyclic piece of index e_star stays unramified over
    every prime with the given ramification indices: e_star | gcd(e_list)."""
    if e_star < 1:
        raise DomainError("e_star must be positive")
    return reduce(gcd, e_list, 0) % e_star == 0


def estar_interval(q, e_P, degP):
    """Certified divisor interval for the ramification of P in the genus field.

    Returns (lower, upper) = (gcd(e_P, (q^{deg P} - 1)/(q - 1)), e_P); the
    actual index e*_P is a multiple of the first and a divisor of the second.
    """
    if e_P < 1 or degP < 1:
        raise DomainError("e_P and deg P must be positive")
    return gcd(e_P, (q ** degP - 1) // (q - 1)), e_P


@dataclass(frozen=True)
class PlaceComponent:
    """Genus-field datum of one ramified finite place.

    gen is the generator of F_P: a Kummer radical when c_P | q - 1, a
    cyclotomic-subfield marker otherwise, None when c_P = 1. e_inf_FP is
    the ramification index of the infinite prime in F_P/k.
    """

    poly: object
    deg: int
    e_P: int
    e0: int
    u_P: int
    c_P: int
    e_inf_FP: int
    gen: object

    def json(self):
        return {"poly": self.poly, "deg": self.deg, "e": self.e_P,
                "e0": self.e0, "u": self.u_P, "c": self.c_P,
                "e_inf_FP": self.e_inf_FP,
                "gen": self.gen.json() if self.gen is not None else None}


@dataclass(frozen=True)
class GenusComponents:
    """F_0 = product of the F_P, with its infinite-prime bookkeeping.

    c_inf = lcm of the per-place e_inf_FP (the ramification of the infinite
    prime in F_0/k) and equals [F_0 : F_0 meet R+] where R+ is the maximal
    totally split-at-infinity cyclotomic piece; F0_plus_deg is the degree
    of that intersection. cprime_exact and F are filled by find_F when the
    subfield lattice is accessible, and u_status records whether the upper
    constant exponent was pinned to t_0.
    """

    q: int
    places: tuple
    c_inf: int
    e_inf: int
    cprime_bound: int
    F0: FieldExpr
    F0_plus_deg: int
    cprime_exact: object
    F: object
    t0: int
    u_status: str


def build_F0(profile):
    """Assemble the per-place components and the infinite-prime indices.

    Wild places contribute through their tame part e0 (the component degree
    c_P is insensitive to the p-part of e_P); the wild data itself is
    reported separately by wild_bounds.
    """
    q = profile.q
    places = []
    gens = []
    for pl in profile.finite:
        c = gcd(pl.e0, q ** pl.deg - 1)
        if pl.P is not None:
            e_inf_fp = subfield_FP(pl.P, c).e_inf
        else:
            e_inf_fp = (q - 1) // gcd(q - 1, (q ** pl.deg - 1) // c)
        gen = None
        if c > 1:
            if pl.P is None:
                gen = CycloGen(None, pl.deg, c)
            elif (q - 1) % c == 0:
                ctx = pl.P.ctx
                sign = (-ctx.one()) ** pl.deg
                gen = _radical_gen(c, sign, pl.P)
            else:
                gen = CycloGen(render_poly(pl.P), pl.deg, c)
        places.append(PlaceComponent(
            render_poly(pl.P) if pl.P is not None else None,
            pl.deg, pl.e_P, pl.e0, pl.u_P, c, e_inf_fp, gen))
        if gen is not None:
            gens.append(gen)
    c_inf = reduce(lcm, (pl.e_inf_FP for pl in places), 1)
    total = prod(pl.c_P for pl in places)
    assert total % c_inf == 0
    return GenusComponents(
        q=q, places=tuple(places), c_inf=c_inf, e_inf=profile.e_inf,
        cprime_bound=gcd(c_inf, profile.e_inf), F0=field_expr(q, gens, 1),
        F0_plus_deg=total // c_inf, cprime_exact=None, F=None,
        t0=profile.t0, u_status="bounded_unknown")


# -- splitting of infinite primes in Kummer composites --


def _lift_chain(a, target):
    """Embed a constant into a tower context built above its own context."""
    if a.ctx is target:
        return a
    chain = []
    ctx = target
    while ctx is not None and ctx is not a.ctx:
        chain.append(ctx)
        ctx = ctx.base
    if ctx is None:
        raise DomainError("element does not live below the target context")
    for step in reversed(chain):
        a = step.lift(a)
    return a


def _infinity_residue_data(K):
    """Residue-field models of the completions of K at its infinite primes.

    With d = gcd(deg D, n), e = n/d, m' = deg D/d and y the defining root,
    the unit z = y^e/T^{m'} satisfies z^d = gamma * D/T^{deg D}, so its
    residue r is a root of X^d - gamma, and T = z^a * pi^{-e} for any
    uniformizer pi = y^a/T^c with c*e - a*m' = 1. Returns (e, a, data)
    where data holds one (residue context, r) pair per infinite prime.
    """
    ctx = K.ctx
    d = gcd(K.D.degree, K.n)
    e = K.n // d
    mprime = K.D.degree // d
    a = (-pow(mprime, -1, e)) % e if e > 1 else 0
    ext_s = ctx.extension(K.s)
    g = ext_s.lift(K.gamma) if K.s > 1 else K.gamma
    f = FqPoly.x(ext_s) ** d - FqPoly.const(ext_s, g)
    data = []
    for h, _ in factor(f).factors:
        if h.degree == 1:
            top, r = ext_s, -h.coeffs[0]
        else:
            top = ext_s.extension(h.degree)
            lifted = FqPoly(top, tuple(top.lift(c) for c in h.coeffs))
            linear = [u for u, _ in factor(lifted).factors if u.degree == 1]
            r = -linear[0].coeffs[0]
        data.append((top, r))
    return e, a, data


def splits_fully_at_infinity(K, gen):
    """Whether every infinite prime of K splits completely in K(root)/K.

    gen = (e, unit, A) describes the Kummer generator root^e = unit * A
    with unit a nonzero constant and A monic; e must divide q - 1. In each
    completion at infinity the root exists iff e divides the value
    e_inf * deg A and the unit-part residue unit * r^(a * deg A) is an
    e-th power of the residue field.
    """
    eps, unit, A = gen
    ctx = K.ctx
    if not isinstance(eps, int) or eps < 1 or (ctx.q - 1) % eps != 0:
        raise DomainError(f"generator exponent {eps} is not Kummer over F_{ctx.q}")
    if not isinstance(unit, FqElem) or unit.ctx is not ctx or unit.is_zero():
        raise DomainError("unit must be a nonzero constant of the base field")
    if A.ctx is not ctx or A.is_zero() or not A.is_monic:
        raise DomainError("A must be monic over the base field")
    if eps == 1:
        return True
    e, a, data = _infinity_residue_data(K)
    if (e * A.degree) % eps != 0:
        return False
    for top, r in data:
        u = _lift_chain(unit, top) * r ** (a * A.degree)
        if not is_eth_power(u, eps):
            return False
    return True


def find_F(K, comps):
    """Fill in the maximal fully-split subfield F of F_0 and c'_inf.

    Subfields of F_0 correspond to subgroups of a product of cyclic groups
    of orders c_P realized by Kummer radicals; F is spanned by the elements
    whose roots split completely at every infinite prime of K, a subgroup
    containing the one for F_0 meet R+, and cprime_exact is the index
    between the two. Degrades to the bound-only result (F left None) when
    some c_P is not Kummer-accessible while c_inf > 1, or when the lattice
    exceeds the enumeration cap.
    """
    q = K.ctx.q
    if comps.c_inf == 1:
        return replace(comps, cprime_exact=1, F=comps.F0)
    ram = [pl for pl in comps.places if pl.c_P > 1]
    if any((q - 1) % pl.c_P != 0 for pl in ram):
        return _bound_only(comps)
    size = prod(pl.c_P for pl in ram)
    if size > MAX_LATTICE:
        warnings.warn(f"subfield lattice of size {size} exceeds the cap; "
                      "reporting bounds only")
        return _bound_only(comps)
    poly_map = {render_poly(P): P for P, _ in K.D_factors.factors}
    Ps = [poly_map[pl.poly] for pl in ram]
    cs = [pl.c_P for pl in ram]
    degs = [pl.deg for pl in ram]
    Nprime = reduce(lcm, cs, 1)
    mus = [Nprime // c for c in cs]
    e, a, data = _infinity_residue_data(K)
    one, minus = K.ctx.one(), -K.ctx.one()
    split_memo, plus_memo = {}, {}

    def w_splits(dw):
        if dw not in split_memo:
            ok = (e * dw) % Nprime == 0
            lam = minus if dw % 2 else one
            for top, r in data:
                if not ok:
                    break
                ok = is_eth_power(_lift_chain(lam, top) * r ** (a * dw), Nprime)
            split_memo[dw] = ok
        return split_memo[dw]

    def w_plus(dw):
        if dw not in plus_memo:
            lam = minus if dw % 2 else one
            plus_memo[dw] = dw % Nprime == 0 and is_eth_power(lam, Nprime)
        return plus_memo[dw]

    split_set, plus_set = set(), set()
    for x in itertools.product(*(range(c) for c in cs)):
        dw = sum(d * m * xi for d, m, xi in zip(degs, mus, x))
        if w_splits(dw):
            split_set.add(x)
        if w_plus(dw):
            plus_set.add(x)
    assert plus_set <= split_set
    # the two computation paths for c_inf = [F_0 : F_0 meet R+] must agree
    assert size == len(plus_set) * comps.c_inf
    assert len(split_set) % len(plus_set) == 0
    cprime = len(split_set) // len(plus_set)
    assert comps.cprime_bound % cprime == 0

    gens = []
    span = {(0,) * len(cs)}
    for x in sorted(split_set):
        if x in span:
            continue
        ordx = reduce(lcm, (c // gcd(c, xi) for xi, c in zip(x, cs)), 1)
        span = {tuple((si + j * xi) % ci for si, xi, ci in zip(s, x, cs))
                for s in span for j in range(ordx)}
        gens.append(_reduce_generator(K.ctx, x, Ps, mus, Nprime))
    assert len(span) == len(split_set)
    F = field_expr(q, gens, 1)
    return replace(comps, cprime_exact=cprime, F=F)


def _bound_only(comps):
    # c'_inf | gcd(c_inf, e_inf), so a trivial bound still pins it
    if comps.cprime_bound == 1:
        if comps.F0_plus_deg == 1:
            # [F : k] = c'_inf * [F_0 cap R^+ : k] = 1 forces F = k
            return replace(comps, cprime_exact=1, F=field_expr(comps.q, (), 1))
        return replace(comps, cprime_exact=1)
    return comps


def _reduce_generator(ctx, x, Ps, mus, Nprime):
    """Kummer generator for a lattice element, in lowest exponent form.

    The element is w = lam * prod P_i^{x_i mu_i} with lam the sign
    (-1)^{deg w}; its root generates a field of degree o = the order of w
    modulo N'-th powers. When the exponents and the sign admit an o-th
    root form the generator is rewritten with e = o, otherwise it is kept
    at exponent N' with the certified degree attached.
    """
    q = ctx.q
    exps = [xi * m for xi, m in zip(x, mus)]
    dw = sum(P.degree * v for P, v in zip(Ps, exps))
    one = ctx.one()
    lam = -one if dw % 2 else one
    o_val = reduce(lcm, (Nprime // gcd(Nprime, v) for v in exps if v), 1)
    lam_ord = 1 if lam == one else 2
    o_lam = lam_ord // gcd(lam_ord, (q - 1) // Nprime)
    o = lcm(o_val, o_lam)
    red = Nprime // o
    if all(v % red == 0 for v in exps):
        for i in range(1, q):
            lam0 = ctx.from_int(i)
            if is_eth_power(lam0 ** red / lam, Nprime):
                poly = prod((P ** (v // red) for P, v in zip(Ps, exps)),
                            start=FqPoly.const(ctx, one))
                return _radical_gen(o, lam0, poly)
    poly = prod((P ** v for P, v in zip(Ps, exps)), start=FqPoly.const(ctx, one))
    return _radical_gen(Nprime, lam, poly, degree=o)


# -- wild part --


@dataclass(frozen=True)
class WildBounds:
    """Degree bounds for the wild part of the genus field.

    Each wild place P with e_P = p^{u_P} * e0 contributes a cyclic p-piece
    of degree at most p^{u_P}; when no wild place exists and the infinite
    prime is tame, the whole wild part is an extension of constants.
    """

    wild_places: tuple
    finite_wild_degree_bound: int
    has_infinite_component: bool
    tame_case_constants_only: bool

    def json(self):
        return {"wild_places": [{"poly": poly, "deg": deg, "u": u}
                                for poly, deg, u in self.wild_places],
                "finite_wild_degree_bound": self.finite_wild_degree_bound,
                "has_infinite_component": self.has_infinite_component,
                "tame_case_constants_only": self.tame_case_constants_only}


def wild_bounds(profile):
    """Wild-part bounds of a profile; trivial for radical (tame) input."""
    wp = tuple((render_poly(pl.P) if pl.P is not None else None, pl.deg, pl.u_P)
               for pl in profile.finite if pl.u_P > 0)
    inf_wild = profile.e_inf % profile.p == 0
    return WildBounds(wp, profile.p ** sum(u for _, _, u in wp), inf_wild,
                      not wp and not inf_wild)


# -- reports --


@dataclass(frozen=True)
class GenusReport:
    """Sandwich bounds, and the exact genus field when certified.

    lower and upper always hold; exact_field is set (and equals lower) when
    one of the certificates applies, with exactness_reason naming it:
    "F_equals_F0", "abelian_tame", or "constants_collapse". conjectural is
    the expected value K * F * F_{q^{t_0}} whenever F is determined. All
    expressions include the defining generator of K itself; for base
    constants s > 1 the extension F_{q^s} of K is subsumed by the
    constants degree of the expression (s divides t_0).
    """

    profile: object
    components: GenusComponents
    wild: WildBounds
    t0: int
    lower: FieldExpr
    upper: FieldExpr
    exact: bool
    exact_field: object
    conjectural: object
    exactness_reason: object


def _constants_collapse(K, comps):
    """Whether each F_P collapses into K times constants.

    Looks for an exponent j' (a multiple of c_P/gcd(c_P, n)) with
    alpha_i * j' = 1 and alpha_m * j' = 0 mod c_P over the factorization
    D = prod P_m^{alpha_m}: then the n-th root y of gamma*D yields an
    element y^{n j'/c_P} * g(T) of K whose c_P-th power is P_i times a
    constant, so F_P is contained in K times an extension of constants.
    Requires every c_P to be Kummer (c_P | q - 1).
    """
    fac = K.D_factors.factors
    q = K.ctx.q
    cmap = {pl.poly: pl.c_P for pl in comps.places}
    alphas = [alpha for _, alpha in fac]
    for i, (Pi, alpha_i) in enumerate(fac):
        c = cmap[render_poly(Pi)]
        if c == 1:
            continue
        if (q - 1) % c != 0:
            return False
        step = c // gcd(c, K.n)
        if not any(
                (alpha_i * step * j - 1) % c == 0
                and all((am * step * j) % c == 0
                        for m, am in enumerate(alphas) if m != i)
                for j in range(gcd(c, K.n))):
            return False
    return True


def genus_report(K):
    """Full genus-field report of a radical extension."""
    profile = build_profile(K)
    comps = find_F(K, build_F0(profile))
    wild = wild_bounds(profile)
    q, t0 = profile.q, profile.t0
    k_gen = _radical_gen(K.n, K.gamma, K.D)

    exact, reason = False, None
    if comps.F is not None and comps.cprime_exact == comps.c_inf:
        exact, reason = True, "F_equals_F0"
    elif comps.F is not None and (q - 1) % K.n == 0:
        exact, reason = True, "abelian_tame"
    elif _constants_collapse(K, comps):
        exact, reason = True, "constants_collapse"

    if comps.F is not None:
        lower = field_expr(q, [k_gen] + list(comps.F.radicals + comps.F.cyclo), t0)
    else:
        split_part = ([OpaqueGen("F0_cap_Rplus", comps.F0_plus_deg)]
                      if comps.F0_plus_deg > 1 else [])
        lower = field_expr(q, [k_gen] + split_part, t0)
    conjectural = lower if (comps.F is not None or exact) else None
    if exact:
        comps = replace(comps, u_status="equals_t0")
        upper = exact_field = lower
    else:
        upper = field_expr(
            q, [k_gen] + list(comps.F0.radicals + comps.F0.cyclo), None)
        exact_field = None
    return GenusReport(profile=profile, components=comps, wild=wild, t0=t0,
                       lower=lower, upper=upper, exact=exact,
                       exact_field=exact_field, conjectural=conjectural,
                       exactness_reason=reason)


def genus_report_abstract(profile):
    """Sandwich report from ramification data alone (no radical model).

    The lower bound composes K with the split part F_0 meet R+ and the
    prime-to-p part of t_0; the upper with all of F_0 and an undetermined
    constants degree. When c_inf = 1 the split part is all of F_0, and if
    additionally everything is tame the sandwich collapses and the tame
    genus field K * F_0 * F_{q^{t_0}} is exact.
    """
    comps = build_F0(profile)
    wild = wild_bounds(profile)
    q, t0 = profile.q, profile.t0
    t0_tame = t0 // profile.p ** p_adic_val(profile.p, t0)
    k_gen = OpaqueGen("K", None)
    f0_gens = list(comps.F0.radicals + comps.F0.cyclo)
    if comps.c_inf == 1:
        comps = replace(comps, cprime_exact=1, F=comps.F0)
    else:
        comps = _bound_only(comps)
    exact = comps.c_inf == 1 and wild.tame_case_constants_only
    if comps.F is not None:
        low_gens = list(comps.F.radicals + comps.F.cyclo)
    elif comps.F0_plus_deg > 1:
        low_gens = [OpaqueGen("F0_cap_Rplus", comps.F0_plus_deg)]
    else:
        low_gens = []
    if exact:
        comps = replace(comps, u_status="equals_t0")
        lower = field_expr(q, [k_gen] + low_gens, t0)
        upper = exact_field = lower
    else:
        lower = field_expr(q, [k_gen] + low_gens, t0_tame)
        upper = field_expr(q, [k_gen] + f0_gens, None)
        exact_field = None
    return GenusReport(profile=profile, components=comps, wild=wild, t0=t0,
                       lower=lower, upper=upper, exact=exact,
                       exact_field=exact_field, conjectural=None,
                       exactness_reason="F_equals_F0" if exact else None)


# -- closed-form families --


def prime_degree_case(q, l, t, K_in_Rplus):
    """Genus degree and t_0 for cyclic extensions of prime degree l with
    l not dividing q(q-1) and t ramified places.

    Such extensions are unramified at infinity and every component F_P has
    degree l; the genus field has degree l^{t-1} over K with t_0 = 1 when
    K lies in the totally-split-at-infinity cyclotomic tower, and degree
    l^t with t_0 = l otherwise. Returns ([K_ge : K], t_0).
    """
    if len(sympy.primefactors(q)) != 1 or q < 2:
        raise DomainError(f"q = {q} is not a prime power")
    if not sympy.isprime(l):
        raise DomainError(f"l = {l} must be prime")
    if q % l == 0 or (q - 1) % l == 0:
        raise DomainError(f"l = {l} must not divide q(q-1)")
    if not isinstance(t, int) or t < 1:
        raise DomainError("need at least one ramified place")
    if K_in_Rplus:
        return l ** (t - 1), 1
    return l ** t, l


@dataclass(frozen=True)
class PrimePowerProfile:
    """Closed-form data for K = k((gamma*D)^(1/l^nu)) with l^nu | q - 1.

    a holds v_l(alpha_i) per prime factor of D and dprime the valuations
    v_l(deg P_i); d = min(nu, v_l(deg D)) and delta = min over places of
    min(nu, a_i + dprime_i), so e_inf = l^(nu-d) and c_inf = l^(nu-delta),
    with c'_inf dividing their gcd l^(nu-d). t0 = l^m where m is minimal
    with (-1)^{deg D} gamma an l^d-th power of F_{q^{l^m}}.
    """

    l: int
    nu: int
    a: tuple
    dprime: tuple
    d: int
    delta: int
    m: int
    e_inf: int
    c_inf: int
    cprime_bound: int
    t0: int
    geometric: bool
    gens: tuple


def prime_power_case(K):
    """Evaluate the closed-form formulas for prime-power Kummer degree."""
    if K.s != 1:
        raise DomainError("prime power analysis needs base constants s = 1")
    ls = sympy.primefactors(K.n)
    if len(ls) != 1:
        raise DomainError(f"n = {K.n} is not a prime power")
    l = ls[0]
    nu = p_adic_val(l, K.n)
    q = K.ctx.q
    if (q - 1) % K.n != 0:
        raise DomainError(f"need {l}^{nu} | q - 1")
    fac = K.D_factors.factors
    if not fac:
        raise DomainError("D must have at least one prime factor")
    a = tuple(p_adic_val(l, alpha) for _, alpha in fac)
    dprime = tuple(p_adic_val(l, P.degree) for P, _ in fac)
    d = min(nu, p_adic_val(l, K.D.degree))
    delta = min(min(nu, ai + dpi) for ai, dpi in zip(a, dprime))
    beta = K.gamma if K.D.degree % 2 == 0 else -K.gamma
    ord_beta = beta.multiplicative_order()
    ld = l ** d
    m = 0
    while ((q ** (l ** m) - 1) // gcd(ld, q ** (l ** m) - 1)) % ord_beta != 0:
        m += 1
        assert m <= d
    gens = []
    for (P, _), ai in zip(fac, a):
        sign = (-K.ctx.one()) ** P.degree
        gens.append(_radical_gen(l ** (nu - ai), sign, P))
    return PrimePowerProfile(
        l=l, nu=nu, a=a, dprime=dprime, d=d, delta=delta, m=m,
        e_inf=l ** (nu - d), c_inf=l ** (nu - delta),
        cprime_bound=l ** (nu - d), t0=l ** m, geometric=0 in a,
        gens=tuple(gens))


# -- serialization --


def report_json(report):
    """Stable JSON-ready dict for a genus report."""
    comps = report.components

    def opt(expr):
        return expr.json() if expr is not None else None

    return {
        "lower": report.lower.json(),
        "upper": report.upper.json(),
        "exact": report.exact,
        "exact_field": opt(report.exact_field),
        "conjectural": opt(report.conjectural),
        "t0": report.t0,
        "components": [pl.json() for pl in comps.places],
        "wild": report.wild.json(),
        "infinity": {
            "e_inf": comps.e_inf,
            "c_inf": comps.c_inf,
            "cprime_bound": comps.cprime_bound,
            "cprime_exact": comps.cprime_exact,
            "F": opt(comps.F),
            "F0": opt(comps.F0),
            "F0_plus_deg": comps.F0_plus_deg,
            "u_status": comps.u_status,
            "exactness_reason": report.exactness_reason,
        },
    }


def render_report(report):
    """Human-readable multi-line rendering of a genus report."""
    comps = report.components
    lines = []
    for pl in comps.places:
        name = pl.poly if pl.poly is not None else f"<place of degree {pl.deg}>"
        wild = f", wild u = {pl.u_P}" if pl.u_P else ""
        lines.append(f"place {name}: e = {pl.e_P}, c = {pl.c_P}{wild}")
    cpe = comps.cprime_exact if comps.cprime_exact is not None else "?"
    lines.append(f"infinity: e_inf = {comps.e_inf}, c_inf = {comps.c_inf}, "
                 f"c'_inf = {cpe} (divides {comps.cprime_bound})")
    lines.append(f"t0 = {report.t0}")
    lines.append(f"F0 = {comps.F0.render()}")
    lines.append(f"F  = {comps.F.render() if comps.F is not None else 'undetermined'}")
    lines.append(f"lower: {report.lower.render()}")
    lines.append(f"upper: {report.upper.render()}")
    if report.exact:
        lines.append(f"EXACT [{report.exactness_reason}]: "
                     f"K_ge = {report.exact_field.render()}")
    elif report.conjectural is not None:
        lines.append(f"CONJECTURE: K_ge = {report.conjectural.render()}")
    elif report.profile.radical is None:
        lines.append("CONJECTURE: unavailable (abstract profile)")
    else:
        lines.append("CONJECTURE: unavailable (F undetermined)")
    if not report.wild.tame_case_constants_only:
        wp = ", ".join(f"{poly if poly is not None else f'deg {deg}'}: p^{u}"
                       for poly, deg, u in report.wild.wild_places)
        lines.append(f"wild bounds: finite <= {report.wild.finite_wild_degree_bound}"
                     f" [{wp}]" + (", infinite component possible"
                                   if report.wild.has_infinite_component else ""))
    return "\n".join(lines)
