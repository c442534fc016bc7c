"""Base field and polynomial arithmetic: fixed values plus brute-force invariants."""

import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ffgenus.ffpoly import (
    DomainError,
    FqPoly,
    ParseError,
    factor,
    is_eth_power,
    is_irreducible,
    make_context,
    monic_polys,
    parse_element,
    parse_poly,
    poly_arith,
    poly_gcd,
    render_element,
    render_poly,
)


def P(ctx, text):
    return parse_poly(ctx, text)


# -- contexts --


def test_make_context_f3():
    ctx = make_context(3, 1)
    assert (ctx.p, ctx.m, ctx.q) == (3, 1, 3)
    assert ctx.generator == ctx.from_int(2)


def test_make_context_f25_has_cube_roots_of_unity():
    ctx = make_context(5, 2)
    assert ctx.q == 25
    zeta = ctx.generator ** 8
    assert zeta != ctx.one()
    assert zeta.multiplicative_order() == 3


def test_make_context_f9():
    ctx = make_context(3, 2)
    assert ctx.q == 9
    assert ctx.generator.multiplicative_order() == 8
    # canonical modulus is the smallest irreducible: X^2 + 1 over F_3
    assert ctx.modulus == (1, 0)


def test_make_context_rejects_bad_input():
    with pytest.raises(DomainError):
        make_context(4, 1)
    with pytest.raises(DomainError):
        make_context(3, 0)
    with pytest.raises(DomainError):
        make_context(2, 17)  # 2^17 over the q cap


def test_context_is_cached():
    assert make_context(3, 2) is make_context(3, 2)


def test_from_int_round_trip():
    for p, m in [(2, 1), (3, 2), (5, 2), (2, 4)]:
        ctx = make_context(p, m)
        for i in range(ctx.q):
            assert ctx.from_int(i).to_int() == i


def test_element_field_axioms_f9():
    ctx = make_context(3, 2)
    els = list(ctx.elements())
    for a in els:
        for b in els:
            assert (a + b) - b == a
            if not b.is_zero():
                assert (a * b) / b == a
    for a in els:
        if not a.is_zero():
            assert a * a.inverse() == ctx.one()
            assert (ctx.q - 1) % a.multiplicative_order() == 0


def test_tower_extension_embeds_base():
    base = make_context(3, 2)
    ext = base.extension(2)
    assert (ext.mtot, ext.q) == (4, 81)
    for i in range(base.q):
        for j in range(base.q):
            a, b = base.from_int(i), base.from_int(j)
            assert ext.lift(a) * ext.lift(b) == ext.lift(a * b)
            assert ext.lift(a) + ext.lift(b) == ext.lift(a + b)
    assert ext.generator.multiplicative_order() == 80


def test_extension_degree_one_is_identity():
    ctx = make_context(5, 1)
    assert ctx.extension(1) is ctx


# -- ring operations --


def test_gcd_example_f3():
    ctx = make_context(3, 1)
    g = poly_arith(P(ctx, "T^2-T-1"), P(ctx, "T"), "gcd")
    assert g == P(ctx, "1")


def test_cube_root_product_f25():
    ctx = make_context(5, 2)
    zeta = FqPoly.const(ctx, ctx.generator ** 8)
    x = FqPoly.x(ctx)
    prod = (x - zeta) * (x - zeta * zeta)
    assert prod == P(ctx, "T^2+T+1")


def test_divrem_example():
    ctx = make_context(3, 1)
    q, r = poly_arith(P(ctx, "T^3+2*T+1"), P(ctx, "T"), "divrem")
    assert q == P(ctx, "T^2+2")
    assert r == P(ctx, "1")


def test_divrem_by_zero():
    ctx = make_context(3, 1)
    with pytest.raises(DomainError):
        P(ctx, "T").divrem(FqPoly(ctx, ()))


def small_poly(ctx, rng, maxdeg):
    return FqPoly(ctx, tuple(ctx.from_int(rng.randrange(ctx.q)) for _ in range(rng.randrange(maxdeg + 2))))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 3 ** 6 - 1), st.integers(0, 3 ** 6 - 1))
def test_divrem_reconstructs(i, j):
    ctx = make_context(3, 1)
    f = FqPoly.from_ints(ctx, [(i // 3 ** k) % 3 for k in range(6)])
    g = FqPoly.from_ints(ctx, [(j // 3 ** k) % 3 for k in range(6)])
    if g.is_zero():
        return
    q, r = f.divrem(g)
    assert q * g + r == f
    assert r.degree < g.degree


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5 ** 4 - 1), st.integers(1, 5 ** 4 - 1))
def test_gcd_divides_both_and_is_monic(i, j):
    ctx = make_context(5, 1)
    f = FqPoly.from_ints(ctx, [(i // 5 ** k) % 5 for k in range(4)])
    g = FqPoly.from_ints(ctx, [(j // 5 ** k) % 5 for k in range(4)])
    d = poly_gcd(f, g)
    assert d.is_monic
    assert (f % d).is_zero() and (g % d).is_zero()


# -- irreducibility --


def test_is_irreducible_fixed_cases():
    f3 = make_context(3, 1)
    assert is_irreducible(P(f3, "T^3+2*T+1"))
    assert is_irreducible(P(f3, "T^2-T-1"))
    f25 = make_context(5, 2)
    assert not is_irreducible(P(f25, "T^2+T+1"))


def test_is_irreducible_rejects_constants():
    ctx = make_context(3, 1)
    with pytest.raises(DomainError):
        is_irreducible(P(ctx, "2"))


def _mobius(n):
    mu = 1
    for _, e in sympy.factorint(n).items():
        if e > 1:
            return 0
        mu = -mu
    return mu


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_irreducible_counts_match_necklace_formula(q):
    p = sympy.primefactors(q)[0]
    m = 0
    while p ** (m + 1) <= q:
        m += 1
    ctx = make_context(p, m)
    for d in range(1, 5):
        count = sum(1 for f in monic_polys(ctx, d) if is_irreducible(f))
        expected = sum(_mobius(e) * q ** (d // e) for e in sympy.divisors(d)) // d
        assert count == expected


# -- factorization --


def test_factor_fixed_cases():
    f3 = make_context(3, 1)
    f5 = make_context(5, 1)
    assert factor(P(f3, "X^2+1")).degree_multiset() == [2]
    assert factor(P(f5, "X^3-1")).degree_multiset() == [1, 2]
    fac = factor(P(f3, "X^2-1"))
    assert fac.factors == ((P(f3, "X+1"), 1), (P(f3, "X+2"), 1))


def test_factor_zero_rejected():
    ctx = make_context(3, 1)
    with pytest.raises(DomainError):
        factor(FqPoly(ctx, ()))


def test_factor_unit_and_constant():
    ctx = make_context(5, 1)
    fac = factor(P(ctx, "3"))
    assert fac.factors == () and fac.unit == ctx.from_int(3)


CONTEXTS = [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2), (5, 2)]


@pytest.mark.parametrize("p,m", CONTEXTS)
def test_factor_recombines_exhaustive_small(p, m):
    ctx = make_context(p, m)
    maxdeg = 3 if ctx.q <= 5 else 2
    for d in range(1, maxdeg + 1):
        for f in monic_polys(ctx, d):
            fac = factor(f)
            assert fac.expand() == f
            for g, _ in fac.factors:
                assert g.is_monic and is_irreducible(g)


@pytest.mark.parametrize("p,m", CONTEXTS)
def test_factor_recombines_random_to_degree_six(p, m):
    ctx = make_context(p, m)
    rng = random.Random(10 * p + m)
    for _ in range(40):
        d = rng.randrange(4, 7)
        coeffs = [ctx.from_int(rng.randrange(ctx.q)) for _ in range(d)]
        coeffs.append(ctx.from_int(rng.randrange(1, ctx.q)))
        f = FqPoly(ctx, tuple(coeffs))
        fac = factor(f)
        assert fac.expand() == f
        assert all(is_irreducible(g) for g, _ in fac.factors)
        assert fac.factors == tuple(sorted(fac.factors, key=lambda fm: fm[0].sort_key()))


def test_factor_agrees_with_is_irreducible():
    ctx = make_context(3, 1)
    for f in monic_polys(ctx, 3):
        single = factor(f).factors
        assert is_irreducible(f) == (len(single) == 1 and single[0][1] == 1)


def test_factor_is_deterministic():
    ctx = make_context(5, 2)
    f = P(ctx, "X^6 + g*X^3 + X + g^7")
    assert factor(f) == factor(f)


def test_repeated_factors_char2():
    ctx = make_context(2, 2)
    x = FqPoly.x(ctx)
    f = (x + FqPoly.const(ctx, ctx.one())) ** 4 * (x ** 2 + x + FqPoly.const(ctx, ctx.generator)) ** 2
    fac = factor(f)
    assert sorted(mult for _, mult in fac.factors) == [2, 4]
    assert fac.expand() == f


# -- power residues --


def test_is_eth_power_fixed_cases():
    f3 = make_context(3, 1)
    f5 = make_context(5, 1)
    assert is_eth_power(f3.one(), 7)
    assert not is_eth_power(-f3.one(), 2)
    assert is_eth_power(-f5.one(), 2)


def test_is_eth_power_zero_rejected():
    ctx = make_context(3, 1)
    with pytest.raises(DomainError):
        is_eth_power(ctx.zero(), 2)


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (5, 2)])
def test_is_eth_power_matches_brute_force(p, m):
    ctx = make_context(p, m)
    units = [a for a in ctx.elements() if not a.is_zero()]
    for e in range(1, 13):
        powers = {a ** e for a in units}
        for gamma in units:
            assert is_eth_power(gamma, e) == (gamma in powers)


# -- literals --


def test_parse_basic_forms():
    ctx = make_context(3, 1)
    assert P(ctx, "T^2 - T - 1") == FqPoly.from_ints(ctx, [2, 2, 1])
    assert P(ctx, "T^2*(T^2-T-1)") == FqPoly.from_ints(ctx, [0, 0, 2, 2, 1])
    assert P(ctx, "-1") == FqPoly.from_ints(ctx, [2])
    assert P(ctx, "2*T^3") == FqPoly.from_ints(ctx, [0, 0, 0, 2])


def test_parse_extension_literals():
    ctx = make_context(3, 2)
    assert parse_element(ctx, "g^3") == ctx.generator ** 3
    assert parse_element(ctx, "[1,2]") == ctx.elem([1, 2])
    assert parse_element(ctx, "2") == ctx.from_int(2)


def test_parse_errors():
    ctx = make_context(3, 1)
    for bad in ["", "  ", "T + U", "T^", "1 +", "(T", "T?", "[1,]"]:
        with pytest.raises(ParseError):
            parse_poly(ctx, bad)
    with pytest.raises(ParseError):
        parse_poly(ctx, "g")  # no generator literal in a prime field
    with pytest.raises(ParseError):
        parse_element(ctx, "T^2")


@pytest.mark.parametrize("p,m", [(3, 1), (3, 2), (5, 2)])
def test_render_parse_round_trip(p, m):
    ctx = make_context(p, m)
    rng = random.Random(99 * p + m)
    for _ in range(50):
        f = small_poly(ctx, rng, 5)
        assert parse_poly(ctx, render_poly(f)) == f


def test_render_element_canonical():
    ctx = make_context(3, 2)
    assert render_element(ctx.from_int(2)) == "2"
    assert render_element(ctx.generator) == "g"
    assert render_element(ctx.generator ** 5) == "g^5"
    assert render_poly(FqPoly.from_ints(make_context(3, 1), [1, 0, 2])) == "2*T^2 + 1"


def test_frobenius_power_matches_pow():
    ctx = make_context(3, 2)
    rng = random.Random(7)
    for _ in range(20):
        f = small_poly(ctx, rng, 4)
        assert f.frobenius_power(3) == f ** 3
        assert f.frobenius_power(9) == f ** 9
