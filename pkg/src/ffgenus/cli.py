"""Command line front end.

Thin wrapper over the library: parse flags, build the objects, print one
report. Output is deterministic for identical invocations; --format picks
plain text or JSON. Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys

from .carlitz import carlitz_action, euler_phi
from .ffpoly import (
    DomainError,
    FqPoly,
    ParseError,
    factor,
    make_context,
    monic_polys,
    parse_element,
    parse_poly,
    render_element,
    render_poly,
)
from .genus import genus_report, genus_report_abstract, render_report, report_json
from .oracle import (
    DEFAULT_CONFIG,
    carlitz_compose_check,
    naive_factor,
    splitting_at_finite,
    t0_root_degrees,
    unit_count,
)
from .ramify import (
    build_profile,
    profile_from_dict,
    radical_extension,
    ram_finite,
    t0_radical,
)

# "2T" and "T^2(T+1)" mean products; the core grammar wants the * spelled out
_IMPLICIT_PRODUCT = re.compile(r"([0-9A-Za-z)])\s*(?=[A-Za-z(])")


def normalize_poly_text(text):
    return _IMPLICIT_PRODUCT.sub(r"\1*", text)


_FIELD_RE = re.compile(r"(\d+)(?:\^(\d+))?")


def context_from_field(text):
    """Context for --field given as p, p^m, or a prime power like 9."""
    m = _FIELD_RE.fullmatch(text.strip())
    if not m:
        raise ParseError(f"--field must look like 3, 9 or 3^2, got {text!r}")
    q = int(m.group(1)) ** int(m.group(2) or 1)
    if q < 2:
        raise ParseError(f"--field must be a prime power >= 2, got {text!r}")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    deg = 0
    rest = q
    while rest % p == 0:
        rest //= p
        deg += 1
    if rest != 1:
        raise ParseError(f"--field must be a prime power, got {text!r}")
    return make_context(p, deg)


def _radical_from_args(args):
    ctx = context_from_field(args.field)
    gamma = parse_element(ctx, normalize_poly_text(args.gamma))
    D = parse_poly(ctx, normalize_poly_text(args.poly))
    return radical_extension(ctx, args.n, gamma, D, args.base_constants)


# ------------------------------------------------------------------- commands


def cmd_factor(args):
    ctx = context_from_field(args.field)
    fac = factor(parse_poly(ctx, normalize_poly_text(args.poly)))
    payload = {
        "unit": render_element(fac.unit),
        "factors": [{"poly": render_poly(g), "mult": m} for g, m in fac.factors],
    }
    parts = [f"({render_poly(g)})" + (f"^{m}" if m > 1 else "")
             for g, m in fac.factors]
    unit = render_element(fac.unit)
    if unit != "1" or not parts:
        parts.insert(0, unit)
    return payload, " * ".join(parts), 0


def cmd_phi(args):
    ctx = context_from_field(args.field)
    value = euler_phi(parse_poly(ctx, normalize_poly_text(args.poly)))
    return {"phi": value}, str(value), 0


def cmd_carlitz(args):
    ctx = context_from_field(args.field)
    rho = carlitz_action(parse_poly(ctx, normalize_poly_text(args.poly)))
    coeffs = [render_poly(c) for c in rho.coeffs]
    text = "\n".join(f"u^(q^{j}): {c}" for j, c in enumerate(coeffs))
    return {"coeffs": coeffs}, text, 0


def _profile_payload(profile):
    return {
        "q": profile.q,
        "s": profile.s,
        "finite": [
            {
                "poly": render_poly(pl.P) if pl.P is not None else None,
                "deg": pl.deg,
                "e": list(pl.e_list),
                "e_P": pl.e_P,
                "u": pl.u_P,
                "e0": pl.e0,
            }
            for pl in profile.finite
        ],
        "infinity": [{"e": e, "t": t} for e, t in profile.infinity],
        "e_inf": profile.e_inf,
        "t0": profile.t0,
        "geometric": profile.geometric,
    }


def _profile_text(profile):
    lines = [f"q = {profile.q}, s = {profile.s}"]
    if profile.finite:
        lines.append("ramified finite places:")
        for pl in profile.finite:
            name = render_poly(pl.P) if pl.P is not None else f"<degree {pl.deg}>"
            detail = f"e = {pl.e_P}" + (f" (p^{pl.u_P} * {pl.e0})" if pl.u_P else "")
            lines.append(f"  {name}: {detail}")
    else:
        lines.append("ramified finite places: none")
    for e, t in profile.infinity:
        lines.append(f"infinite prime: e = {e}, t = {t}")
    lines.append(f"e_inf = {profile.e_inf}")
    lines.append(f"t0 = {profile.t0}")
    geo = "unknown" if profile.geometric is None else str(profile.geometric).lower()
    lines.append(f"geometric: {geo}")
    return "\n".join(lines)


def cmd_analyze(args):
    profile = build_profile(_radical_from_args(args))
    return _profile_payload(profile), _profile_text(profile), 0


def _load_profile(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read profile file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"profile file is not valid JSON: {exc}") from exc
    return profile_from_dict(data)


def cmd_genus(args):
    if args.profile is not None:
        if args.poly or args.gamma or args.n is not None:
            raise ParseError("--profile replaces --poly/--gamma/--n")
        report = genus_report_abstract(_load_profile(args.profile))
    else:
        if not (args.poly and args.gamma and args.n is not None):
            raise ParseError("genus needs --poly, --gamma and --n (or --profile)")
        report = genus_report(_radical_from_args(args))
    return report_json(report), render_report(report), 0


def cmd_oracle_verify(args):
    ctx = context_from_field(args.field)
    rng = random.Random(DEFAULT_CONFIG.seed)
    checks = []

    def run(name, fn):
        checks.append({"name": name, "ok": bool(fn())})

    def check_factor():
        for _ in range(20):
            deg = rng.randrange(1, 5)
            ints = [rng.randrange(ctx.q) for _ in range(deg)] + [rng.randrange(1, ctx.q)]
            f = FqPoly.from_ints(ctx, ints)
            if naive_factor(f) != factor(f):
                return False
        return True

    def check_phi():
        if ctx.q > 9:
            return None
        return all(unit_count(m) == euler_phi(m)
                   for d in (1, 2) for m in monic_polys(ctx, d))

    def check_carlitz():
        T = FqPoly.x(ctx)
        one = FqPoly.const(ctx, ctx.one())
        pairs = ((T, T), (T + one, T), (T * T + one, T + one))
        return all(carlitz_compose_check(M, N) for M, N in pairs)

    def check_t0():
        for d in range(1, 7):
            if d % ctx.p == 0:
                continue
            for g in (1, ctx.q - 1):
                gamma = ctx.from_int(g)
                if t0_root_degrees(gamma, d) != t0_radical(gamma, d, 1):
                    return False
        return True

    run("naive_factor vs factor", check_factor)
    phi_ok = check_phi()
    if phi_ok is None:
        checks.append({"name": "unit_count vs euler_phi", "ok": None})
    else:
        checks.append({"name": "unit_count vs euler_phi", "ok": phi_ok})
    run("carlitz composition laws", check_carlitz)
    run("t0_root_degrees vs t0_radical", check_t0)

    if args.poly and args.gamma and args.n is not None:
        K = _radical_from_args(args)

        def check_splitting():
            expected = dict(ram_finite(K))
            for P in monic_polys(ctx, 1):
                e, degs = splitting_at_finite(K, P)
                if e != expected.get(P, 1):
                    return False
                if e == 1 and sum(degs) != K.n:
                    return False
            return True

        run("splitting_at_finite vs ram_finite", check_splitting)

    failed = [c for c in checks if c["ok"] is False]
    lines = []
    for c in checks:
        tag = "skip" if c["ok"] is None else ("ok" if c["ok"] else "FAIL")
        lines.append(f"{tag:4s} {c['name']}")
    lines.append("all checks passed" if not failed else f"{len(failed)} check(s) failed")
    payload = {"checks": checks, "ok": not failed}
    return payload, "\n".join(lines), 0 if not failed else 1


# --------------------------------------------------------------------- parser


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ffgenus",
        description="ramification and genus field reports for radical "
                    "extensions of F_q(T)")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    def common(p, handler):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(handler=handler)

    def radical_flags(p, required):
        p.add_argument("--poly", required=required,
                       help="squarefull part D of the radicand (monic)")
        p.add_argument("--gamma", required=required,
                       help="unit gamma of the radicand gamma*D")
        p.add_argument("--n", type=int, required=required,
                       help="root exponent, prime to p and to q-1's char")
        p.add_argument("--base-constants", type=int, default=1, metavar="S",
                       help="work over F_{q^S}(T) (default 1)")

    p = sub.add_parser("factor", help="factor a polynomial over F_q")
    p.add_argument("--field", required=True, help="base field: p, p^m, or q")
    p.add_argument("--poly", required=True)
    common(p, cmd_factor)

    p = sub.add_parser("phi", help="unit count of F_q[T]/M")
    p.add_argument("--field", required=True)
    p.add_argument("--poly", required=True, help="the modulus M")
    common(p, cmd_phi)

    p = sub.add_parser("carlitz", help="coefficients of the Carlitz action of M")
    p.add_argument("--field", required=True)
    p.add_argument("--poly", required=True, help="the multiplier M")
    common(p, cmd_carlitz)

    p = sub.add_parser("analyze", help="ramification profile of k((gamma*D)^(1/n))")
    p.add_argument("--field", required=True)
    radical_flags(p, required=True)
    common(p, cmd_analyze)

    p = sub.add_parser("genus", help="genus field report (radical or --profile)")
    p.add_argument("--field", help="base field (radical mode)")
    radical_flags(p, required=False)
    p.add_argument("--profile", metavar="FILE",
                   help="JSON ramification profile for the abstract path")
    common(p, cmd_genus)

    p = sub.add_parser("oracle-verify", help="run brute-force cross-checks")
    p.add_argument("--field", required=True)
    radical_flags(p, required=False)
    common(p, cmd_oracle_verify)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "genus" and args.profile is None and not args.field:
            raise ParseError("genus needs --field unless --profile is given")
        payload, text, code = args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(payload, indent=2) if args.format == "json" else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
