"""Batch command-line front end.

Exit codes: 0 success, 1 input or validation error, 2 bound-schedule
exhaustion diagnostic.  Big integers travel as decimal strings, rationals
as "num/den"; --json switches every subcommand to a parseable document.
"""

import argparse
import json
import sys
from fractions import Fraction

from .bigmod import iroot
from .fpoly import format_poly, parse_poly
from .numberfield import (
    DescriptorError, census_norms, descriptor_to_json, load_descriptor,
    quadratic_descriptor, validate_descriptor,
)
from .roots import CapelliError, nth_roots
from .smoothness import least_prime_bound
from .splitter import CyclicExhausted, SplitParams, UnsupportedPrime, factor_fixed


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _emit(doc, as_json: bool, plain_lines):
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        for line in plain_lines:
            print(line)


def _split_params(args) -> SplitParams:
    kwargs = {}
    for name in ("delta", "c", "epsilon", "tau"):
        val = getattr(args, name, None)
        if val is not None:
            kwargs[name] = Fraction(val)
    if getattr(args, "erh", False):
        kwargs["erh_mode"] = True
    return SplitParams(**kwargs)


def _add_param_flags(sub):
    sub.add_argument("--delta", help="rational like 1/20")
    sub.add_argument("--c", help="rational generator-budget exponent")
    sub.add_argument("--epsilon", help="rational slack")
    sub.add_argument("--tau", help="rational threshold exponent, default 1/2")


def cmd_factor(args) -> int:
    desc = load_descriptor(args.descriptor)
    f = parse_poly(args.poly)
    params = _split_params(args)
    try:
        result = factor_fixed(f, args.prime, desc, params)
    except CyclicExhausted as exc:
        print(f"bound schedule exhausted without a split "
              f"({len(exc.events)} trace events)", file=sys.stderr)
        return 2
    plain = [f"p = {result.p}", f"leading = {result.leading}"]
    for poly, mult in result.factors:
        suffix = f"  ^{mult}" if mult > 1 else ""
        plain.append(format_poly(poly, result.p) + suffix)
    _emit(result.to_json(), args.json, plain)
    return 0


def cmd_roots(args) -> int:
    desc = load_descriptor(args.descriptor)
    params = _split_params(args)
    zeta = args.zeta_mode.replace("-", "_")
    if zeta == "none":
        result = nth_roots(args.a, args.n, args.prime, desc, params)
    else:
        result = nth_roots(args.a, args.n, args.prime, desc, params,
                           fast_path=True, zeta_mode=zeta)
    plain = [f"p = {result.p}", f"method = {result.method}"]
    if result.roots:
        plain.append("roots: " + ", ".join(str(r) for r in result.roots))
    else:
        plain.append(f"no roots: {args.a} is not an {args.n}-th power residue mod {args.prime}")
    _emit(result.to_json(), args.json, plain)
    return 0


def cmd_smooth(args) -> int:
    tau = Fraction(args.tau) if args.tau else Fraction(1, 2)
    delta = Fraction(args.delta) if args.delta else Fraction(1, 20)
    profile = least_prime_bound(args.prime, tau, delta)
    plain = [
        f"p = {profile.p}",
        f"q = {profile.q}",
        f"S = {profile.S}",
        "factors: " + " * ".join(f"{l}^{v}" for l, v in profile.factors),
    ]
    _emit(profile.to_json(), args.json, plain)
    return 0


def cmd_field(args) -> int:
    if args.validate:
        desc = load_descriptor(args.validate)
        checks = validate_descriptor(desc)
        doc = {"checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in checks]}
        plain = [f"{'ok ' if ok else 'FAIL'} {name}" + (f"  ({detail})" if detail else "")
                 for name, ok, detail in checks]
        _emit(doc, args.json, plain)
        return 0 if all(ok for _, ok, _ in checks) else 1
    desc = quadratic_descriptor(args.quadratic)
    doc = descriptor_to_json(desc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
        print(f"wrote {args.out}")
    else:
        print(json.dumps(doc, indent=2))
    return 0


def cmd_census(args) -> int:
    desc = quadratic_descriptor(args.quadratic)
    all_norms, principal_norms = census_norms(desc, args.x, args.y)
    psi = len(all_norms)
    psi_tilde = len(principal_norms)
    # the smooth-principal-ideal inequality at these arguments:
    # h * psi_principal(x, y) >= psi(x / M, y^(1/h)) with integer-exact bounds
    h = desc.class_number
    x_rhs = int(Fraction(args.x) / desc.minkowski_bound)
    y_rhs = iroot(args.y, h)
    rhs_norms, _ = census_norms(desc, max(x_rhs, 0), y_rhs) if x_rhs >= 1 else ([], [])
    rhs = len(rhs_norms)
    holds = h * psi_tilde >= rhs
    doc = {
        "psi": psi, "psi_principal": psi_tilde,
        "rhs_psi": rhs, "class_number": h,
        "inequality_holds": holds,
    }
    plain = [
        f"psi({args.x}, {args.y}) = {psi}",
        f"psi_principal({args.x}, {args.y}) = {psi_tilde}",
        f"{h} * {psi_tilde} >= psi({x_rhs}, {y_rhs}) = {rhs}: "
        + ("holds" if holds else "VIOLATED"),
    ]
    _emit(doc, args.json, plain)
    return 0 if holds else 1


def cmd_selftest(args) -> int:
    from . import selftest
    return selftest.run()


def build_parser() -> _Parser:
    parser = _Parser(prog="smoothroots", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_factor = sub.add_parser("factor", help="factor the fixed polynomial mod p")
    p_factor.add_argument("--poly", required=True, help="integer coefficients c0,c1,...,cd")
    p_factor.add_argument("--prime", required=True, type=int)
    p_factor.add_argument("--descriptor", required=True, help="field descriptor JSON path")
    _add_param_flags(p_factor)
    p_factor.add_argument("--erh", action="store_true",
                          help="use the conditional nonresidue splitter")
    p_factor.add_argument("--json", action="store_true")
    p_factor.set_defaults(func=cmd_factor)

    p_roots = sub.add_parser("roots", help="n-th roots of a mod p")
    p_roots.add_argument("--a", required=True, type=int)
    p_roots.add_argument("--n", required=True, type=int)
    p_roots.add_argument("--prime", required=True, type=int)
    p_roots.add_argument("--descriptor", required=True)
    p_roots.add_argument("--zeta-mode", default="none",
                         choices=["none", "search", "from-factorization"])
    _add_param_flags(p_roots)
    p_roots.add_argument("--json", action="store_true")
    p_roots.set_defaults(func=cmd_roots)

    p_smooth = sub.add_parser("smooth", help="least prime bound reaching the smooth threshold")
    p_smooth.add_argument("--prime", required=True, type=int)
    p_smooth.add_argument("--delta", help="rational, default 1/20")
    p_smooth.add_argument("--tau", help="rational, default 1/2")
    p_smooth.add_argument("--json", action="store_true")
    p_smooth.set_defaults(func=cmd_smooth)

    p_field = sub.add_parser("field", help="emit or validate a field descriptor")
    group = p_field.add_mutually_exclusive_group(required=True)
    group.add_argument("--quadratic", type=int, help="squarefree m for X^2 - m")
    group.add_argument("--validate", help="descriptor JSON path to check")
    p_field.add_argument("--out", help="write the emitted descriptor here")
    p_field.add_argument("--json", action="store_true")
    p_field.set_defaults(func=cmd_field)

    p_census = sub.add_parser("census", help="smooth-ideal counts for an imaginary quadratic field")
    p_census.add_argument("--quadratic", type=int, required=True)
    p_census.add_argument("--x", type=int, required=True)
    p_census.add_argument("--y", type=int, required=True)
    p_census.add_argument("--json", action="store_true")
    p_census.set_defaults(func=cmd_census)

    p_self = sub.add_parser("selftest", help="run the embedded fixture checks")
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (CapelliError, DescriptorError, UnsupportedPrime, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
