"""Command-line interface: ``doublesym <command> [flags]``.

Partitions are comma lists (``3,2,1``; ``0`` or an empty string is the empty
partition).  ``--json`` switches to JSON output with a ``"schema": 1`` field.
Exit codes: 0 success, 1 domain error, 2 usage error.

Transition computations at target size s truncate series at D = s.  Double
Schur side computations work in n = max length + 1 variables, which is enough
for every coefficient to be stable in n.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import format_poly, format_rational, parse_poly, parse_spec
from .basis import dual_lr, expand_in_double_schur, lr_polynomial, rational_interpolation_eval
from .double import (
    XPoly,
    double_schur,
    double_schur_alternant,
    double_schur_tableau,
    format_xpoly,
    jacobi_trudi,
    nagelsbach_kostka,
    skew_double_schur,
)
from .errors import DoubleSymError
from .series import dual_schur, skew_dual_schur
from .shapes import SkewShape, parse_partition
from .transition import (
    TransitionMatrix,
    char_dual,
    char_poly,
    double_forgotten,
    double_monomial,
    hook_identities,
    kostka,
    kostka_dual,
)

SCHEMA = 1

DOUBLE_METHODS = {
    "strips": double_schur,
    "tableau": double_schur_tableau,
    "alternant": double_schur_alternant,
    "jacobi_trudi": jacobi_trudi,
    "nagelsbach_kostka": nagelsbach_kostka,
}


class UsageError(Exception):
    pass


def partition_arg(text):
    try:
        return parse_partition(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r} (expected e.g. 3,2,1)")


def _emit(args, text, payload):
    if args.json:
        out = {"schema": SCHEMA, "command": args.command}
        out.update(payload)
        print(json.dumps(out, sort_keys=True))
    else:
        print(text)


def _num(v):
    return format_rational(Fraction(v))


def _poly_result(args, p):
    """Print an a-polynomial, evaluated under --spec when given."""
    spec = getattr(args, "spec", None)
    if spec:
        v = p.evaluate(parse_spec(spec))
        _emit(args, _num(v), {"value": _num(v), "spec": spec})
    else:
        _emit(args, format_poly(p), {"poly": p.to_json()})


def _label(p):
    return ",".join(map(str, p))


# -- commands -----------------------------------------------------------------

def cmd_double_schur(args):
    fn = DOUBLE_METHODS[args.method]
    p = fn(args.lam, args.nx)
    _emit(args, format_xpoly(p.poly), {"xpoly": p.to_json()})


def cmd_dual_schur(args):
    method = args.method
    n = args.nx
    s = dual_schur(args.mu, args.degree, method, n)
    if args.basis == "dual":
        s = s.to_dual()
    _emit(args, str(s), {"series": s.to_json()})


def cmd_skew(args):
    theta = SkewShape(args.outer, args.inner)
    if not args.outer.contains(args.inner):
        raise UsageError(f"{_label(args.inner)} is not contained in {_label(args.outer)}")
    if args.dual:
        s = skew_dual_schur(theta, args.degree, args.nx)
        _emit(args, str(s), {"series": s.to_json()})
        return
    p = skew_double_schur(theta, args.nx, args.method)
    _emit(args, format_xpoly(p.poly), {"xpoly": p.to_json()})


def cmd_lr(args):
    _poly_result(args, lr_polynomial(args.lam, args.mu, args.nu))


def cmd_duallr(args):
    _poly_result(args, dual_lr(args.lam, args.mu, args.nu, args.method, args.nx))


def cmd_kostka(args):
    if args.table is not None:
        fn = kostka_dual if args.dual else (lambda l, m: kostka(l, m))
        M = TransitionMatrix.build(fn, args.table, min_size=1)
        _emit(args, M.to_text(), {"matrix": M.to_json()})
        return
    if args.lam is None or args.mu is None:
        raise UsageError("kostka needs --lambda and --mu, or --table N")
    if args.dual:
        p = kostka_dual(args.lam, args.mu)
    else:
        p = kostka(args.lam, args.mu, args.degree)
    _poly_result(args, p)


def cmd_char(args):
    p = char_dual(args.lam, args.mu) if args.dual else char_poly(args.lam, args.mu)
    _poly_result(args, p)


def cmd_monomial(args):
    u = double_forgotten(args.lam) if args.forgotten else double_monomial(args.lam)
    _emit(args, str(u), {"double_sym": u.to_json()})


def cmd_cauchy(args):
    from .cauchy import cauchy_check

    report = cauchy_check(args.n, args.degree)
    lines = [
        f"{r['identity']}: {'ok' if r['ok'] else 'FAIL'}"
        + ("" if r["ok"] else f" first difference {r['first_difference']}")
        for r in report
    ]
    _emit(args, "\n".join(lines), {"report": report})
    return 0 if all(r["ok"] for r in report) else 1


def cmd_hook_identities(args):
    report = hook_identities(args.lam, args.mu, args.nu)
    if not report:
        raise UsageError("need |lambda| = |mu|, or --nu for the LR identity")
    lines = []
    for r in report:
        lines.append(f"{r['identity']}: {_num(r['value'])} (oracle {r['oracle']}) {'ok' if r['ok'] else 'FAIL'}")
        for rho, t in r.get("terms", []):
            lines.append(f"  rho={_label(rho) or '0'}: {_num(t)}")
    payload = [
        {
            "identity": r["identity"],
            "value": _num(r["value"]),
            "oracle": r["oracle"],
            "ok": r["ok"],
            "terms": [[list(rho), _num(t)] for rho, t in r.get("terms", [])],
        }
        for r in report
    ]
    _emit(args, "\n".join(lines), {"report": payload})
    return 0 if all(r["ok"] for r in report) else 1


def cmd_eval(args):
    spec = parse_spec(args.spec)
    kind = args.kind
    if kind in ("kostka_dual", "character"):
        parts = (args.lam, args.mu)
        sym = (kostka_dual if kind == "kostka_dual" else char_poly)(*parts)
    else:
        if args.nu is None:
            raise UsageError(f"{kind} needs --nu")
        parts = (args.lam, args.mu, args.nu)
        sym = (dual_lr if kind == "dual_lr" else lr_polynomial)(*parts)
    chain = rational_interpolation_eval(kind, parts, spec)
    direct = sym.evaluate(spec)
    text = f"{_num(chain)}"
    if chain != direct:
        text += f" (symbolic value {_num(direct)} differs)"
    _emit(args, text, {"value": _num(chain), "symbolic": _num(direct), "agree": chain == direct})
    return 0 if chain == direct else 1


def cmd_verify(args):
    from .verify import CRITERIA

    if args.suite == "all":
        numbers = sorted(CRITERIA)
    else:
        try:
            numbers = [int(k) for k in args.suite.split(",")]
        except ValueError:
            raise UsageError(f"--suite takes 'all' or criterion numbers, got {args.suite!r}")
        if any(k not in CRITERIA for k in numbers):
            raise UsageError(f"criteria are numbered 1..{len(CRITERIA)}")
    results = []
    for k in numbers:
        res = CRITERIA[k]()
        results.append(res)
        if not args.json:
            print(res.summary(), flush=True)
    if args.json:
        _emit(args, "", {"criteria": [
            {"number": r.number, "title": r.title, "ok": r.ok,
             "failures": [name for name, _ in r.failures], "checks": len(r.checks)}
            for r in results
        ]})
    return 0 if all(r.ok for r in results) else 1


def cmd_expand(args):
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    n, body = _read_expand_input(text)
    P = XPoly(parse_poly(body), n)
    u = expand_in_double_schur(P, args.method)
    _emit(args, str(u), {"double_sym": u.to_json()})


def _read_expand_input(text):
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].replace(" ", "").startswith("n="):
        raise UsageError("expand input must start with a line 'n = <count>'")
    n = int(lines[0].split("=", 1)[1])
    return n, " ".join(lines[1:]) or "0"


# -- parser ---------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="doublesym",
        description="Exact computations with double and dual Schur functions.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--json", action="store_true", help="JSON output")
        p.set_defaults(func=fn)
        return p

    spec_help = "zero|shifted|frobenius|generic:<seed>|custom:<file>"

    p = add("double-schur", cmd_double_schur, "double Schur polynomial s_lambda(x||a) in nx variables")
    p.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--method", choices=sorted(DOUBLE_METHODS), default="strips")

    p = add("dual-schur", cmd_dual_schur, "dual Schur series truncated at --degree")
    p.add_argument("--mu", type=partition_arg, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--method", choices=["flagged", "determinant", "combinatorial", "alternant"], default="flagged")
    p.add_argument("--nx", type=int, default=None, help="variables for combinatorial/alternant")
    p.add_argument("--basis", choices=["schur", "dual"], default="schur")

    p = add("skew", cmd_skew, "skew double Schur polynomial (or skew dual Schur series with --dual)")
    p.add_argument("--outer", type=partition_arg, required=True)
    p.add_argument("--inner", type=partition_arg, default=parse_partition(""))
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--method", choices=["supertableau_A", "supertableau_Aprime", "rho_sum"], default="supertableau_A")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--degree", type=int, default=4)

    p = add("lr", cmd_lr, "Littlewood-Richardson polynomial c^nu_{lambda mu}(a)")
    for flag, dest in (("--lambda", "lam"), ("--mu", "mu"), ("--nu", "nu")):
        p.add_argument(flag, dest=dest, type=partition_arg, required=True)
    p.add_argument("--spec", help=spec_help)

    p = add("duallr", cmd_duallr, "dual Littlewood-Richardson polynomial")
    for flag, dest in (("--lambda", "lam"), ("--mu", "mu"), ("--nu", "nu")):
        p.add_argument(flag, dest=dest, type=partition_arg, required=True)
    p.add_argument("--method", choices=["skew", "tableau", "classical"], default="skew")
    p.add_argument("--nx", type=int, default=None, help="entry bound for the tableau method")
    p.add_argument("--spec", help=spec_help)

    p = add("kostka", cmd_kostka, "Kostka-type polynomials (K with series product, K-hat with --dual); --degree defaults to |lambda|")
    p.add_argument("--lambda", dest="lam", type=partition_arg)
    p.add_argument("--mu", type=partition_arg)
    p.add_argument("--dual", action="store_true")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--table", type=int, default=None, metavar="N", help="print the matrix for sizes 1..N")
    p.add_argument("--spec", help=spec_help)

    p = add("char", cmd_char, "character polynomial chi^lambda_mu(a) (dual version with --dual)")
    p.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    p.add_argument("--mu", type=partition_arg, required=True)
    p.add_argument("--dual", action="store_true")
    p.add_argument("--spec", help=spec_help)

    p = add("monomial", cmd_monomial, "double monomial (or --forgotten) function in the double Schur basis")
    p.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    p.add_argument("--forgotten", action="store_true")

    p = add("cauchy", cmd_cauchy, "check the Cauchy-type identities in n variables to degree D")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)

    p = add("hook-identities", cmd_hook_identities, "hook-product sums for characters, Kostka and LR numbers")
    p.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    p.add_argument("--mu", type=partition_arg, required=True)
    p.add_argument("--nu", type=partition_arg, default=None)

    p = add("eval", cmd_eval, "rational chain-sum value under a numeric specialization")
    p.add_argument("--kind", choices=["kostka_dual", "character", "dual_lr", "lr"], required=True)
    p.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    p.add_argument("--mu", type=partition_arg, required=True)
    p.add_argument("--nu", type=partition_arg, default=None)
    p.add_argument("--spec", required=True, help=spec_help)

    p = add("verify", cmd_verify, "run acceptance criteria")
    p.add_argument("--suite", default="all", help="'all' or comma list of criterion numbers")

    p = add("expand", cmd_expand, "expand a symmetric polynomial in the double Schur basis")
    p.add_argument("--input", required=True, help="file: 'n = <count>' line, then a polynomial in x1..xn, a[i]")
    p.add_argument("--method", choices=["elimination", "recurrence"], default="elimination")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"doublesym {args.command}: error: {e}", file=sys.stderr)
        return 2
    except DoubleSymError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"doublesym {args.command}: error: {e}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
