"""
Command line front end.

    orealg guess fib.txt --kind S
    orealg terms "(n+2)*Sn^2 - (n+3)*Sn + 1" --initial 1,2 --count 8
    orealg bsplit "(n+2)*Sn^2 - (n+3)*Sn + 1" --initial 1,2 --n 10000 --digits 50
    orealg algebra lclm "Dx - 1" "x*Dx - 5"
    orealg solve "(x^2+1)*Dx^2 + 2*x*Dx" --what series --order 10

Exit status: 0 success, 2 bad input, 3 no relation found, 4 singular index.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys

from . import closures, euclid, guessing, sequences, solvers, transforms
from .algebra import Kind, make_algebra
from .arith import QQ, RatFun
from .errors import NoRelationError, OreError, SingularIndexError
from .grammar import format_coefficient, parse

EXIT_OK, EXIT_INPUT, EXIT_NO_RELATION, EXIT_SINGULAR = 0, 2, 3, 4

_GEN = re.compile(r"\b([DSTFQJ])([A-Za-z_][A-Za-z_0-9]*)\b")
_IDENT = re.compile(r"\b[A-Za-z_][A-Za-z_0-9]*\b")


class InputError(Exception):
    pass


# --------------------------------------------------------------------------
# input helpers
# --------------------------------------------------------------------------


def read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError("cannot read %s: %s" % (path, e.strerror)) from None


def parse_sequence(text):
    """Rationals separated by commas, whitespace or newlines; ``#`` starts a comment."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for tok in re.split(r"[,\s]+", line):
            if not tok:
                continue
            try:
                out.append(QQ(tok))
            except (ValueError, ZeroDivisionError):
                raise InputError("not a rational number: %r" % tok) from None
    return out


def infer_algebra(texts, args):
    """Algebra named by ``--gen``/``--var`` or guessed from generator-like names in ``texts``."""
    q = getattr(args, "q", None)
    if args.gen:
        var = args.var or args.gen[1:]
        return make_algebra(var, args.gen, q=q)
    idents = set()
    for t in texts:
        idents.update(_IDENT.findall(t))
    gens = sorted({m.group(0) for t in texts for m in _GEN.finditer(t)
                   if args.var is None or m.group(2) == args.var})
    gens = [g for g in gens if g[1:] != "q"]
    if len(gens) > 1:
        raise InputError("several generators %s; use --gen" % ", ".join(gens))
    if gens:
        return make_algebra(gens[0][1:], gens[0], q=q)
    var = args.var
    if var is None:
        names = sorted(idents - {"q"})
        var = names[0] if len(names) == 1 else "x"
    return make_algebra(var, "D" + var, q=q)


def fmt(c, A):
    return format_coefficient(c, A.base_var)


def emit(args, lines, payload):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def _path(text):
    pts = []
    for item in text.split(";"):
        item = item.strip()
        if item:
            r, d = item.split(",")
            pts.append((int(r), int(d)))
    return pts


def cmd_guess(args):
    data = parse_sequence(read_text(args.input))
    if not data:
        raise InputError("no data terms in input")
    try:
        path = _path(args.path) if args.path else None
    except ValueError:
        raise InputError("--path expects 'r,d;r,d;...'") from None
    opts = guessing.GuessOptions(path=path, min_order=args.min_order, max_order=args.max_order,
                                 min_degree=args.min_degree, max_degree=args.max_degree,
                                 ensure=args.ensure, cut=args.cut)
    rep = guessing.guess_report(data, args.kind, opts)
    text = str(rep.operator)
    emit(args, [text], {
        "operator": text, "order": rep.order, "degree": rep.degree,
        "point": list(rep.point), "terms_used": rep.terms_used, "margin": rep.margin,
    })


def cmd_terms(args):
    A = infer_algebra([args.operator], args)
    L = parse(args.operator, A)
    initial = parse_sequence(args.initial)
    if args.count < 0:
        raise InputError("--count must be nonnegative")
    terms = sequences.to_list(L, initial, args.count) if args.count else []
    lines = [str(t) for t in terms]
    emit(args, lines, {"terms": lines})


def cmd_bsplit(args):
    A = infer_algebra([args.operator], args)
    L = parse(args.operator, A)
    initial = parse_sequence(args.initial)
    res = sequences.forward_matrix_bsplit(L, args.n)
    if len(initial) != len(res.P):
        raise InputError("need exactly %d initial values" % len(res.P))
    vals = res.apply(initial)
    if args.digits is not None:
        if not 0 <= args.entry < len(vals):
            raise InputError("--entry out of range")
        lines = [sequences.decimal_digits(vals[args.entry], args.digits)]
    else:
        lines = [str(v) for v in vals]
    emit(args, lines, {"n": args.n, "values": lines, "P": [[str(v) for v in row] for row in res.P],
                       "Q": str(res.Q)})


_UNARY = {
    "normalize": euclid.normalize,
    "to-s": transforms.to_S,
    "to-d": transforms.to_D,
    "to-f": transforms.to_F,
    "to-t": transforms.to_T,
    "sum": transforms.annihilator_of_sum,
    "integral": transforms.annihilator_of_integral,
}
_BINARY = {
    "mul": lambda a, b: a * b,
    "add": lambda a, b: a + b,
    "gcrd": euclid.gcrd,
    "lclm": euclid.lclm,
    "quorem": euclid.quo_rem,
    "symmetric-product": closures.symmetric_product,
}
VERBS = sorted(list(_UNARY) + list(_BINARY) + ["compose"])


def _compose(L, param):
    A = L.parent
    if A.kind is Kind.S:
        parts = [p.strip() for p in param.split(",")]
        if not 1 <= len(parts) <= 2:
            raise InputError("compose in a shift algebra takes 'u' or 'u,v'")
        try:
            nums = [QQ(p) for p in parts]
        except (ValueError, ZeroDivisionError):
            raise InputError("compose in a shift algebra takes rational u and v") from None
        return transforms.annihilator_of_composition_s(L, *nums)
    return transforms.annihilator_of_composition_d(L, param)


def cmd_algebra(args):
    verb = args.verb
    ops = args.operands
    if verb in _UNARY or verb == "compose":
        want = 2 if verb == "compose" else 1
    else:
        want = 2
    if len(ops) != want:
        raise InputError("%s takes %d argument%s" % (verb, want, "s" if want > 1 else ""))
    texts = ops if verb != "compose" else ops[:1]
    A = infer_algebra(texts, args)
    L = parse(ops[0], A)
    if verb in _UNARY:
        results = [_UNARY[verb](L)]
    elif verb == "compose":
        results = [_compose(L, ops[1])]
    else:
        M = parse(ops[1], A)
        out = _BINARY[verb](L, M)
        results = list(out) if isinstance(out, tuple) else [out]
    lines = [str(r) for r in results]
    emit(args, lines, {"verb": verb, "results": lines})


def _rhs(texts, A):
    K = A.ratfun_algebra()
    out = []
    for t in texts:
        f = parse(t, K)
        if f.order() > 0:
            raise InputError("right-hand side %r must not contain %s" % (t, A.gen_name))
        cs = f.coefficients()
        out.append(cs[0] if cs else RatFun(A._poly_cls.zero()))
    return out


def cmd_solve(args):
    A = infer_algebra([args.operator], args)
    L = parse(args.operator, A)
    if args.what == "series":
        if args.rhs:
            raise InputError("--rhs is not supported with --what series")
        sols = solvers.power_series_solutions(L, args.order)
        lines = [s.to_str(A.base_var) for s in sols]
        emit(args, lines, {"solutions": lines})
        return
    rhs = _rhs(args.rhs or [], A)
    solve = solvers.polynomial_solutions if args.what == "poly" else solvers.rational_solutions
    sols = solve(L, rhs)
    lines, payload = [], []
    for s in sols:
        g = fmt(s.g, A)
        cs = [str(c) for c in s.c]
        lines.append(g if not rhs else "%s | %s" % (g, ", ".join(cs)))
        payload.append({"g": g, "c": cs})
    emit(args, lines, {"solutions": payload})


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized steps (none by default)")

    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--var", help="base variable (default: inferred)")
    alg.add_argument("--gen", help="generator name such as Dx or Sn (default: inferred)")
    alg.add_argument("--q", help="value of q for Q/J algebras, or 'q' for a symbol")

    ap = argparse.ArgumentParser(prog="orealg", description="Exact computations with Ore operators.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("guess", parents=[common], help="guess a recurrence or differential equation")
    p.add_argument("input", help="sequence file, or - for stdin")
    p.add_argument("--kind", choices=["S", "D"], default="S")
    p.add_argument("--min-order", type=int, default=0)
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--ensure", type=int, default=0)
    p.add_argument("--cut", type=int, default=None)
    p.add_argument("--path", help="explicit search points 'r,d;r,d;...'")
    p.set_defaults(func=cmd_guess)

    p = sub.add_parser("terms", parents=[common, alg], help="first terms of a P-recursive sequence")
    p.add_argument("operator")
    p.add_argument("--initial", required=True, help="initial values, comma separated")
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_terms)

    p = sub.add_parser("bsplit", parents=[common, alg], help="jump ahead n terms by binary splitting")
    p.add_argument("operator")
    p.add_argument("--initial", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--digits", type=int, default=None, help="print a rounded decimal instead")
    p.add_argument("--entry", type=int, default=0, help="which of c_n, c_(n+1), ... --digits uses")
    p.set_defaults(func=cmd_bsplit)

    p = sub.add_parser("algebra", parents=[common, alg], help="operator arithmetic and transforms")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("operands", nargs="+")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("solve", parents=[common, alg], help="polynomial, rational or series solutions")
    p.add_argument("operator")
    p.add_argument("--what", choices=["poly", "rational", "series"], default="poly")
    p.add_argument("--rhs", action="append", help="inhomogeneous part (repeatable)")
    p.add_argument("--order", type=int, default=10, help="series truncation order")
    p.set_defaults(func=cmd_solve)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        args.func(args)
    except NoRelationError as e:
        print("orealg: no relation: %s" % e, file=sys.stderr)
        return EXIT_NO_RELATION
    except SingularIndexError as e:
        print("orealg: singular index %d: %s" % (e.n, e), file=sys.stderr)
        return EXIT_SINGULAR
    except (InputError, OreError) as e:
        print("orealg: error: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
