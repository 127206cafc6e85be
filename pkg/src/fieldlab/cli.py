"""Command-line front end.

Exit status: 0 on success, 1 when the mathematics refuses (not a unit,
reducible modulus, size limit, ...), 2 on usage errors.  Every source of
randomness is an explicit ``--seed``.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import codes, designs, fingeo, gfield, modarith, polyring, tablesearch
from .errors import AmbiguousDecoding, DomainError
from .fixtures import FIXTURES, load_fixture
from .serialize import dumps, serialize


class UsageError(Exception):
    pass


def _poly(text, p):
    try:
        return polyring.parse_poly(text, p)
    except DomainError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _field_from_args(args):
    if args.field:
        try:
            return gfield.parse_field(args.field)
        except DomainError:
            raise
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.p is None:
        raise UsageError("field needs --p (and optionally --f) or --field")
    return gfield.make_field(args.p, _poly(args.f, args.p) if args.f else None)


def _plane_field(args):
    if args.field:
        return gfield.parse_field(args.field)
    if args.q is None:
        raise UsageError("plane needs --q or --field")
    return gfield.field_of_order(args.q)


def _load_design(args):
    if args.fixture:
        d = load_fixture(args.fixture)
        if not isinstance(d, designs.BlockDesign):
            raise UsageError(f"fixture {args.fixture!r} is not a design")
        return designs.BlockDesign.from_blocks(d.v, d.blocks, args.t)
    if args.file:
        try:
            with open(args.file) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read design file: {exc}") from None
        return designs.parse_design_json(data, args.t)
    raise UsageError("need --file or --fixture")


def _named_code(name):
    if name.startswith("rep") and name[3:].isdigit():
        return codes.repetition_code(int(name[3:]))
    if name in ("fano", "fano-extended"):
        d = designs.design_from_plane(load_fixture("fano"))
        return codes.code_from_design(d, extended=name == "fano-extended")
    raise UsageError(f"unknown code {name!r}; use repN, fano or fano-extended")


def _load_code(args):
    if getattr(args, "code_file", None):
        with open(args.code_file) as fh:
            return codes.Code.from_dict(json.load(fh))
    return _named_code(args.code)


# handlers ------------------------------------------------------------------

def cmd_mod(args, out):
    n = args.n
    if args.action == "op":
        r = modarith.residue_op(modarith.Residue.of(args.a, n), modarith.Residue.of(args.b, n), args.op)
        out.write(f"{r}\n")
    elif args.action == "inverse":
        out.write(f"{modarith.mod_inverse(modarith.Residue.of(args.a, n))}\n")
    elif args.action == "sqrt":
        roots = modarith.solve_square(modarith.Residue.of(args.a, n))
        out.write("{" + ", ".join(map(str, roots)) + "}\n")
    elif args.action == "order":
        out.write(f"{modarith.additive_order(modarith.Residue.of(args.a, n))}\n")
    elif args.action == "units":
        out.write("{" + ", ".join(str(u.value) for u in modarith.unit_group(n)) + "}\n")
    elif args.action == "digit-rule":
        q = modarith.DigitRuleQuery(args.base, args.divisor)
        out.write(f"{str(modarith.digit_sum_rule_valid(q)).lower()}\n")
    elif args.action == "product-units":
        units = modarith.product_ring_units(args.n1, args.n2)
        out.write("{" + ", ".join(f"({a.value},{b.value})" for a, b in units) + "}\n")


def cmd_poly(args, out):
    p = args.p
    if args.action == "irreducibles":
        for f in polyring.monic_irreducibles(p, args.d):
            out.write(f"{f}\n")
        return
    f = _poly(args.f, p)
    if args.action == "op":
        out.write(f"{polyring.poly_op(f, _poly(args.g, p), args.op)}\n")
    elif args.action == "divmod":
        q, r = polyring.poly_divmod(f, _poly(args.g, p))
        out.write(f"quotient {q}\nremainder {r}\n")
    elif args.action == "roots":
        out.write("{" + ", ".join(map(str, polyring.poly_roots(f))) + "}\n")
    elif args.action == "irreducible":
        out.write(f"{str(polyring.is_irreducible(f)).lower()}\n")
    elif args.action == "factor":
        unit, factors = polyring.factor_poly(f)
        parts = [f"({g})" for g in factors]
        if unit != 1:
            parts.insert(0, str(unit))
        out.write("*".join(parts) + "\n")


def cmd_field(args, out):
    spec = _field_from_args(args)
    action = args.action or "info"
    if action == "info":
        out.write(f"{spec}\norder {spec.order}, characteristic {gfield.characteristic(spec)}\n")
    elif action == "tables":
        t = gfield.build_op_tables(spec)
        names = [str(spec.elem(i)) for i in range(spec.order)]
        out.write(serialize(t, args.format, names=names))
    elif action == "axioms":
        bad = gfield.verify_field_axioms(gfield.build_op_tables(spec))
        out.write("field axioms hold\n" if not bad else "".join(f"{v}\n" for v in bad))
    elif action == "char":
        out.write(f"{gfield.characteristic(spec)}\n")
    elif action == "mul-order":
        out.write(f"{gfield.multiplicative_order(spec.elem(_poly(args.a, spec.p)))}\n")
    elif action == "inverse":
        out.write(f"{gfield.elem_inverse(spec.elem(_poly(args.a, spec.p)))}\n")
    elif action == "op":
        a = spec.elem(_poly(args.a, spec.p))
        b = spec.elem(_poly(args.b, spec.p))
        out.write(f"{gfield.elem_op(a, b, args.op)}\n")


def cmd_search(args, out):
    res = tablesearch.enumerate_field_tables(args.order, allow_large=args.allow_large,
                                             reverse=args.reverse)
    if args.json:
        data = res.to_dict()
        if args.max_solutions is not None:
            data["solutions"] = data["solutions"][:args.max_solutions]
        out.write(dumps(data))
    else:
        out.write(serialize(res, "text", max_solutions=args.max_solutions))


def cmd_plane(args, out):
    spec = _plane_field(args)
    build = fingeo.projective_plane if args.kind == "projective" else fingeo.affine_plane
    s = build(spec)
    if args.verify:
        bad = fingeo.verify_plane_axioms(s)
        out.write("plane axioms hold\n" if not bad else "".join(f"{v}\n" for v in bad))
        return
    out.write(serialize(s, args.format))


def cmd_design(args, out):
    if args.action == "kt":
        found = designs.k_equals_t_designs(args.v, args.t)
        out.write(f"{len(found)} design(s) with k = t = {args.t} on {args.v} points\n")
        for d in found:
            out.write(serialize(d, "text"))
        return
    if args.action == "from-plane":
        spec = gfield.field_of_order(args.q)
        build = fingeo.projective_plane if args.kind == "projective" else fingeo.affine_plane
        out.write(serialize(designs.design_from_plane(build(spec)), args.format))
        return
    d = _load_design(args)
    if args.action == "verify":
        out.write(serialize(d, args.format))
    elif args.action == "resolve":
        res = designs.find_resolution(d)
        if res is None:
            out.write("not resolvable\n")
        else:
            out.write(serialize(res, args.format))


def cmd_code(args, out):
    if args.action == "decode":
        c = _load_code(args)
        word = args.word if args.word is not None else " ".join(load_fixture("rep3-transmission"))
        if c.message_map is not None:
            out.write(codes.decode_message(c, word) + "\n")
        else:
            for letter in word.split():
                out.write(codes.format_word(codes.nearest_decode(c, codes.parse_word(letter))) + "\n")
    elif args.action == "info":
        c = _load_code(args)
        out.write(serialize(c, "json" if args.json else "text"))
        if not args.json and len(c) > 1:
            out.write(f"perfect: {str(codes.is_perfect(c)).lower()}\n")
    elif args.action == "from-design":
        c = codes.code_from_design(_load_design(args), extended=args.extended)
        out.write(serialize(c, "json" if args.json else "text"))
    elif args.action == "simulate":
        c = _load_code(args)
        rep = codes.channel_simulate(c, args.p, args.trials, args.seed)
        out.write(serialize(rep, "json" if args.json else "text"))


# parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fieldlab",
        description="Finite fields, field-table search, finite planes, block designs and codes.")
    sub = ap.add_subparsers(dest="command", required=True)

    # mod
    mod = sub.add_parser("mod", help="modular arithmetic")
    msub = mod.add_subparsers(dest="action", required=True)
    p = msub.add_parser("op", help="[a]_n op [b]_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--op", choices=modarith.OPS, required=True)
    for name, helptext in (("inverse", "multiplicative inverse"),
                           ("sqrt", "all x with x^2 = a"),
                           ("order", "additive order of a")):
        p = msub.add_parser(name, help=helptext)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--a", type=int, required=True)
    p = msub.add_parser("units", help="unit group of Z_n")
    p.add_argument("--n", type=int, required=True)
    p = msub.add_parser("digit-rule", help="does the base-b digit-sum rule work for m?")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--divisor", type=int, required=True)
    p = msub.add_parser("product-units", help="units of Z_n1 x Z_n2 by brute force")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)

    # poly
    poly = sub.add_parser("poly", help="polynomials over Z_p; write them as [1,1,1] or 1+z+z^2")
    psub = poly.add_subparsers(dest="action", required=True)
    for name, two in (("op", True), ("divmod", True), ("roots", False),
                      ("irreducible", False), ("factor", False)):
        p = psub.add_parser(name)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--f", required=True)
        if two:
            p.add_argument("--g", required=True)
        if name == "op":
            p.add_argument("--op", choices=("add", "sub", "mul"), required=True)
    p = psub.add_parser("irreducibles", help="monic irreducibles of degree d")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    # field
    fld = sub.add_parser("field", help='Z_p[z]/<f>, e.g. --p 2 --f "[1,1,1]" tables')
    fld.add_argument("--p", type=int)
    fld.add_argument("--f", help="monic irreducible modulus; omit for the prime field")
    fld.add_argument("--field", help='descriptor such as "p=2,f=[1,1,1]"')
    fsub = fld.add_subparsers(dest="action")
    fsub.add_parser("info")
    p = fsub.add_parser("tables")
    p.add_argument("--format", choices=("text", "json"), default="text")
    fsub.add_parser("axioms")
    fsub.add_parser("char")
    for name in ("mul-order", "inverse"):
        p = fsub.add_parser(name)
        p.add_argument("--a", required=True)
    p = fsub.add_parser("op")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--op", choices=("add", "sub", "mul"), required=True)

    # search
    p = sub.add_parser("search", help="enumerate all field tables on n labels")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--max-solutions", type=int, help="print at most k tables (counts stay complete)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--allow-large", action="store_true", help="permit orders 8..12")
    p.add_argument("--reverse", action="store_true", help="try branch values in descending order")

    # plane
    p = sub.add_parser("plane", help="affine or projective plane over F_q")
    p.add_argument("--q", type=int)
    p.add_argument("--field", help="explicit field descriptor")
    p.add_argument("--kind", choices=("projective", "affine"), default="projective")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--verify", action="store_true", help="check the plane axioms instead")

    # design
    des = sub.add_parser("design", help="block designs")
    dsub = des.add_subparsers(dest="action", required=True)
    for name in ("verify", "resolve"):
        p = dsub.add_parser(name)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--file")
        src.add_argument("--fixture", choices=FIXTURES)
        p.add_argument("--t", type=int, default=2)
        p.add_argument("--format", choices=("text", "json"), default="text")
    p = dsub.add_parser("kt", help="all designs with k = t, exhaustively")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p = dsub.add_parser("from-plane")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--kind", choices=("projective", "affine"), default="projective")
    p.add_argument("--format", choices=("text", "json"), default="text")

    # code
    code = sub.add_parser("code", help="error-correcting codes")
    csub = code.add_subparsers(dest="action", required=True)
    p = csub.add_parser("decode", help="nearest-codeword decoding; whitespace separates letters")
    p.add_argument("--code", default="rep3")
    p.add_argument("--code-file")
    p.add_argument("--word", help="received letters; defaults to the rep3-transmission fixture")
    p = csub.add_parser("info")
    p.add_argument("--code", default="rep3")
    p.add_argument("--code-file")
    p.add_argument("--json", action="store_true")
    p = csub.add_parser("from-design")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file")
    src.add_argument("--fixture", choices=FIXTURES)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--extended", action="store_true")
    p.add_argument("--json", action="store_true")
    p = csub.add_parser("simulate", help="binary symmetric channel")
    p.add_argument("--code", default="rep3")
    p.add_argument("--code-file")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", action="store_true")
    return ap


HANDLERS = {"mod": cmd_mod, "poly": cmd_poly, "field": cmd_field, "search": cmd_search,
            "plane": cmd_plane, "design": cmd_design, "code": cmd_code}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        HANDLERS[args.command](args, out)
    except UsageError as exc:
        err.write(f"fieldlab: usage error: {exc}\n")
        return 2
    except AmbiguousDecoding as exc:
        err.write(f"fieldlab: {exc}\n")
        return 1
    except (DomainError, ValueError, ZeroDivisionError) as exc:
        err.write(f"fieldlab: error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
