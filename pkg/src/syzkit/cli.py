"""``syzkit`` command-line tool.

Exit codes: 0 success, 2 unreadable or malformed input, 3 invalid input
(non-commuting matrices, basis not reduced, infinite quotient, oracle size
limit), 4 internal invariant breach or failed verification, 5 structural
assumption violated.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .errors import (
    DimensionError,
    InvariantError,
    OracleLimitError,
    StructuralAssumptionError,
    ValidationError,
)
from .instances import (
    RANDOM_KINDS,
    gen_hermite_pade,
    gen_matrix_annihilator,
    gen_multivar_pade,
    gen_points_ideal,
    gen_random_commuting,
)
from .io import (
    FormatError,
    gb_from_dict,
    gb_to_dict,
    instance_from_dict,
    instance_to_dict,
    mulmat_to_dict,
    poly_from_list,
    poly_to_list,
    read_json,
    write_json,
)
from .modpoly import check_reduced
from .monomials import MonomialOrder
from .mulmat import change_order, multiplication_matrices
from .syzygy import apply_poly, border_basis, monomial_basis, syzygy_basis

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVALID = 3
EXIT_INVARIANT = 4
EXIT_ASSUMPTION = 5


class UsageError(Exception):
    pass


def _order(text: str) -> MonomialOrder:
    try:
        return MonomialOrder.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _load(path: str) -> dict:
    if path is None:
        raise UsageError("an input file is required (--in)")
    if not os.path.exists(path):
        raise UsageError(f"no such file: {path}")
    return read_json(path)


def _validate_flag(args) -> bool | None:
    return args.validate


def cmd_syzygy(args) -> int:
    inst = instance_from_dict(_load(args.input), validate=_validate_flag(args))
    order = _order(args.order)
    if args.border:
        order = order.resolved(inst.n)
        elems = border_basis(order, inst)
        doc = {
            "p": inst.p,
            "n": inst.n,
            "m": inst.m,
            "order": order.spec(inst.n),
            "elements": [poly_to_list(g, order) for g in elems],
        }
    else:
        doc = gb_to_dict(syzygy_basis(order, inst))
    write_json(doc, args.out)
    return EXIT_OK


def _load_gb(args, order_text):
    doc = _load(args.input)
    order = _order(order_text) if order_text else None
    return gb_from_dict(doc, order)


def cmd_mulmats(args) -> int:
    gb = _load_gb(args, args.order)
    res = multiplication_matrices(gb.order, gb)
    write_json(mulmat_to_dict(res), args.out)
    return EXIT_OK


def cmd_change_order(args) -> int:
    gb = _load_gb(args, args.source)
    target = _order(args.target)
    write_json(gb_to_dict(change_order(gb.order, gb, target)), args.out)
    return EXIT_OK


def _parse_points(text: str) -> list:
    groups = re.findall(r"\(([^()]*)\)", text)
    if not groups:
        groups = [g for g in text.split(";") if g.strip()]
    try:
        return [tuple(int(x) for x in g.split(",")) for g in groups]
    except ValueError as exc:
        raise UsageError(f"cannot parse points {text!r}") from exc


def _parse_coeff_lists(text: str) -> list:
    try:
        return [[int(x) for x in chunk.split(",") if x.strip()] for chunk in text.split(";")]
    except ValueError as exc:
        raise UsageError(f"cannot parse coefficient lists {text!r}") from exc


def _parse_json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse {what}: {exc}") from exc


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "points":
        inst = gen_points_ideal(args.p, _parse_points(args.points))
    elif kind == "hermite-pade":
        inst = gen_hermite_pade(args.p, args.D, _parse_coeff_lists(args.polys))
    elif kind == "annihilator":
        inst = gen_matrix_annihilator(args.p, _parse_json_arg(args.matrices, "--matrices"))
    elif kind == "mvpade":
        raw = _parse_json_arg(args.polys or "[]", "--polys")
        polys = []
        for terms in raw:
            poly = poly_from_list([dict(t, comp=1) for t in terms], args.n, 1, args.p)
            polys.append({mono.exps: c for mono, c in poly.terms.items()})
        inst = gen_multivar_pade(args.p, args.n, args.d, polys)
    else:
        inst = gen_random_commuting(args.p, args.n, args.D, m=args.m, seed=args.seed, kind=args.random_kind)
    write_json(instance_to_dict(inst), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .oracle import nullspace_reduces_to_zero, oracle_bounded_syzygies, oracle_monomial_basis

    inst = instance_from_dict(_load(args.input), validate=_validate_flag(args))
    order = _order(args.order).resolved(inst.n)
    mb = monomial_basis(order, inst)
    gb = syzygy_basis(order, inst)
    null = oracle_bounded_syzygies(order, inst, limit=args.limit_rows)
    idx = null.index
    checks = [
        ("monomial basis matches the rank profile oracle", mb.monbas == oracle_monomial_basis(order, inst, args.limit_rows)),
        ("every basis element is a syzygy", all(not apply_poly(inst, g).any() for g in gb)),
        ("basis is reduced", check_reduced(order, gb)),
        ("basis elements lie in the bounded nullspace", all(null.contains(idx.expand(g)) for g in gb)),
        ("bounded nullspace reduces to zero", nullspace_reduces_to_zero(null, gb)),
        ("nullity equals bounded monomials minus staircase size", null.nullity == len(idx) - mb.delta),
    ]
    ok = True
    for name, passed in checks:
        print(f"{'PASS' if passed else 'FAIL'}: {name}")
        ok &= bool(passed)
    return EXIT_OK if ok else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="syzkit", description="Gröbner bases of syzygy modules and change of order over GF(p).")
    sub = parser.add_subparsers(dest="command", required=True)

    def io_args(sp, gb_alias=False):
        names = ["--in", "--gb"] if gb_alias else ["--in"]
        sp.add_argument(*names, dest="input", metavar="FILE", help="input JSON file")
        sp.add_argument("--out", metavar="FILE", help="output JSON file (default: stdout)")

    def validate_args(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--validate", dest="validate", action="store_true", default=None,
                       help="check that the matrices commute (default: only when D <= 64)")
        g.add_argument("--no-validate", dest="validate", action="store_false")

    sp = sub.add_parser("syzygy", help="reduced Gröbner basis of the syzygy module of an instance")
    sp.add_argument("--order", default="top:lex", help="monomial order, e.g. top:degrevlex:vars=2,1")
    sp.add_argument("--border", action="store_true", help="output the border basis instead")
    io_args(sp)
    validate_args(sp)
    sp.set_defaults(func=cmd_syzygy)

    sp = sub.add_parser("mulmats", help="multiplication matrices from a reduced Gröbner basis")
    sp.add_argument("--order", help="order of the basis (default: the one stored in the file)")
    io_args(sp, gb_alias=True)
    sp.set_defaults(func=cmd_mulmats)

    sp = sub.add_parser("change-order", help="convert a reduced Gröbner basis to another order")
    sp.add_argument("--from", dest="source", help="order of the input basis (default: from the file)")
    sp.add_argument("--to", dest="target", required=True, help="target order")
    io_args(sp, gb_alias=True)
    sp.set_defaults(func=cmd_change_order)

    sp = sub.add_parser("gen", help="generate an instance file")
    sp.add_argument("kind", choices=["points", "hermite-pade", "annihilator", "mvpade", "random"])
    sp.add_argument("--p", type=int, default=97, help="prime modulus")
    sp.add_argument("--points", default="", help='points, e.g. "(0,0);(1,0);(0,1)"')
    sp.add_argument("--polys", help='hermite-pade: "1;1,1" (constant first); mvpade: JSON term lists')
    sp.add_argument("--matrices", help="annihilator: JSON list of square matrices")
    sp.add_argument("--n", type=int, default=2, help="number of variables")
    sp.add_argument("--d", type=int, default=2, metavar="DEG", help="mvpade: per-variable degree bound")
    sp.add_argument("--D", type=int, default=8, help="dimension")
    sp.add_argument("--m", type=int, default=1, help="random: number of rows of F")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--random-kind", choices=RANDOM_KINDS, help="random: shape of the base matrix")
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="compare the engine with the brute-force oracle")
    sp.add_argument("--order", default="top:lex")
    sp.add_argument("--limit-rows", type=int, help="oracle size limit (rows of the multi-Krylov matrix)")
    io_args(sp)
    validate_args(sp)
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StructuralAssumptionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ASSUMPTION
    except InvariantError as exc:
        print(f"error: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValidationError, OracleLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (UsageError, FormatError, DimensionError, OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
