"""
Command-line surface: parsing, dispatch, deterministic formatting and
the batch verification suites.

Exit codes: 0 success, 1 verification or domain failure, 2 usage error.
Degree caps and variable counts are explicit flags with defaults
p=4, q=4, D=10.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import gamma as gm
from . import grassmann as gr
from . import oracle as orc
from . import verify as vf
from .insertion import insert_set, tableau_from_cols
from .shapes import (
    parse_partition,
    parse_perm,
    parse_skew,
    partition_str,
    straight,
)
from .tableaux import Tableau, column_word, from_box_map, validate


class DomainFailure(Exception):
    """Raised for well-formed requests that the mathematics rejects."""


def element_text(e: gm.GammaElement) -> list[str]:
    return [f"{partition_str(lam)} {c}" for lam, c in e.coeffs]


def element_json(e: gm.GammaElement) -> list[dict]:
    return [{"partition": list(lam), "coeff": c} for lam, c in e.coeffs]


def tensor_text(t: gm.TensorElement) -> list[str]:
    return [f"{partition_str(a)} {partition_str(b)} {c}" for (a, b), c in t.coeffs]


def tensor_json(t: gm.TensorElement) -> list[dict]:
    return [
        {"left": list(a), "right": list(b), "coeff": c} for (a, b), c in t.coeffs
    ]


def parse_tableau_text(text: str) -> Tableau:
    """Rows top to bottom separated by '/', boxes as brace-delimited
    comma lists, straight shapes only: "{1}{1,2}/{2,3}"."""
    rows = [r.strip() for r in text.split("/")]
    boxes: dict[tuple[int, int], tuple[int, ...]] = {}
    widths = []
    for r, row in enumerate(rows, start=1):
        groups = re.findall(r"\{([^{}]*)\}", row)
        if not groups:
            raise ValueError(f"row {r} has no boxes: {row!r}")
        widths.append(len(groups))
        for c, grp in enumerate(groups, start=1):
            try:
                entries = tuple(int(v) for v in grp.replace(" ", "").split(",") if v)
            except ValueError:
                raise ValueError(f"bad box contents {grp!r}") from None
            if not entries:
                raise ValueError(f"empty box in row {r}")
            boxes[(r, c)] = entries
    outer = tuple(widths)
    if list(outer) != sorted(outer, reverse=True):
        raise ValueError("row lengths must weakly decrease")
    t = from_box_map(straight(outer), boxes)
    if not validate(t):
        raise ValueError("not a valid set-valued tableau")
    return t


# ---------------------------------------------------------------------------
# command implementations: each returns (text lines, json object)


def cmd_mult(args):
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    e = gm.multiply(gm.GammaElement.basis(lam), gm.GammaElement.basis(mu))
    return element_text(e), {"command": "mult", "terms": element_json(e)}


def cmd_coprod(args):
    nu = parse_partition(args.nu)
    t = gm.coproduct(gm.GammaElement.basis(nu))
    return tensor_text(t), {"command": "coprod", "terms": tensor_json(t)}


def cmd_skew(args):
    shape = parse_skew(args.shape)
    e = gm.GammaElement.from_dict(gm.alpha_skew_all(shape.outer, shape.inner))
    return element_text(e), {"command": "skew", "terms": element_json(e)}


def cmd_sslash(args):
    nu, lam = parse_partition(args.nu), parse_partition(args.lam)
    try:
        e = gm.sslash_expansion(nu, lam)
    except ValueError as exc:
        raise DomainFailure(str(exc)) from None
    return element_text(e), {"command": "sslash", "terms": element_json(e)}


def cmd_pieri(args):
    lam = parse_partition(args.lam)
    if args.ell < 1:
        raise DomainFailure("ell must be at least 1")
    e = gm.pieri_product(lam, args.ell)
    return element_text(e), {"command": "pieri", "terms": element_json(e)}


def cmd_stable(args):
    w = parse_perm(args.w)
    poly = orc.stable_limit(w, args.vars, args.deg)
    alpha = orc.alpha_w(w, args.deg)
    alpha_e = gm.GammaElement.from_dict(alpha)
    lines = [f"polynomial: {poly}"]
    lines += [f"alpha {partition_str(lam)} {c}" for lam, c in alpha_e.coeffs]
    return lines, {
        "command": "stable",
        "polynomial": poly.to_json(),
        "alpha": element_json(alpha_e),
    }


def cmd_poly(args):
    shape = parse_skew(args.shape)
    if args.yvars:
        if shape.inner:
            raise DomainFailure("double polynomials need a straight shape")
        poly = orc.double_grothendieck(shape.outer, args.vars, args.yvars, args.deg)
    else:
        poly = orc.svt_polynomial(shape, args.vars, args.deg)
    return [str(poly)], {"command": "poly", "polynomial": poly.to_json()}


def cmd_grmult(args):
    ctx = _context(args)
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    for p in (lam, mu):
        if not ctx.fits(p):
            raise DomainFailure(f"{partition_str(p)} does not fit in Gr({ctx.d},{ctx.n})")
    k = gr.k_multiply(gr.schubert_class(lam, ctx), gr.schubert_class(mu, ctx))
    return element_text(k.element), {"command": "grmult", "terms": element_json(k.element)}


def cmd_tripleint(args):
    ctx = _context(args)
    lam, mu, nu = (parse_partition(s) for s in (args.lam, args.mu, args.nu))
    try:
        v = gr.triple_intersection(lam, mu, nu, ctx)
    except ValueError as exc:
        raise DomainFailure(str(exc)) from None
    return [str(v)], {"command": "tripleint", "value": v}


def cmd_dualcheck(args):
    ctx = _context(args)
    parts = ctx.basis_partitions()
    failures = []
    for lam in parts:
        for mu in parts:
            got = gr.dual_pairing(lam, mu, ctx)
            expect = 1 if mu == ctx.complement(lam) else 0
            if got != expect:
                failures.append((lam, mu, got, expect))
    lines = [
        f"checked {len(parts) ** 2} pairings on Gr({ctx.d},{ctx.n}): "
        + ("all dual" if not failures else f"{len(failures)} failures")
    ]
    obj = {
        "command": "dualcheck",
        "pairs": len(parts) ** 2,
        "failures": [
            {"lam": list(l), "mu": list(m), "got": g, "expected": e}
            for l, m, g, e in failures
        ],
    }
    if failures:
        raise DomainFailure(lines[0])
    return lines, obj


def cmd_antipode(args):
    lam = parse_partition(args.lam)
    s = gm.antipode(gm.GammaElement.basis(lam), args.deg)
    return element_text(s.element), {
        "command": "antipode",
        "degree_cap": s.degree_cap,
        "terms": element_json(s.element),
    }


def cmd_insert(args):
    try:
        xs = tuple(sorted({int(v) for v in args.xset.split(",")}))
    except ValueError:
        raise ValueError(f"bad insertion set {args.xset!r}") from None
    if not xs or xs[0] < 1:
        raise ValueError(f"bad insertion set {args.xset!r}")
    t = parse_tableau_text(args.tableau) if args.tableau else Tableau((), (), ())
    lines = []
    cols = list(t.cols)
    carry = xs
    i = 0
    while i < len(cols) and carry:
        before = cols[i]
        cols[i], carry = insert_set(carry, None, cols[i])
        lines.append(
            f"column {i + 1}: {_col_text(before)} -> {_col_text(cols[i])}"
            f" eject {{{','.join(map(str, carry))}}}"
        )
        i += 1
    if carry:
        cols.append((carry,))
        lines.append(f"column {len(cols)}: new box {{{','.join(map(str, carry))}}}")
    result = tableau_from_cols(cols)
    lines.append(f"result: {result}")
    lines.append(f"word: {','.join(map(str, column_word(result)))}")
    obj = {
        "command": "insert",
        "result": str(result),
        "word": list(column_word(result)),
    }
    return lines, obj


def _col_text(col) -> str:
    return "[" + " ".join("{" + ",".join(map(str, box)) + "}" for box in col) + "]"


def cmd_verify(args):
    kwargs = {}
    if args.max_weight:
        if args.suite in ("shapes", "gamma"):
            kwargs["max_weight"] = args.max_weight
        elif args.suite == "insertion":
            kwargs["t_weight"] = args.max_weight
        elif args.suite == "grassmann":
            kwargs["scan_weight"] = args.max_weight
    if args.max_entry and args.suite in ("tableaux", "insertion"):
        kwargs["max_entry"] = args.max_entry
    if args.suite == "conjectures" and args.sn:
        kwargs["sn"] = args.sn
    try:
        results = vf.run_suite(args.suite, **kwargs)
    except KeyError:
        print(f"unknown suite: {args.suite}", file=sys.stderr)
        sys.exit(2)
    lines = []
    for r in results:
        if r.ok:
            lines.append(f"PASS {r.name}" + (f" ({r.detail})" if r.detail else ""))
        else:
            lines.append(f"FAIL {r.name}: {r.detail}")
    ok = all(r.ok for r in results)
    lines.append(f"{sum(r.ok for r in results)}/{len(results)} checks passed")
    obj = {
        "command": "verify",
        "suite": args.suite,
        "checks": [
            {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
        ],
        "ok": ok,
    }
    if not ok:
        return lines, obj, 1
    return lines, obj


def _context(args) -> gr.GrassmannContext:
    try:
        return gr.GrassmannContext(args.d, args.n)
    except ValueError as exc:
        raise DomainFailure(str(exc)) from None


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgamma",
        description="Exact arithmetic for the ring of stable Grothendieck "
        "polynomials and Grassmannian K-theory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")

    p = sub.add_parser("mult", parents=[common], help="product of two basis elements")
    p.add_argument("lam")
    p.add_argument("mu")
    p.set_defaults(fn=cmd_mult)

    p = sub.add_parser("coprod", parents=[common], help="coproduct of a basis element")
    p.add_argument("nu")
    p.set_defaults(fn=cmd_coprod)

    p = sub.add_parser("skew", parents=[common], help="basis expansion of a skew element")
    p.add_argument("shape", help='skew shape, e.g. "4,3,2/1"')
    p.set_defaults(fn=cmd_skew)

    p = sub.add_parser("sslash", parents=[common], help="coproduct component attached to lam")
    p.add_argument("nu")
    p.add_argument("lam")
    p.set_defaults(fn=cmd_sslash)

    p = sub.add_parser("pieri", parents=[common], help="column Pieri product")
    p.add_argument("lam")
    p.add_argument("ell", type=int)
    p.set_defaults(fn=cmd_pieri)

    p = sub.add_parser("stable", parents=[common], help="stable polynomial of a permutation")
    p.add_argument("w", help='one-line permutation, e.g. "2,4,1,3"')
    p.add_argument("--vars", type=int, default=4)
    p.add_argument("--deg", type=int, default=10)
    p.set_defaults(fn=cmd_stable)

    p = sub.add_parser("poly", parents=[common], help="signed tableau-sum polynomial")
    p.add_argument("shape")
    p.add_argument("--vars", type=int, default=4)
    p.add_argument("--yvars", type=int, default=0)
    p.add_argument("--deg", type=int, default=10)
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("grmult", parents=[common], help="product in the Grassmannian quotient")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("lam")
    p.add_argument("mu")
    p.set_defaults(fn=cmd_grmult)

    p = sub.add_parser("tripleint", parents=[common], help="triple intersection number")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.set_defaults(fn=cmd_tripleint)

    p = sub.add_parser("dualcheck", parents=[common], help="dual basis pairing table")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(fn=cmd_dualcheck)

    p = sub.add_parser("antipode", parents=[common], help="truncated antipode of a basis element")
    p.add_argument("lam")
    p.add_argument("--deg", type=int, default=10)
    p.set_defaults(fn=cmd_antipode)

    p = sub.add_parser("insert", parents=[common], help="trace a box-times-tableau product")
    p.add_argument("xset", help='comma list, e.g. "2,3,5"')
    p.add_argument("tableau", nargs="?", default="", help='rows like "{1,2}/{4,5}"')
    p.set_defaults(fn=cmd_insert)

    p = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    p.add_argument(
        "suite",
        choices=sorted(list(vf.SUITES) + ["all"]),
    )
    p.add_argument("--max-weight", type=int, default=0)
    p.add_argument("--max-entry", type=int, default=0)
    p.add_argument("--sn", type=int, default=0)
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.fn(args)
    except DomainFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if len(out) == 3:
        lines, obj, code = out
    else:
        lines, obj = out
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
