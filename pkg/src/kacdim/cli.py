"""Command-line front end: info, dim, typical, enumerate, weyl, table, poly.

Every code path is a thin adapter over the library modules: the CLI parses,
delegates and formats, and does no arithmetic of its own.  Exit codes:
0 success, 2 parse error, 3 validation error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import enumeration, polytools, rootdata, typicality, weyldim
from .scalar import ODD_LABEL, sym

_RAT_RE = re.compile(r"-?\d+(?:/\d+)?\Z")


class LabelSyntaxError(ValueError):
    """Label list does not match the grammar."""


class MultipleParams(ValueError):
    """More than one free-parameter placeholder in a label list."""


def parse_labels(text: str):
    """Comma-separated rationals with at most one free-parameter placeholder t."""
    out = []
    seen_t = False
    for token in text.split(","):
        token = token.strip()
        if token == ODD_LABEL:
            if seen_t:
                raise MultipleParams("at most one label may be the placeholder t")
            seen_t = True
            out.append(sym(ODD_LABEL))
        elif _RAT_RE.match(token):
            out.append(Fraction(token))
        else:
            raise LabelSyntaxError(f"bad label {token!r} (expected rational or t)")
    return out


def _fmt_frac(x) -> str:
    return str(Fraction(x))


def _fmt_scalar(v) -> str:
    return str(v)


def _fmt_labels(values) -> str:
    return "(" + ",".join(_fmt_scalar(v) for v in values) + ")"


def _fmt_even(even_labels) -> str:
    return "-".join("(" + ",".join(_fmt_frac(v) for v in vec) + ")" for vec in even_labels)


def _fmt_condition(rep) -> str:
    if not rep.param:
        return "-"
    return f"{rep.param} != " + ",".join(_fmt_frac(v) for v in sorted(rep.excluded))


def _rep_json(rep) -> dict:
    return {
        "algebra": rep.algebra.text,
        "n1": rootdata.build(rep.algebra).N1,
        "g_labels": [_fmt_scalar(v) for v in rep.g_labels],
        "even_labels": [[_fmt_frac(v) for v in vec] for vec in rep.even_labels],
        "ls0": None if rep.ls0 is None else _fmt_frac(rep.ls0),
        "dim": rep.dim,
        "param": rep.param,
        "excluded": [_fmt_frac(v) for v in sorted(rep.excluded)],
        "domain_excluded": [_fmt_frac(v) for v in rep.domain_excluded],
    }


def _columns(rows) -> list[str]:
    if not rows:
        return []
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


def _rep_row(rep) -> list[str]:
    return [
        rep.algebra.text,
        str(rootdata.build(rep.algebra).N1),
        _fmt_labels(rep.g_labels),
        _fmt_even(rep.even_labels),
        _fmt_condition(rep),
        str(rep.dim),
    ]


_REP_HEADER = ["algebra", "N1", "weight", "even weight", "condition", "dim"]


def _paper_order_key(rep):
    aid = rep.algebra
    flat = tuple(-v for vec in rep.even_labels for v in vec)
    if aid.family == "sl":
        return (0, aid.b, aid.a, flat)
    if aid.family == "osp" and aid.a == 2:
        return (1, aid.b, 0, flat)
    if aid.family == "osp":
        m = aid.a // 2
        return (2, aid.b, m, flat)
    if aid.family == "D21A":
        a1, a2, a3 = (vec[0] for vec in rep.even_labels)
        return (3, 0, 0, (-a1, -min(a2, a3), -a2, -a3))
    return (4, 0, 0, flat)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_info(args) -> int:
    rs = rootdata.build(rootdata.parse_algebra(args.algebra))
    out = []
    out.append(f"algebra: {rs.algebra.text}")
    out.append(f"type: {rs.kind}")
    out.append(f"N0={rs.N0} N1={rs.N1}")
    out.append("basis: " + " ".join(rs.basis))
    out.append("simple roots:")
    for i, root in enumerate(rs.simple):
        tag = " (odd)" if i == rs.s else ""
        out.append(f"  a{i + 1}{tag}: {root}")
    if rs.hidden is not None:
        out.append(f"hidden root: {rs.hidden}")
    out.append("cartan matrix:")
    for row in rootdata.cartan_matrix(rs):
        out.append("  [" + ", ".join(_fmt_scalar(v) for v in row) + "]")
    out.append("diagram:")
    out.append(rootdata.diagram(rs))
    out.append("rho0: " + _fmt_labels(rs.rho0))
    out.append("rho1: " + _fmt_labels(rs.rho1))
    if rs.kind == "II":
        value, b = rootdata.shift(rs)
        out.append(f"shift: {value} (integer part {b})")
    factors, center = rootdata.even_part(rs)
    parts = []
    for fac in factors:
        slots = ",".join("hidden" if p is None else f"l{p + 1}" for p in fac.positions)
        parts.append(f"{fac.factor}({slots})")
    out.append("even part: " + (" x ".join(parts) if parts else "abelian")
               + (" + center" if center else ""))
    print("\n".join(out))
    return 0


def _hw_from_args(args):
    rs = rootdata.build(rootdata.parse_algebra(args.algebra))
    return rs, typicality.from_g_labels(rs, parse_labels(args.labels))


def _verdict_text(report) -> str:
    if report.verdict == "typical":
        return "typical=yes"
    if report.verdict == "atypical":
        roots = " ".join(str(r) for r in report.vanishing)
        return f"typical=no (vanishing: {roots})"
    cond = f"{report.param} != " + ",".join(_fmt_frac(v) for v in sorted(report.excluded))
    return f"typical=conditional ({cond})"


def _cmd_dim(args) -> int:
    _, hw = _hw_from_args(args)
    dim = typicality.typical_dim(hw)
    report = typicality.is_typical(hw)
    if args.format == "jsonl":
        print(json.dumps({
            "algebra": hw.rs.algebra.text,
            "dim": _fmt_frac(dim),
            "verdict": report.verdict,
            "excluded": [_fmt_frac(v) for v in sorted(report.excluded)],
        }))
    else:
        print(f"dim={dim} {_verdict_text(report)}")
    return 0


def _cmd_typical(args) -> int:
    _, hw = _hw_from_args(args)
    report = typicality.is_typical(hw)
    if args.format == "jsonl":
        print(json.dumps({
            "algebra": hw.rs.algebra.text,
            "verdict": report.verdict,
            "vanishing": [str(r) for r in report.vanishing],
            "excluded": [_fmt_frac(v) for v in sorted(report.excluded)],
        }))
    else:
        print(_verdict_text(report))
    return 0


def _cmd_enumerate(args) -> int:
    if args.all:
        report = enumeration.enumerate_all(args.dim, workers=args.workers,
                                           merge_conjugates=args.merge_conjugates)
        reps = report.reps
    else:
        aid = rootdata.parse_algebra(args.algebra)
        reps = enumeration.enumerate_typical(aid, args.dim, workers=args.workers)
        report = None
    if args.format == "jsonl":
        for rep in reps:
            print(json.dumps(_rep_json(rep)))
    else:
        for line in _columns([_rep_row(rep) for rep in reps]):
            print(line)
        print(f"rows: {len(reps)}")
        if report is not None and report.classes is not None:
            print(f"classes: {len(report.classes)}")
            for pair in report.merged_pairs:
                what = " + ".join(_fmt_labels(reps[i].g_labels) for i in pair)
                print(f"merged: {reps[pair[0]].algebra.text} {what}")
    return 0


def _cmd_weyl(args) -> int:
    factor = weyldim.parse_factor(args.factor)
    labels = parse_labels(args.labels)
    if any(not isinstance(v, Fraction) for v in labels):
        raise LabelSyntaxError("weyl labels must be rational")
    print(_fmt_frac(weyldim.weyl_dim(factor, labels)))
    return 0


def _cmd_poly(args) -> int:
    values = parse_labels(args.values)
    if any(not isinstance(v, Fraction) for v in values):
        raise LabelSyntaxError("poly values must be rational")
    p = polytools.SampledPolynomial(args.base, tuple(values))
    coeffs = polytools.binomial_coefficients(p)
    print("coefficients: " + ",".join(_fmt_frac(c) for c in coeffs))
    print("integer_valued: " + ("yes" if polytools.is_integer_valued(p) else "no"))
    return 0


# ---------------------------------------------------------------------------
# golden tables
# ---------------------------------------------------------------------------

_TABLE2_GRID = (
    [(f"osp({2 * m + 1}|{2 * n})", Fraction(2 * m + 1, 2), m)
     for m in range(1, 5) for n in range(1, 5)]
    + [(f"osp(1|{2 * n})", Fraction(1, 2), 0) for n in range(1, 5)]
    + [(f"osp({2 * m}|{2 * n})", Fraction(m), m)
       for m in range(2, 5) for n in range(1, 5) if (m, n) != (2, 1)]
    + [("osp(4|2;1)", Fraction(2), 2), ("osp(4|2;1/3)", Fraction(2), 2),
       ("osp(4|2;-2/5)", Fraction(2), 2), ("F(4)", Fraction(4), 4),
       ("G(3)", Fraction(7, 2), 3)]
)

_TABLE2_ROWS = [
    ("osp(2m+1|2n), m,n>=1", "m+1/2", "m"),
    ("osp(1|2n), n>=1", "1/2", "0"),
    ("osp(2m|2n), m>=2, n>=1", "m", "m"),
    ("osp(4|2;a)", "2", "2"),
    ("F(4)", "4", "4"),
    ("G(3)", "7/2", "3"),
]


def _table2() -> str:
    for name, expect_shift, expect_b in _TABLE2_GRID:
        rs = rootdata.build(rootdata.parse_algebra(name))
        value, b = rootdata.shift(rs)
        if value != expect_shift or b != expect_b:
            raise AssertionError(f"shift mismatch for {name}: {value}, {b}")
    rows = [("algebra", "shift", "integer part")] + _TABLE2_ROWS
    lines = ["hidden-label shift for type II algebras", ""]
    lines += _columns([list(r) for r in rows])
    return "\n".join(lines) + "\n"


def _table_reps(target: int, kind: str) -> str:
    report = enumeration.enumerate_all(target)
    wanted = ("II",) if kind == "II" else ("I0", "I1")
    reps = [r for r in report.reps if rootdata.build(r.algebra).kind in wanted]
    reps.sort(key=_paper_order_key)
    title = {
        "I": f"typical irreducible representations of dimension {target}: type I",
        "II": f"typical irreducible representations of dimension {target}: type II",
    }[kind]
    rows = [_REP_HEADER] + [_rep_row(rep) for rep in reps]
    return title + "\n\n" + "\n".join(_columns(rows)) + "\n"


def _cmd_table(args) -> int:
    if args.id == 2:
        sys.stdout.write(_table2())
    elif args.id == 3:
        sys.stdout.write(_table_reps(64, "I"))
    else:
        sys.stdout.write(_table_reps(64, "II"))
    return 0


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kacdim",
        description="Exact root data, typical dimensions and dimension searches "
                    "for the basic classical Lie superalgebras.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "jsonl"), default="text")

    p = sub.add_parser("info", help="root data summary for one algebra")
    p.add_argument("algebra")
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("dim", help="typical dimension and typicality of a weight")
    p.add_argument("algebra")
    p.add_argument("--labels", required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_dim)

    p = sub.add_parser("typical", help="typicality report for a weight")
    p.add_argument("algebra")
    p.add_argument("--labels", required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_typical)

    p = sub.add_parser("enumerate", help="typical representations of a dimension")
    p.add_argument("--dim", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--algebra")
    group.add_argument("--all", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--merge-conjugates", action="store_true")
    add_format(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("weyl", help="Weyl dimension of an ordinary simple factor")
    p.add_argument("factor")
    p.add_argument("--labels", required=True)
    p.set_defaults(fn=_cmd_weyl)

    p = sub.add_parser("table", help="golden tables (2: shifts, 3/4: dimension-64 reps)")
    p.add_argument("--id", type=int, choices=(2, 3, 4), required=True)
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("poly", help="binomial-basis coefficients of sampled values")
    p.add_argument("--values", required=True)
    p.add_argument("--base", type=int, default=0)
    p.set_defaults(fn=_cmd_poly)

    return parser


_PARSE_ERRORS = (rootdata.ParseError, LabelSyntaxError, MultipleParams)
_VALIDATION_ERRORS = (
    rootdata.ValidationError, rootdata.NotTypeII,
    typicality.NonDominant, typicality.NonIntegralHidden,
    typicality.ParamMisuse, typicality.OutOfRange, ValueError,
)


def run(argv) -> int:
    """Parse argv, execute, stream output; 0 ok, 2 parse error, 3 validation error."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
