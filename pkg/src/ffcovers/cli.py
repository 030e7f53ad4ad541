"""Command line front end.

Every subcommand writes one JSON document (or CSV/table text) to stdout.
Exit status: 0 on success, 1 on a domain error, 2 on a usage error.  Errors
are also JSON, shaped ``{"error": {"kind": ..., "message": ...}}``.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import combinatorics, covers, pgl, projective, quotients, verify, zeta
from .errors import FFCoversError, ParseError
from .ffield import FieldElement, field_of_size, make_field, nth_power_root_count, parse_element

JSON_INT_LIMIT = 2**53


class UsageError(Exception):
    kind = "UsageError"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def to_jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < JSON_INT_LIMIT else str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, FieldElement):
        return obj.serialize()
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "value"):
        return obj.value
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump_json(doc):
    return json.dumps(to_jsonable(doc), indent=2, sort_keys=True) + "\n"


def _rows_to_csv(rows):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def render(doc, fmt, rows=None):
    """Render ``doc``; ``rows`` is a natural tabular form when one exists."""
    if fmt == "json":
        return dump_json(doc)
    if rows is None:
        rows = [["key", "value"]] + [
            [k, v if isinstance(v, (str, int)) else json.dumps(v, sort_keys=True)]
            for k, v in sorted(to_jsonable(doc).items())
        ]
    if fmt == "csv":
        return _rows_to_csv(rows)
    widths = [max(len(str(r[i])) if i < len(r) else 0 for r in rows) for i in range(max(map(len, rows)))]
    return "".join(
        "  ".join(str(c).ljust(widths[i]) for i, c in enumerate(r)).rstrip() + "\n" for r in rows
    )


# -- subcommand handlers: each returns (doc, rows-or-None, exit code) ---------------

def _field(args):
    return make_field(args.p, args.n)


def cmd_field(args):
    ctx = _field(args)
    if args.action == "info":
        doc = {
            "p": ctx.p,
            "n": ctx.n,
            "q": ctx.q,
            "modulus": list(ctx.modulus),
            "primitive_element": ctx.primitive_element(),
        }
        return doc, None, 0
    if args.action == "elements":
        elems = [e.serialize() for e in ctx.elements()]
        return {"q": ctx.q, "elements": elems}, [["element"]] + [[e] for e in elems], 0
    if args.value is None or args.exp is None:
        raise UsageError("field nthroots needs --value and --exp")
    c = parse_element(ctx, args.value)
    return {"value": c, "exp": args.exp, "count": nth_power_root_count(c, args.exp)}, None, 0


def cmd_projective(args):
    ctx = _field(args)
    if args.action == "count":
        return {"count": len(projective.enumerate_proj(ctx, args.dim))}, None, 0
    points = projective.enumerate_proj(ctx, 2)
    lines = projective.lines_in_plane(ctx)
    doc = {
        "lines": len(lines),
        "points": len(points),
        "points_per_line": sorted({len(projective.points_on_line(ln, points)) for ln in lines}),
        "lines_per_point": sorted({sum(projective.incident(pt, ln) for ln in lines) for pt in points}),
    }
    return doc, None, 0


def cmd_stirling(args):
    if args.table < 0:
        raise UsageError("--table must be non-negative")
    fn = combinatorics.stirling_signed if args.signed else combinatorics.stirling_unsigned
    table = [[fn(n, k) for k in range(n + 1)] for n in range(args.table + 1)]
    header = ["n"] + [f"k={k}" for k in range(args.table + 1)]
    rows = [header] + [[n] + row for n, row in enumerate(table)]
    doc = {"kind": "signed" if args.signed else "unsigned", "rows": table}
    return doc, rows, 0


def cmd_census(args):
    ctx = _field(args)
    report = combinatorics.census_covers_oracle(ctx, args.cover_degree, args.deg)
    rows = [["k", "falling_factorial", "count"]] + [
        [k, ff, c] for k, (ff, c) in sorted(report.by_root_count.items())
    ]
    return report.to_dict(), rows, 0


def _curve_args(args):
    ctx = field_of_size(args.q)
    if args.plane is not None:
        try:
            data = json.loads(args.plane)
        except json.JSONDecodeError as exc:
            raise ParseError(f"--plane is not valid JSON: {exc}") from None
        return ctx, None, covers.PlaneCurve.from_json(ctx, data)
    if args.curve is None:
        raise UsageError("one of --curve or --plane is required")
    return ctx, covers.parse_curve(ctx, args.curve), None


def _try(fn, *a):
    try:
        return fn(*a), None
    except FFCoversError as exc:
        return None, {"kind": exc.kind, "message": str(exc)}


def cmd_covers(args):
    ctx, curve, plane = _curve_args(args)
    if plane is not None:
        if args.action == "genus":
            raise UsageError("genus needs --curve")
        n = covers.count_plane_points(plane, args.r)
        doc = {"plane": plane.to_json(), "degree": plane.degree, "q": ctx.q**args.r, "points": n}
        if args.action == "bounds":
            if args.genus is None:
                raise UsageError("bounds for a plane curve needs --genus")
            doc["bounds"] = covers.check_bounds(n, args.genus, ctx.q**args.r, plane.degree).to_dict()
        return doc, None, 0

    doc = {"curve": curve.spec(), "q": ctx.q}
    if args.action == "genus":
        ram = covers.ramification_indices(curve)
        g, err = _try(covers.genus_tame, curve)
        doc.update(
            ramification=list(ram.indices),
            e_inf=ram.e_inf,
            infinity_unramified=ram.infinity_unramified,
            infinity_sum_zero_mod_q=ram.sum_zero_mod_q,
            genus_paper=covers.genus_paper(curve),
            genus_tame=g,
            tame=curve.is_tame,
            primitive=curve.primitivity == 1,
        )
        if err:
            doc["genus_tame_error"] = err
        return doc, None, 0

    doc["r"] = args.r
    doc["affine_points"] = covers.count_affine_points(curve, args.r)
    smooth, err = _try(covers.count_smooth_model_points, curve, args.r)
    doc["smooth_model_points"] = smooth
    if err:
        doc["smooth_model_error"] = err
    if args.action == "bounds":
        if smooth is None:
            raise covers.UnsupportedModel(err["message"])
        g = covers.genus_tame(curve)
        doc["bounds"] = covers.check_bounds(smooth, g, ctx.q**args.r).to_dict()
    return doc, None, 0


def _int_list(text, flag):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"{flag} must be a comma-separated list of integers") from None


def cmd_zeta(args):
    counts = _int_list(args.counts, "--counts")
    zn = zeta.fit_numerator(args.q, args.g, counts[: args.g])
    if args.action == "fit":
        upto = max(args.upto or 2 * args.g, len(counts), 1)
        doc = {
            "q": args.q,
            "g": args.g,
            "coeffs": list(zn.coeffs),
            "predicted": {str(r): n for r, n in zeta.predicted_counts(zn, upto).items()},
        }
        return doc, None, 0
    order = args.order if args.order is not None else len(counts)
    ok = zeta.series_consistency(zn, counts, order)
    doc = {"q": args.q, "g": args.g, "coeffs": list(zn.coeffs), "order": order, "consistent": ok}
    return doc, None, 0


def _split_top(text):
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def _matrix(ctx, text):
    entries = _split_top(text)
    if len(entries) != 4:
        raise UsageError(f"matrix needs 4 entries a,b,c,d, got {text!r}")
    try:
        return pgl.PGLElement(ctx, *(parse_element(ctx, e) for e in entries))
    except ValueError as exc:
        if isinstance(exc, FFCoversError):
            raise
        raise ParseError(str(exc)) from None


def cmd_pgl(args):
    ctx = field_of_size(args.q)
    if args.action == "order":
        return {"q": ctx.q, "order": pgl.pgl_order(ctx), "psl_order": pgl.psl_order(ctx)}, None, 0
    if args.action == "classify":
        if args.matrix is None:
            raise UsageError("pgl classify needs --matrix")
        A = _matrix(ctx, args.matrix)
        doc = {
            "matrix": A.serialize(),
            "class": pgl.classify(A),
            "order": A.order(),
            "fixed_points": [pgl.p1_label(z) for z in pgl.fixed_points(A)],
        }
        return doc, None, 0
    gens = [_matrix(ctx, g) for g in (args.gens or "").split(";") if g.strip()]
    group = pgl.subgroup_closure(gens, ctx)
    orbits = pgl.orbits_on_p1(group)
    doc = {
        "order": len(group),
        "orbits": [[pgl.p1_label(z) for z in o] for o in orbits],
        "orbit_sizes": [len(o) for o in orbits],
    }
    return doc, None, 0


def cmd_quotient(args):
    return quotients.curve_invariance_report(args.q0, args.m), None, 0


def cmd_verify_all(args):
    results = verify.run_all(args.scale)
    for r in results:
        print(r.line(), file=sys.stderr)
    doc = verify.report(results, args.scale)
    rows = [["id", "name", "passed"]] + [[r.id, r.name, r.passed] for r in results]
    return doc, rows, 0 if doc["passed"] else 1


def build_parser():
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "table"), default="json")

    parser = _Parser(prog="ffcovers", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("field", parents=[fmt], help="finite field data")
    p.add_argument("action", choices=("info", "elements", "nthroots"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--value")
    p.add_argument("--exp", type=int)
    p.set_defaults(handler=cmd_field)

    p = sub.add_parser("projective", parents=[fmt], help="projective space counts")
    p.add_argument("action", choices=("count", "lines"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--dim", type=int, default=2)
    p.set_defaults(handler=cmd_projective)

    p = sub.add_parser("stirling", parents=[fmt], help="Stirling numbers of the first kind")
    p.add_argument("--table", type=int, required=True)
    p.add_argument("--signed", action="store_true")
    p.set_defaults(handler=cmd_stirling, default_format="csv")

    p = sub.add_parser("census", parents=[fmt], help="census of covers y^d = f(x)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1, help="extension degree of the base field")
    p.add_argument("--deg", type=int, required=True, help="degree of f")
    p.add_argument("--cover-degree", type=int, required=True)
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser("covers", parents=[fmt], help="Kummer and plane curves")
    p.add_argument("action", choices=("genus", "points", "bounds"))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--curve")
    p.add_argument("--plane")
    p.add_argument("--genus", type=int)
    p.set_defaults(handler=cmd_covers)

    p = sub.add_parser("zeta", parents=[fmt], help="zeta numerators from point counts")
    p.add_argument("action", choices=("fit", "check"))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--counts", required=True)
    p.add_argument("--upto", type=int)
    p.add_argument("--order", type=int)
    p.set_defaults(handler=cmd_zeta)

    p = sub.add_parser("pgl", parents=[fmt], help="PGL(2,q) and its action on P^1")
    p.add_argument("action", choices=("order", "classify", "orbits"))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--matrix")
    p.add_argument("--gens")
    p.set_defaults(handler=cmd_pgl)

    p = sub.add_parser("quotient", parents=[fmt], help="quotient invariants of y^m = 1 - x^(q-1)")
    p.add_argument("action", choices=("invariants",))
    p.add_argument("--q0", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=cmd_quotient)

    p = sub.add_parser("verify-all", parents=[fmt], help="run every acceptance check")
    p.add_argument("--scale", choices=verify.SCALES, default="small")
    p.set_defaults(handler=cmd_verify_all)
    return parser


def _explicit_format(argv):
    return any(a == "--format" or a.startswith("--format=") for a in argv)


def main(argv=None, stdout=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    out = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        if not _explicit_format(argv):
            fmt = getattr(args, "default_format", "json")
        doc, rows, code = args.handler(args)
        out.write(render(doc, fmt, rows))
        return code
    except UsageError as exc:
        out.write(dump_json({"error": {"kind": exc.kind, "message": str(exc)}}))
        print(str(exc), file=sys.stderr)
        return 2
    except FFCoversError as exc:
        out.write(dump_json({"error": {"kind": exc.kind, "message": str(exc)}}))
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        out.write(dump_json({"error": {"kind": type(exc).__name__, "message": str(exc)}}))
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
