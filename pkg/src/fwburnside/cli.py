"""Command-line interface.

Verbs: group, lattice, marks, idempotents, mconst, op, and the fw family
(apply, check, survey). Identical invocations print identical bytes; all
rationals appear as "p/q" strings and elements as sparse [label, rational]
pair lists over the canonical class labels ("<order>:<index>").

Exit codes: 0 success, 1 usage or parse error, 2 precondition failure
(cap exceeded, non-normal kernel, missing class), 3 broken internal
invariant.
"""

from __future__ import annotations

import argparse
import io
import json
import re
import sys

from .burnside import (
    deflate,
    element_from_json,
    element_to_json,
    fixed_points,
    format_rational,
    idempotent,
    induce,
    inflate,
    restrict,
    table_of_marks,
    tensor_induce,
)
from .errors import (
    AlgebraError,
    CapExceededError,
    InvalidParameterError,
    PreconditionError,
    SpecParseError,
)
from .fw import check_commutes, fw_apply, fw_context, OPERATIONS
from .groups import DEFAULT_ORDER_CAP, construct_group, quotient_group, subgroup_embedding
from .lattice import m_constant, subgroup_lattice
from .survey import SurveyConfig, full_catalog, survey_rows, write_survey_csv


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _common(parser):
    parser.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP,
                        help="largest allowed group order (default 512)")
    parser.add_argument("--format", choices=("json", "csv", "table"), default=None,
                        help="output format where applicable")
    parser.add_argument("--out", default=None, help="write output to a file")


def build_parser():
    parser = _Parser(prog="fwburnside", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="order, abelianness, and element-order census")
    p.add_argument("spec")
    _common(p)

    p = sub.add_parser("lattice", help="subgroup classes with normalizer indices")
    p.add_argument("spec")
    _common(p)

    p = sub.add_parser("marks", help="table of marks over the canonical classes")
    p.add_argument("spec")
    _common(p)

    p = sub.add_parser("idempotents", help="primitive rational idempotents")
    p.add_argument("spec")
    _common(p)

    p = sub.add_parser("mconst", help="m-constant of a normal pair K <= L")
    p.add_argument("spec")
    p.add_argument("L", help="subgroup selector for L")
    p.add_argument("K", help="subgroup selector for K (normal in L)")
    _common(p)

    p = sub.add_parser("op", help="apply a change-of-group operation to an element")
    p.add_argument("operation", choices=OPERATIONS)
    p.add_argument("spec")
    p.add_argument("selector", help="center | frattini | maxcyc | order=<k>:<i>")
    p.add_argument("element", help="inline JSON or a path to an element file")
    _common(p)

    fw = sub.add_parser("fw", help="the cyclic-to-G lift and its checks")
    fwsub = fw.add_subparsers(dest="fw_command", required=True)

    p = fwsub.add_parser("apply", help="lift an element over the cyclic source ring")
    p.add_argument("spec")
    p.add_argument("element", help="inline JSON or a path to an element file")
    _common(p)

    p = fwsub.add_parser("check", help="commutativity of one operation at one subgroup")
    p.add_argument("spec")
    p.add_argument("--op", required=True, choices=OPERATIONS)
    p.add_argument("--sub", required=True, help="subgroup selector")
    _common(p)

    p = fwsub.add_parser("survey", help="normal-subgroup survey over a catalog")
    p.add_argument("--catalog", default=None,
                   help="file with one group spec per line (default: built-in catalog)")
    _common(p)

    return parser


_SELECTOR_RE = re.compile(r"order=(\d+):(\d+)$")


def resolve_selector(G, text):
    """Resolve center | frattini | maxcyc | order=<k>:<i> to a subgroup."""
    lat = subgroup_lattice(G)
    if text == "center":
        return G.center()
    if text == "frattini":
        return lat.frattini()
    if text == "maxcyc":
        return lat.max_cyclic_intersection()
    m = _SELECTOR_RE.match(text)
    if m:
        return lat.class_rep(lat.class_by_label(f"{m.group(1)}:{m.group(2)}"))
    raise SpecParseError(f"unknown subgroup selector {text!r}")


def _load_element_data(text):
    s = text.strip()
    if s.startswith("["):
        try:
            return json.loads(s)
        except json.JSONDecodeError as exc:
            raise SpecParseError(f"bad element JSON: {exc}") from exc
    try:
        with open(text, encoding="utf-8") as f:
            return json.load(f)
    except OSError as exc:
        raise SpecParseError(f"cannot read element file {text!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"bad element JSON in {text!r}: {exc}") from exc


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def _class_label_of(lat, sub):
    return lat.class_label(lat.class_index(sub))


def _require_json(fmt):
    if fmt not in (None, "json"):
        raise _Usage(f"this command only supports --format json, not {fmt!r}")


def _render_table(headers, rows):
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def cmd_group(args):
    G = construct_group(args.spec, cap=args.cap)
    _require_json(args.format)
    census = {}
    for a in range(G.n):
        k = G.element_order(a)
        census[k] = census.get(k, 0) + 1
    return _dump(
        {
            "spec": args.spec.strip(),
            "label": G.label,
            "order": G.n,
            "abelian": G.is_abelian(),
            "exponent": G.exponent(),
            "center_order": G.center().order,
            "element_order_counts": {str(k): census[k] for k in sorted(census)},
        }
    )


def cmd_lattice(args):
    G = construct_group(args.spec, cap=args.cap)
    lat = subgroup_lattice(G)
    classes = []
    for c in range(lat.n_classes()):
        rep = lat.class_rep(c)
        classes.append(
            {
                "label": lat.class_label(c),
                "order": rep.order,
                "class_size": len(lat.classes[c]),
                "normalizer_index": G.n // lat.normalizer(rep).order,
            }
        )
    payload = {
        "group": G.label,
        "order": G.n,
        "subgroup_count": len(lat.subgroups),
        "class_count": lat.n_classes(),
        "classes": classes,
        "frattini": _class_label_of(lat, lat.frattini()),
        "max_cyclic_intersection": _class_label_of(lat, lat.max_cyclic_intersection()),
    }
    if args.format == "table":
        headers = ("label", "order", "class_size", "normalizer_index")
        rows = [tuple(str(c[h]) for h in headers) for c in classes]
        return _render_table(headers, rows)
    _require_json(args.format)
    return _dump(payload)


def cmd_marks(args):
    G = construct_group(args.spec, cap=args.cap)
    lat = subgroup_lattice(G)
    tom = table_of_marks(lat)
    labels = [lat.class_label(c) for c in range(lat.n_classes())]
    if args.format == "table":
        headers = ("class", *labels)
        rows = [(labels[i], *(str(v) for v in row)) for i, row in enumerate(tom)]
        return _render_table(headers, rows)
    if args.format == "csv":
        buf = io.StringIO()
        buf.write("class," + ",".join(labels) + "\n")
        for i, row in enumerate(tom):
            buf.write(labels[i] + "," + ",".join(str(v) for v in row) + "\n")
        return buf.getvalue()
    _require_json(args.format)
    return _dump({"group": G.label, "classes": labels, "table": [list(r) for r in tom]})


def cmd_idempotents(args):
    G = construct_group(args.spec, cap=args.cap)
    lat = subgroup_lattice(G)
    items = [
        {
            "class": lat.class_label(c),
            "coefficients": element_to_json(idempotent(lat, c)),
        }
        for c in range(lat.n_classes())
    ]
    _require_json(args.format)
    return _dump({"group": G.label, "idempotents": items})


def cmd_mconst(args):
    G = construct_group(args.spec, cap=args.cap)
    lat = subgroup_lattice(G)
    L = resolve_selector(G, args.L)
    K = resolve_selector(G, args.K)
    value = m_constant(lat, L, K)
    _require_json(args.format)
    return _dump(
        {
            "group": G.label,
            "L": _class_label_of(lat, L),
            "K": _class_label_of(lat, K),
            "m": format_rational(value),
        }
    )


def cmd_op(args):
    G = construct_group(args.spec, cap=args.cap)
    sub = resolve_selector(G, args.selector)
    data = _load_element_data(args.element)
    op = args.operation
    if op in ("res",):
        x = element_from_json(G, data)
        result = restrict(x, subgroup_embedding(sub))
    elif op in ("ind", "ten"):
        emb = subgroup_embedding(sub)
        x = element_from_json(emb.source, data)
        result = induce(x, emb) if op == "ind" else tensor_induce(x, emb)
    elif op == "inf":
        qm = quotient_group(G, sub)
        x = element_from_json(qm.target, data)
        result = inflate(x, qm)
    elif op in ("def", "fix"):
        qm = quotient_group(G, sub)
        x = element_from_json(G, data)
        result = deflate(x, qm) if op == "def" else fixed_points(x, qm)
    else:
        raise AssertionError(op)
    _require_json(args.format)
    return _dump(
        {
            "group": result.group.label,
            "operation": op,
            "element": element_to_json(result),
        }
    )


def cmd_fw_apply(args):
    G = construct_group(args.spec, cap=args.cap)
    ctx = fw_context(G)
    x = element_from_json(ctx.C, _load_element_data(args.element))
    y = fw_apply(ctx, x)
    _require_json(args.format)
    return _dump(
        {
            "group": G.label,
            "source": ctx.C.label,
            "element": element_to_json(y),
        }
    )


def cmd_fw_check(args):
    G = construct_group(args.spec, cap=args.cap)
    ctx = fw_context(G)
    sub = resolve_selector(G, args.sub)
    report = check_commutes(ctx, args.op, sub)
    cert = None
    if report.certificate is not None:
        cert = {
            "basis": report.certificate.basis_label,
            "left": report.certificate.left,
            "right": report.certificate.right,
        }
    _require_json(args.format)
    return _dump(
        {
            "group": G.label,
            "op": report.op,
            "sub": report.sub_label,
            "commutes": report.commutes,
            "checked": report.checked,
            "certificate": cert,
        }
    )


def cmd_fw_survey(args):
    if args.catalog is None:
        specs = full_catalog()
    else:
        try:
            with open(args.catalog, encoding="utf-8") as f:
                specs = tuple(
                    line.strip()
                    for line in f
                    if line.strip() and not line.strip().startswith("#")
                )
        except OSError as exc:
            raise SpecParseError(f"cannot read catalog {args.catalog!r}: {exc}") from exc
    rows = survey_rows(SurveyConfig(specs=specs, cap=args.cap))
    if args.format == "json":
        return _dump({"rows": rows})
    if args.format == "table":
        headers = rows[0].keys() if rows else ()
        return _render_table(tuple(headers), [tuple(r.values()) for r in rows])
    buf = io.StringIO()
    write_survey_csv(rows, buf)
    return buf.getvalue()


_DISPATCH = {
    "group": cmd_group,
    "lattice": cmd_lattice,
    "marks": cmd_marks,
    "idempotents": cmd_idempotents,
    "mconst": cmd_mconst,
    "op": cmd_op,
}


def main(argv=None):
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help and friends
            return int(exc.code or 0)
        if args.command == "fw":
            handler = {
                "apply": cmd_fw_apply,
                "check": cmd_fw_check,
                "survey": cmd_fw_survey,
            }[args.fw_command]
        else:
            handler = _DISPATCH[args.command]
        text = handler(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (SpecParseError, InvalidParameterError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (CapExceededError, PreconditionError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 2
    except (AlgebraError, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
