"""Command-line front end.

Subcommands map one-to-one onto module operations:

    coclasslab group info --id 243,5
    coclasslab group verify-table1
    coclasslab predict --class 5 --coclass 2 --defect 0 --tree T54
    coclasslab lattice --class 7 --coclass 6 --emit dot
    coclasslab lattice --figure 3 --emit dot
    coclasslab classify --input fields.csv --family imaginary-quadratic

Exit codes: 0 success, 1 domain error, 2 usage error.  Every subcommand
accepts --format json-lines for machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import artin, catalog, engine, fields, lattice, rules
from .errors import CoclassLabError
from .invariants import format_log


def _order_bound() -> int:
    env = os.environ.get("COCLASS_ORDER_BOUND")
    return int(env) if env else engine.DEFAULT_ORDER_BOUND


def _emit(rows, fmt: str, human) -> None:
    if fmt == "json-lines":
        for row in rows:
            print(json.dumps(row, sort_keys=True))
    else:
        human(rows)


def _parse_id(text: str) -> tuple[int, int]:
    try:
        order, index = text.split(",")
        return int(order), int(index)
    except ValueError:
        raise CoclassLabError(f"group id must look like 243,5 (got {text!r})")


# --------------------------------------------------------------------------
# group
# --------------------------------------------------------------------------

def _cmd_group_info(args) -> int:
    gid = _parse_id(args.id)
    entry = catalog.lookup(gid)
    g = engine.realize(entry.presentation, _order_bound())
    d = engine.descriptor(g)
    ap = artin.artin_pattern(g)
    row = {
        "id": f"{gid[0]},{gid[1]}",
        "order": g.order, "class": d.c, "coclass": d.r, "defect": d.k,
        "tau0": format_log(ap.tau0),
        "tau1": [format_log(t) for t in ap.tau1],
        "tau2": format_log(ap.tau2),
        "kappa": ap.kappa_string(),
        "ct": artin.ct_label(ap.kappa) or "",
    }

    def human(rows):
        for r in rows:
            print(f"group <{r['id']}>: order {r['order']} = 3^{d.n}, "
                  f"class {r['class']}, coclass {r['coclass']}, defect {r['defect']}")
            print(f"  tau1 = {','.join(r['tau1'])}   tau2 = {r['tau2']}")
            print(f"  kappa = {r['kappa']}" + (f"   CT {r['ct']}" if r["ct"] else ""))

    _emit([row], args.format, human)
    return 0


def _cmd_group_verify(args) -> int:
    rows = []
    failed = 0
    for entry in catalog.all_entries():
        if not entry.in_table:
            continue
        result = catalog.verify_entry(entry, order_bound=_order_bound())
        rows.append({"id": f"{entry.small_groups_id[0]},{entry.small_groups_id[1]}",
                     "passed": result.passed,
                     "detail": "; ".join(result.failures) or "ok"})
        failed += 0 if result.passed else 1

    def human(rows):
        for r in rows:
            print(f"[{'ok' if r['passed'] else 'FAIL'}] <{r['id']}> {r['detail']}")
        print(f"{len(rows) - failed}/{len(rows)} table rows verified")

    _emit(rows, args.format, human)
    return 0 if failed == 0 else 1


# --------------------------------------------------------------------------
# predict
# --------------------------------------------------------------------------

def _cmd_predict(args) -> int:
    tree = rules.TreeTag(args.tree) if args.tree else rules.TreeTag.NOT_APPLICABLE
    tau1, tau2 = rules.predict_ttt(args.cls, args.coclass, args.defect, tree)
    row = {"class": args.cls, "coclass": args.coclass, "defect": args.defect,
           "tree": tree.value,
           "tau1": [format_log(t) for t in tau1], "tau2": format_log(tau2)}

    def human(rows):
        for r in rows:
            print(f"tau1 = {','.join(r['tau1'])}")
            print(f"tau2 = {r['tau2']}")

    _emit([row], args.format, human)
    return 0


# --------------------------------------------------------------------------
# lattice
# --------------------------------------------------------------------------

def _cmd_lattice(args) -> int:
    if args.figure is not None:
        models = lattice.figure_models(args.figure, args.prime)
    else:
        if args.cls is None or args.coclass is None:
            raise CoclassLabError("need --class and --coclass (or --figure)")
        if args.coclass == 1:
            models = [lattice.maximal_class_lattice(args.prime, args.cls)]
        else:
            models = [lattice.predicted_lattice(args.prime, args.cls, args.coclass)]
    if args.emit == "dot":
        text = "\n".join(lattice.emit_diagram(m) for m in models)
        if args.out:
            with open(args.out, "w") as f:
                f.write(text)
            print(f"wrote {args.out}")
        else:
            sys.stdout.write(text)
        return 0
    rows = [{"p": m.p, "class": m.c, "coclass": m.r,
             "nodes": m.node_count, "diamonds": len(m.diamonds)} for m in models]

    def human(rows):
        for r in rows:
            print(f"p={r['p']} c={r['class']} r={r['coclass']}: "
                  f"{r['nodes']} normal subgroups, {r['diamonds']} diamonds")

    _emit(rows, args.format, human)
    return 0


# --------------------------------------------------------------------------
# classify
# --------------------------------------------------------------------------

def _cmd_classify(args) -> int:
    records = fields.load_records(args.input, strict=args.strict)
    if args.family:
        records = [r for r in records if r.family == args.family]
    rows = []
    for rec in records:
        verdict, copol = fields.classify(rec, strict=args.strict)
        rows.append({"family": rec.family, "label": rec.label,
                     "coclass": verdict.coclass, "abelian": verdict.abelian,
                     "copolarization_lo": copol,
                     "tau": [format_log(t) for t in rec.tau]})
    minima = fields.minimal_table(records, args.family)

    def human(rows):
        for r in rows:
            if "label" not in r:
                continue
            flag = " (abelian)" if r["abelian"] else ""
            print(f"{r['family']} {r['label']}: tau = ({','.join(r['tau'])})"
                  f" -> coclass {r['coclass']}{flag},"
                  f" co-polarization lo {r['copolarization_lo']}")
        print("minimal labels per coclass:")
        for cc, rec in minima.items():
            print(f"  coclass {cc}: {rec.label}")

    _emit(rows + [{"minimal": {str(cc): rec.label for cc, rec in minima.items()}}],
          args.format, human)
    return 0


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="coclasslab",
        description="finite metabelian 3-group laboratory")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["text", "json-lines"], default="text")

    g = sub.add_parser("group", help="realize and analyse catalog groups")
    gsub = g.add_subparsers(dest="group_command", required=True)
    gi = gsub.add_parser("info", help="descriptor and Artin pattern")
    gi.add_argument("--id", required=True, help="SmallGroups id, e.g. 243,5")
    add_format(gi)
    gi.set_defaults(func=_cmd_group_info)
    gv = gsub.add_parser("verify-table1", help="regression against the exceptions table")
    add_format(gv)
    gv.set_defaults(func=_cmd_group_verify)

    pr = sub.add_parser("predict", help="regular TTT prediction")
    pr.add_argument("--class", dest="cls", type=int, required=True)
    pr.add_argument("--coclass", type=int, required=True)
    pr.add_argument("--defect", type=int, default=0)
    pr.add_argument("--tree", choices=["T40", "T49", "T54"])
    add_format(pr)
    pr.set_defaults(func=_cmd_predict)

    la = sub.add_parser("lattice", help="normal lattice models and diagrams")
    la.add_argument("--class", dest="cls", type=int)
    la.add_argument("--coclass", type=int)
    la.add_argument("--prime", type=int, default=3)
    la.add_argument("--figure", type=int, choices=[2, 3, 4, 5, 6])
    la.add_argument("--emit", choices=["dot", "summary"], default="summary")
    la.add_argument("--out")
    add_format(la)
    la.set_defaults(func=_cmd_lattice)

    cl = sub.add_parser("classify", help="classify field records by coclass")
    cl.add_argument("--input", required=True)
    cl.add_argument("--family", choices=list(fields.FAMILIES))
    cl.add_argument("--strict", action="store_true")
    add_format(cl)
    cl.set_defaults(func=_cmd_classify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CoclassLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
