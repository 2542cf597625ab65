"""Command-line interface.

Exit codes: 0 on success (and for verify: certified), 1 on a failed check or
an uncertified input, 2 on usage errors.  Rationals stay exact ("p/q") in
every output; nothing is ever rounded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import SimplotopeSpec
from .counting import QQuery, q_by_enumeration, q_by_generating_function, q_count
from .fbounds import DEFAULT_MEMO, FKey, VTable, f_bound, load_cube_caps, v_max
from .lptable import bounds_table
from .standard import standard_size, standard_triangulation
from .tfiles import (
    TriangulationFileError,
    candidate_to_dict,
    load_candidate,
    save_candidate,
)
from .trisquare import construction_stages, lower_bound_10_argument, minimal_triangulation_10
from .verifier import TriangulationCandidate, verify


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        print(f"error: {what} must be comma-separated integers, got {text!r}", file=sys.stderr)
        raise SystemExit(2)


def _vtable(args) -> VTable:
    caps = load_cube_caps(args.config) if getattr(args, "config", None) else None
    return VTable(caps) if caps is not None else VTable()


def _load_memo(path) -> None:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        return
    DEFAULT_MEMO.load({tuple(int(x) for x in key.split(",")): val for key, val in doc.items()})


def _save_memo(path) -> None:
    doc = {",".join(str(x) for x in key): val for key, val in DEFAULT_MEMO.items()}
    with open(path, "w") as fh:
        json.dump(doc, fh, sort_keys=True)


def cmd_bounds(args) -> int:
    vtable = _vtable(args)
    if args.memo_cache:
        _load_memo(args.memo_cache)
    table = bounds_table(args.max_s, args.max_t, args.dim_cap, vtable=vtable)
    if args.memo_cache:
        _save_memo(args.memo_cache)
    missing = [sk for sk in table.skipped if sk[2] != "beyond dimension cap"]
    if args.format == "json":
        sys.stdout.write(table.to_json())
    else:
        sys.stdout.write(table.to_csv())
    if missing:
        for s, t, reason in missing:
            print(f"error: cell ({s},{t}): {reason}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    try:
        cand = load_candidate(args.input)
    except (TriangulationFileError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = verify(cand, jobs=args.jobs)
    if args.format == "json":
        payload = {
            "factors": list(cand.spec.factors),
            "n_simplices": len(report.classes),
            "classes": list(report.classes),
            "total_class": report.total_class,
            "polytope_class": report.polytope_class,
            "classes_ok": report.classes_ok,
            "disjoint_ok": report.disjoint_ok,
            "face_to_face_ok": report.face_to_face_ok,
            "certified": report.certified,
            "adjacency": [list(e) for e in report.adjacency],
            "diagnostics": list(report.diagnostics),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"simplotope {cand.spec.factors}: {len(report.classes)} simplices")
        print(f"classes: {list(report.classes)} (total {report.total_class}, "
              f"polytope {report.polytope_class})")
        print(f"interior-disjoint: {report.disjoint_ok}  face-to-face: {report.face_to_face_ok}")
        for d in report.diagnostics:
            print(f"  - {d}")
        print("CERTIFIED" if report.certified else "NOT CERTIFIED")
    return 0 if report.certified else 1


def cmd_standard(args) -> int:
    spec = SimplotopeSpec(_parse_int_list(args.spec, "--spec"))
    sims = standard_triangulation(spec)
    cand = TriangulationCandidate(spec, tuple(sims))
    meta = {"kind": "standard triangulation", "size": len(sims)}
    if args.out:
        save_candidate(cand, args.out, coords=args.coords, metadata=meta)
    else:
        doc = candidate_to_dict(cand, coords=args.coords, metadata=meta)
        print(json.dumps(doc, indent=2, sort_keys=True))
    print(f"{len(sims)} simplices (size formula: {standard_size(spec)})", file=sys.stderr)
    return 0


def cmd_vmax(args) -> int:
    if args.spec:
        pair = _parse_int_list(args.spec, "--spec")
        if len(pair) != 2:
            print("error: vmax --spec takes exactly two counts, e.g. 1,2", file=sys.stderr)
            return 2
        s, t = pair
    else:
        s, t = args.s, args.t
    entry = v_max(s, t, vtable=_vtable(args))
    print(f"{entry.value}")
    print(f"V({s},{t}) = {entry.value} ({entry.provenance})", file=sys.stderr)
    return 0


def cmd_q(args) -> int:
    query = QQuery(args.s, args.t, args.sp, args.tp)
    value = q_count(query)
    print(value)
    if args.check:
        gen = q_by_generating_function(query)
        checks = [("generating-function", gen)]
        if args.s + 2 * args.t <= 8:
            checks.append(("enumeration", q_by_enumeration(query)))
        bad = [(name, got) for name, got in checks if got != value]
        for name, got in checks:
            print(f"  {name}: {got}", file=sys.stderr)
        if bad:
            print("error: oracles disagree", file=sys.stderr)
            return 1
    return 0


def cmd_fbound(args) -> int:
    key = FKey(args.s, args.t, args.c, args.sp, args.tp, args.cp)
    print(f_bound(key, vtable=_vtable(args)))
    return 0


def cmd_case(args) -> int:
    if args.which != "tri-square":
        print(f"error: unknown case {args.which!r}", file=sys.stderr)
        return 2
    if args.check == "all":
        report = lower_bound_10_argument(verbose=True)
        print(f"lower bound for (s,t)=(2,1): {report.lower_bound}, "
              f"achieved by a triangulation of size {report.achieved_by}")
        if not report.ok:
            return 1
        t12, t11, t10 = construction_stages()
        for name, cand in [("12", t12), ("11", t11), ("10", t10)]:
            rep = verify(cand, jobs=args.jobs)
            print(f"  construction stage {name}: "
                  f"{'certified' if rep.certified else 'NOT CERTIFIED'}")
            if not rep.certified:
                return 1
        return 0
    rep = verify(minimal_triangulation_10(), jobs=args.jobs)
    print(f"ten-simplex triangulation: {'certified' if rep.certified else 'NOT CERTIFIED'}; "
          f"classes {sorted(rep.classes)}")
    return 0 if rep.certified else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplotope",
        description="Exact lower bounds and triangulation verification for products of simplices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="emit the lower-bound table")
    p.add_argument("--max-s", type=int, default=3)
    p.add_argument("--max-t", type=int, default=1)
    p.add_argument("--dim-cap", type=int, default=6)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--config", help="cube-cap configuration file")
    p.add_argument("--memo-cache", help="JSON file persisting the F memo between runs")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="certify a triangulation file")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("standard", help="write the standard triangulation")
    p.add_argument("--spec", required=True, help="factor dimensions, e.g. 1,1,2")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--coords", choices=["standard", "reduced"], default="standard")
    p.set_defaults(func=cmd_standard)

    p = sub.add_parser("vmax", help="largest simplex class V(s,t)")
    p.add_argument("--spec", help="segment,triangle counts, e.g. 1,2")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--config", help="cube-cap configuration file")
    p.set_defaults(func=cmd_vmax)

    p = sub.add_parser("q", help="count (s',t') faces of the (s,t) product")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--sp", type=int, required=True)
    p.add_argument("--tp", type=int, required=True)
    p.add_argument("--check", action="store_true", help="cross-check against the oracles")
    p.set_defaults(func=cmd_q)

    p = sub.add_parser("fbound", help="exterior-face count bound F(s,t,c,s',t',c')")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--sp", type=int, required=True)
    p.add_argument("--tp", type=int, required=True)
    p.add_argument("--cp", type=int, required=True)
    p.add_argument("--config", help="cube-cap configuration file")
    p.set_defaults(func=cmd_fbound)

    p = sub.add_parser("case", help="run a case study")
    p.add_argument("which", choices=["tri-square"])
    p.add_argument("--check", choices=["fast", "all"], default="fast")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_case)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "vmax" and not args.spec and (args.s is None or args.t is None):
        print("error: vmax needs --spec s,t or both --s and --t", file=sys.stderr)
        return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
