"""Command-line front end: classify, vectors, hsop, homology.

Reports are emitted human-readable on stdout and, with --json, as a JSON
document in which every potentially large integer is a decimal string.
Completed computations can be cached under --cache-dir (or
$TRICM_CACHE_DIR); cache keys are digests over the normalized edge list,
the operation and its parameters, so hits are bit-identical to a rerun.

Exit codes: 0 completed, 2 usage error, 3 input error, 4 resource cap.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__, cmcheck, complexes, graphs, homology, ideals
from .homology import FieldSpec

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_CAP = 4


class InputError(Exception):
    pass


def _parse_char(value: str) -> int:
    try:
        c = int(value)
        FieldSpec(c)
        return c
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _load_graph(args) -> tuple[graphs.Graph, dict]:
    if getattr(args, "triangular", None) is not None:
        n = args.triangular
        if n < 2:
            raise InputError(f"triangular graph requires n >= 2, got {n}")
        g = graphs.triangular(n)
        return g, {"kind": "triangular", "n": n}
    path = args.graph
    try:
        text = open(path).read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}")
    try:
        g = graphs.parse_edge_list(text)
    except ValueError as e:
        raise InputError(f"malformed edge list {path}: {e}")
    digest = hashlib.sha256(text.encode()).hexdigest()
    return g, {"kind": "file", "path": path, "sha256": digest}


def _graph_section(g: graphs.Graph) -> dict:
    section = {
        "vertices": str(g.vertex_count),
        "edges": str(len(g.edges)),
    }
    if g.labels is not None:
        section["labels"] = list(g.labels)
    return section


def _vec(entries) -> list[str]:
    return [str(v) for v in entries]


def _witnesses_json(ws) -> list[dict]:
    return [
        {"complex": w.complex_id, "kind": w.kind, "index": w.index, "value": str(w.value)}
        for w in ws
    ]


def _verdict_json(v: cmcheck.CmVerdict) -> dict:
    return {
        "char": v.field.characteristic,
        "status": v.status,
        "method": v.method,
        "witnesses": _witnesses_json(v.witnesses),
    }


def _cache_dir(args) -> str | None:
    return args.cache_dir or os.environ.get("TRICM_CACHE_DIR")


def _cache_key(input_desc: dict, g: graphs.Graph | None, op: str, params: dict) -> str:
    payload = {
        "version": __version__,
        "op": op,
        "params": params,
        "input": input_desc,
        "edges": list(g.edges) if g is not None else None,
        "vertices": g.vertex_count if g is not None else None,
    }
    blob = json.dumps(payload, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def _cache_get(cachedir: str | None, key: str) -> dict | None:
    if not cachedir:
        return None
    path = os.path.join(cachedir, key + ".json")
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        return json.load(fh)


def _cache_put(cachedir: str | None, key: str, report: dict):
    if not cachedir:
        return
    os.makedirs(cachedir, exist_ok=True)
    body = {k: v for k, v in report.items() if k != "timings"}
    path = os.path.join(cachedir, key + ".json")
    tmp = path + f".tmp.{os.getpid()}"
    with open(tmp, "w") as fh:
        json.dump(body, fh, sort_keys=True)
    os.replace(tmp, path)


def dump_report(report: dict, args):
    if getattr(args, "json", None):
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w") as fh:
                fh.write(text)


def _base_report(input_desc: dict, g: graphs.Graph) -> dict:
    mis = graphs.maximal_independent_sets(g)
    sizes = {len(s) for s in mis}
    return {
        "input": input_desc,
        "graph": _graph_section(g),
        "independence_number": str(max(sizes)),
        "unmixed": len(sizes) <= 1,
    }


def cmd_classify(args) -> int:
    g, input_desc = _load_graph(args)
    chars = args.char or [0]
    cachedir = _cache_dir(args)
    params = {"chars": sorted(set(chars)), "full": bool(args.full)}
    key = _cache_key(input_desc, g, "classify", params)
    t0 = time.monotonic()
    cached = _cache_get(cachedir, key)
    if cached is not None:
        report = cached
    else:
        report = _base_report(input_desc, g)
        c = complexes.independence_complex(g)
        f = complexes.f_vector(c)
        report["f_vector"] = _vec(f.entries)
        report["h_vector"] = _vec(complexes.h_vector(f).entries)
        verdicts = []
        for ch in sorted(set(chars)):
            field = FieldSpec(ch)
            if input_desc["kind"] == "triangular":
                v = cmcheck.classify_triangular(input_desc["n"], field, force_full=args.full)
            else:
                k = cmcheck.h_screen(c)
                if k is not None:
                    h = complexes.h_vector(f)
                    v = cmcheck.CmVerdict(
                        cmcheck.NOT_CM,
                        field,
                        (cmcheck.Witness("delta_G", "h-vector", k, h.entries[k]),),
                        "h-screen",
                    )
                else:
                    v = cmcheck.reisner_check(c, field, name="delta_G")
            verdicts.append(_verdict_json(v))
        report["verdicts"] = verdicts
        _cache_put(cachedir, key, report)
    report = dict(report)
    report["timings"] = {"total_ms": round((time.monotonic() - t0) * 1000, 3)}
    for v in report["verdicts"]:
        print(f"char {v['char']}: {v['status']} (method: {v['method']})")
        for w in v["witnesses"]:
            print(f"  witness: {w['complex']} {w['kind']} index {w['index']} value {w['value']}")
    dump_report(report, args)
    return EXIT_OK


def cmd_vectors(args) -> int:
    g, input_desc = _load_graph(args)
    if args.closed_form and input_desc["kind"] != "triangular":
        raise InputError("--closed-form applies to triangular graphs only")
    cachedir = _cache_dir(args)
    key = _cache_key(input_desc, g, "vectors", {"closed_form": bool(args.closed_form)})
    t0 = time.monotonic()
    cached = _cache_get(cachedir, key)
    if cached is not None:
        report = cached
    else:
        report = _base_report(input_desc, g)
        f = complexes.f_vector(complexes.independence_complex(g))
        if args.closed_form:
            closed = complexes.triangular_f_closed(input_desc["n"])
            if closed.entries != f.entries:
                raise AssertionError(
                    f"closed-form f-vector {closed.entries} disagrees with "
                    f"enumeration {f.entries}"
                )
        report["f_vector"] = _vec(f.entries)
        report["h_vector"] = _vec(complexes.h_vector(f).entries)
        _cache_put(cachedir, key, report)
    report = dict(report)
    report["timings"] = {"total_ms": round((time.monotonic() - t0) * 1000, 3)}
    print("f =", "(" + ",".join(report["f_vector"]) + ")")
    print("h =", "(" + ",".join(report["h_vector"]) + ")")
    dump_report(report, args)
    return EXIT_OK


_KIND_MAP = {
    "elementary": ideals.KIND_INDEPENDENT_SET_SUMS,
    "powersum": ideals.KIND_POWER_SUMS,
}


def _render_monomial(m, labels) -> str:
    if not m:
        return "1"

    def var(v):
        if labels is not None:
            lab = labels[v]
            if lab.startswith("(") and lab.endswith(")"):
                return "x(" + ",".join(lab[1:-1].split()) + ")"
            return f"x{lab}"
        return f"x{v}"

    parts = []
    for v, p in m:
        parts.append(var(v) if p == 1 else f"{var(v)}^{p}")
    return "*".join(parts)


def cmd_hsop(args) -> int:
    g, input_desc = _load_graph(args)
    kind = _KIND_MAP[args.kind]
    cachedir = _cache_dir(args)
    params = {
        "kind": kind,
        "verify": bool(args.verify),
        "char": args.char,
        "degree_cap": args.degree_cap,
    }
    key = _cache_key(input_desc, g, "hsop", params)
    t0 = time.monotonic()
    cached = _cache_get(cachedir, key)
    if cached is not None:
        report = cached
    else:
        report = _base_report(input_desc, g)
        seq = ideals.hsop(g, kind)
        forms_json = []
        for form in seq.forms:
            forms_json.append(
                {
                    "monomials": [[[v, p] for v, p in m] for m in form],
                    "rendered": " + ".join(_render_monomial(m, g.labels) for m in form),
                }
            )
        report["hsop"] = {"kind": kind, "forms": forms_json}
        if args.verify:
            field = FieldSpec(args.char)
            try:
                verdict = ideals.verify_regular(g, seq, field, degree_cap=args.degree_cap)
            except ValueError as e:
                raise InputError(str(e))
            report["hsop"]["verify"] = {
                "status": verdict.status,
                "char": args.char,
                "failing_degree": verdict.failing_degree,
                "per_degree": [
                    {"degree": d, "expected": str(e), "actual": str(a)}
                    for d, e, a in verdict.per_degree
                ],
            }
        _cache_put(cachedir, key, report)
    report = dict(report)
    report["timings"] = {"total_ms": round((time.monotonic() - t0) * 1000, 3)}
    for k, form in enumerate(report["hsop"]["forms"], 1):
        print(f"F_{k} = {form['rendered']}")
    rc = EXIT_OK
    if "verify" in report["hsop"]:
        status = report["hsop"]["verify"]["status"]
        print(f"regularity over char {args.char}: {status}")
        if status == ideals.CAP_REACHED:
            rc = EXIT_CAP
    dump_report(report, args)
    return rc


def cmd_homology(args) -> int:
    if args.complex is not None:
        try:
            text = open(args.complex).read()
        except OSError as e:
            raise InputError(f"cannot read {args.complex}: {e}")
        try:
            c = complexes.deserialize(text)
        except ValueError as e:
            raise InputError(f"malformed complex file: {e}")
        g = None
        input_desc = {
            "kind": "complex-file",
            "path": args.complex,
            "sha256": hashlib.sha256(text.encode()).hexdigest(),
        }
        report = {"input": input_desc}
    else:
        g, input_desc = _load_graph(args)
        c = complexes.independence_complex(g)
        report = _base_report(input_desc, g)
    chars = args.char or [0]
    cachedir = _cache_dir(args)
    key = _cache_key(input_desc, g, "homology", {"chars": sorted(set(chars))})
    t0 = time.monotonic()
    cached = _cache_get(cachedir, key)
    if cached is not None:
        report = cached
    else:
        betti = []
        for ch in sorted(set(chars)):
            table = homology.reduced_betti_table(c, FieldSpec(ch))
            betti.append({"char": ch, "dims": _vec(table.dims)})
        report["betti"] = betti
        _cache_put(cachedir, key, report)
    report = dict(report)
    report["timings"] = {"total_ms": round((time.monotonic() - t0) * 1000, 3)}
    for entry in report["betti"]:
        dims = ",".join(entry["dims"])
        print(f"char {entry['char']}: reduced Betti dims (i = -1..dim) = ({dims})")
    dump_report(report, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricm",
        description="Cohen-Macaulayness of graph independence complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p, with_complex=False):
        grp = p.add_mutually_exclusive_group(required=True)
        grp.add_argument("--triangular", type=int, metavar="N")
        grp.add_argument("--graph", metavar="FILE")
        if with_complex:
            grp.add_argument("--complex", metavar="FILE")
        p.add_argument("--json", metavar="PATH", help="write JSON report (- for stdout)")
        p.add_argument("--cache-dir", metavar="DIR", default=None)

    p = sub.add_parser("classify", help="decide the Cohen-Macaulay property")
    add_input(p)
    p.add_argument("--char", type=_parse_char, action="append")
    p.add_argument("--full", action="store_true", help="force the full Reisner check")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("vectors", help="f- and h-vector of the independence complex")
    add_input(p)
    p.add_argument("--closed-form", action="store_true")
    p.set_defaults(func=cmd_vectors)

    p = sub.add_parser("hsop", help="homogeneous system of parameters")
    add_input(p)
    p.add_argument("--kind", choices=sorted(_KIND_MAP), required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--char", type=_parse_char, default=0)
    p.add_argument("--degree-cap", type=int, default=None)
    p.set_defaults(func=cmd_hsop)

    p = sub.add_parser("homology", help="reduced Betti table")
    add_input(p, with_complex=True)
    p.add_argument("--char", type=_parse_char, action="append")
    p.set_defaults(func=cmd_homology)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rc = args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        rc = EXIT_INPUT
    if argv is None:
        sys.exit(rc)
    return rc


if __name__ == "__main__":
    main()
