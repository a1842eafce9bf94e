"""Command-line surface: generation, classification, search, assembly,
feasibility, isomorphism, and catalog census.

Every analysis command emits a JSON report with a stable schema
(version field ``schema``); identical inputs give byte-identical
reports except for the trailing ``timing_ms`` field.  Graph-producing
commands (gen, construct, canon) write raw graph6 lines to stdout so
they can be piped into the analysis commands; pass ``-`` as a file name
to read graph6 from stdin.

Exit codes: 0 success, 1 domain error (reported in the JSON), 2 usage.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import assembly, coclique, galois, graphcore, iso, recognize, theory
from .errors import SrgddgError

SCHEMA = "srgddg-report/1"


class _Usage(Exception):
    pass


def _read_lines(path: str) -> tuple[bytes, list[bytes]]:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return data, data.splitlines()


def iter_graph_lines(path: str):
    """Yield (lineno, line) pairs from a graph6 file, one line at a time.

    Blank lines and a leading '>>graph6<<' header are tolerated and
    skipped; the file is never held in memory as a whole.
    """
    fh = sys.stdin.buffer if path == "-" else open(path, "rb")
    try:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line.startswith(b">>graph6<<"):
                line = line[10:]
            if line:
                yield lineno, line
    finally:
        if path != "-":
            fh.close()


def read_graph_file(path: str, keep_going: bool = False):
    """Parse a line-oriented graph6 file.

    Returns (graphs, diagnostics, sha256).  Parse errors carry 1-based
    line numbers and abort unless keep_going is set.
    """
    data, _ = _read_lines(path)
    digest = hashlib.sha256(data).hexdigest()
    graphs = []
    diags = []
    for _lineno, g in _decode_lines(data, keep_going, diags):
        graphs.append(g)
    return graphs, diags, digest


def _decode_lines(data: bytes, keep_going: bool, diags: list):
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if line.startswith(b">>graph6<<"):
            line = line[10:]
        if not line:
            continue
        try:
            yield lineno, graphcore.decode_graph6(line)
        except SrgddgError as exc:
            if not keep_going:
                raise SrgddgError(f"line {lineno}: {exc}") from None
            diags.append(f"line {lineno}: {exc}")


def write_graph_file(path: str, graphs) -> None:
    out = b"\n".join(graphcore.encode_graph6(g) for g in graphs) + b"\n"
    if path == "-":
        sys.stdout.buffer.write(out)
    else:
        with open(path, "wb") as fh:
            fh.write(out)


def _report(command: str, inputs: dict, results: dict, diagnostics, t0: float) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "inputs": inputs,
        "results": results,
        "diagnostics": list(diagnostics),
        "timing_ms": round((time.monotonic() - t0) * 1000, 3),
    }


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _budget_from_env(args) -> int:
    env = os.environ.get("SRGDDG_BUDGET_NODES")
    if getattr(args, "budget_nodes", None):
        return args.budget_nodes
    if env:
        return int(env)
    return coclique.DEFAULT_NODE_BUDGET


# -- subcommand bodies ---------------------------------------------------


def _cmd_gen(args, t0):
    name = args.name
    if name == "sp-complement":
        f = galois.field_by_order(args.q)
        g = galois.symplectic_complement(args.d, f)
    elif name == "triangular":
        g = graphcore.triangular(args.m)
    elif name == "grid":
        g = graphcore.grid(args.rows, args.cols)
    elif name in ("complete", "edgeless", "cycle", "path"):
        g = graphcore.named(name, args.n)
    elif name == "petersen":
        g = graphcore.petersen()
    else:
        raise _Usage(f"unknown generator {name!r}")
    if args.json:
        _emit(_report(
            "gen", {"name": name}, {"order": g.order, "graph6": graphcore.encode_graph6(g).decode()},
            [], t0,
        ))
    else:
        sys.stdout.buffer.write(graphcore.encode_graph6(g) + b"\n")
    return 0


def _classification(g):
    out = {"order": g.order, "edges": g.num_edges()}
    k = g.regular_degree()
    out["regular"] = k is not None
    if k is not None:
        out["degree"] = k
    sp = recognize.srg_params(g)
    if sp:
        out["srg"] = {
            "v": sp.v, "k": sp.k, "lambda": sp.lam, "mu": sp.mu,
            "r": sp.r, "s": sp.s, "f": sp.f, "g": sp.g,
            "coclique_bound": str(sp.c), "primitive": sp.primitive,
        }
    else:
        out["srg"] = None
        out["srg_reason"] = sp.reason
    dz = recognize.deza_params(g)
    out["deza"] = {"v": dz.v, "k": dz.k, "b": dz.b, "a": dz.a} if dz else None
    wits = recognize.ddg_recognize(g)
    if wits:
        out["ddg"] = [
            {
                "V": dp.V, "K": dp.K, "lambda1": dp.lambda1, "lambda2": dp.lambda2,
                "m": dp.m, "n": dp.n, "proper": dp.proper,
                "classes": [graphcore.set_of(cl) for cl in part.classes],
            }
            for dp, part in wits
        ]
    else:
        out["ddg"] = None
        out["ddg_reason"] = wits.reason
    return out


def _cmd_recognize(args, t0):
    graphs, diags, digest = read_graph_file(args.file, args.keep_going)
    results = {"graphs": [_classification(g) for g in graphs]}
    _emit(_report("recognize", {"file": args.file, "sha256": digest}, results, diags, t0))
    return 0


def _cmd_spectrum(args, t0):
    from . import exact

    graphs, diags, digest = read_graph_file(args.file, args.keep_going)
    rows = []
    for g in graphs:
        sp = exact.integral_spectrum(graphcore.adjacency_matrix(g))
        if sp:
            rows.append({"integral": True, "spectrum": [list(p) for p in sp.pairs]})
        else:
            rows.append({
                "integral": False,
                "integer_roots": [list(p) for p in sp.found],
                "residual_degree": sp.residual.degree,
            })
    _emit(_report("spectrum", {"file": args.file, "sha256": digest}, {"graphs": rows}, diags, t0))
    return 0


def _cmd_coclique(args, t0):
    graphs, diags, digest = read_graph_file(args.file, args.keep_going)
    budget = _budget_from_env(args)
    rows = []
    for g in graphs:
        if args.mode == "maximum":
            best = coclique.max_independent_set(g, coclique.CocliqueQuery(mode="maximum", node_budget=budget))
            rows.append({"mode": "maximum", "size": best.bit_count(), "set": graphcore.set_of(best)})
            continue
        if args.target:
            found = coclique.cocliques_of_size(g, args.target, mode=args.mode, node_budget=budget)
        else:
            sp = recognize.srg_params(g)
            if not sp:
                rows.append({"error": f"not strongly regular ({sp.reason}); pass --target"})
                continue
            found = coclique.hoffman_cocliques(
                g, sp, coclique.CocliqueQuery(mode=args.mode, node_budget=budget)
            )
        rows.append({
            "mode": args.mode,
            "count": len(found),
            "cocliques": [graphcore.set_of(c) for c in found],
        })
    _emit(_report("coclique", {"file": args.file, "sha256": digest}, {"graphs": rows}, diags, t0))
    return 0


def _decomposition_json(dec: assembly.Decomposition) -> dict:
    return {
        "coclique": graphcore.set_of(dec.coclique),
        "classes": [graphcore.set_of(cl) for cl in dec.partition.classes],
        "ddg": {
            "V": dec.ddg_params.V, "K": dec.ddg_params.K,
            "lambda1": dec.ddg_params.lambda1, "lambda2": dec.ddg_params.lambda2,
            "m": dec.ddg_params.m, "n": dec.ddg_params.n,
            "graph6": graphcore.encode_graph6(dec.ddg).decode(),
        },
        "design": {
            "v": dec.design.v_pts,
            "k": dec.design.k_blk,
            "lambda": dec.design.lam,
            "blocks": [dec.design.block_points(i) for i in range(len(dec.design.blocks))],
        },
        "phi": list(dec.phi),
        "n": dec.n,
        "s": dec.s,
    }


def _cmd_decompose(args, t0):
    graphs, diags, digest = read_graph_file(args.file, args.keep_going)
    budget = _budget_from_env(args)
    mode = "all" if args.all else "first"
    rows = []
    for g in graphs:
        try:
            decs = assembly.decompose(g, coclique.CocliqueQuery(mode=mode, node_budget=budget))
        except assembly.AssemblyError as exc:
            rows.append({"error": str(exc)})
            continue
        rows.append({
            "count": len(decs),
            "decompositions": [_decomposition_json(d) for d in decs],
        })
    _emit(_report("decompose", {"file": args.file, "sha256": digest}, {"graphs": rows}, diags, t0))
    return 0


def _cmd_construct(args, t0):
    graphs, _, _ = read_graph_file(args.ddg)
    if len(graphs) != 1:
        raise _Usage("construct needs exactly one graph in --ddg")
    ddg = graphs[0]
    with open(args.partition, "r", encoding="utf-8") as fh:
        pdata = json.load(fh)
    part = recognize.CanonicalPartition(
        tuple(graphcore.mask_of(cl) for cl in pdata["classes"])
    )
    with open(args.design, "r", encoding="utf-8") as fh:
        ddata = json.load(fh)
    from .designs import design_from_blocks

    design = design_from_blocks(ddata["blocks"], ddata.get("v"))
    phi = tuple(int(x) for x in args.phi.split(","))
    built = assembly.attach_coclique(ddg, part, design, phi)
    if args.json:
        sp = recognize.srg_params(built)
        _emit(_report(
            "construct",
            {"ddg": args.ddg, "partition": args.partition, "design": args.design},
            {
                "graph6": graphcore.encode_graph6(built).decode(),
                "srg": list(sp.tuple4),
            },
            [], t0,
        ))
    else:
        sys.stdout.buffer.write(graphcore.encode_graph6(built) + b"\n")
    return 0


def _cmd_feasible(args, t0):
    if args.s is not None:
        s_min = s_max = args.s
    elif args.s_range:
        lo, _, hi = args.s_range.partition("..")
        s_min, s_max = int(lo), int(hi)
    else:
        raise _Usage("feasible needs --s or --s-range")
    entries = theory.enumerate_feasible(s_min, s_max, args.n_max, with_brc=args.brc)
    rows = []
    for e in entries:
        fam = e.family
        rows.append({
            "n": e.n,
            "s": e.s,
            "m": fam.m,
            "srg": list(fam.srg.tuple4),
            "ddg": list(fam.ddg.tuple6),
            "design": list(fam.design_params),
            "handshake_ok": e.handshake_ok,
            "prime_power": (
                {"q": e.prime_power.q, "d": e.prime_power.d}
                if e.prime_power else None
            ),
            "brc_ok": e.brc_ok,
        })
    _emit(_report(
        "feasible",
        {"s_min": s_min, "s_max": s_max, "n_max": args.n_max},
        {"families": rows},
        [], t0,
    ))
    return 0


def _cmd_iso(args, t0):
    ga, _, da = read_graph_file(args.a)
    gb, _, db = read_graph_file(args.b)
    if len(ga) != 1 or len(gb) != 1:
        raise _Usage("iso compares exactly one graph per file")
    ans = iso.are_isomorphic(ga[0], gb[0])
    _emit(_report(
        "iso", {"a": args.a, "sha256_a": da, "b": args.b, "sha256_b": db},
        {"isomorphic": ans}, [], t0,
    ))
    return 0


def _cmd_canon(args, t0):
    graphs, diags, digest = read_graph_file(args.file, args.keep_going)
    for g in graphs:
        sys.stdout.buffer.write(iso.canonical_form(g).certificate + b"\n")
    return 0


def _census_one(g):
    try:
        decs = assembly.decompose(g)
    except assembly.AssemblyError as exc:
        return {"error": str(exc)}, []
    certs = sorted({iso.canonical_form(d.ddg).certificate.decode() for d in decs})
    return {"decompositions": len(decs)}, certs


def _census_decode(args, diags, hasher):
    for lineno, line in iter_graph_lines(args.file):
        hasher.update(line + b"\n")
        try:
            yield graphcore.decode_graph6(line)
        except SrgddgError as exc:
            if not args.keep_going:
                raise SrgddgError(f"line {lineno}: {exc}") from None
            diags.append(f"line {lineno}: {exc}")


def _cmd_census(args, t0):
    # catalogs are processed one graph at a time with bounded memory;
    # only counters and certificates accumulate
    diags: list[str] = []
    hasher = hashlib.sha256()
    per_graph = []
    all_certs: set[str] = set()
    total = 0
    decomposable = 0
    stream = _census_decode(args, diags, hasher)
    if args.threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            outcomes = pool.map(_census_one, stream)
            for row, certs in outcomes:
                total += 1
                per_graph.append(row)
                if row.get("decompositions"):
                    decomposable += 1
                all_certs.update(certs)
    else:
        for g in stream:
            row, certs = _census_one(g)
            total += 1
            per_graph.append(row)
            if row.get("decompositions"):
                decomposable += 1
            all_certs.update(certs)
    results = {
        "graphs": total,
        "decomposable": decomposable,
        "distinct_ddg_certificates": len(all_certs),
        "per_graph": per_graph,
    }
    _emit(_report(
        "census", {"file": args.file, "sha256_lines": hasher.hexdigest()}, results, diags, t0
    ))
    return 0


# -- parser ---------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="srgddg",
        description="strongly regular graphs <-> Hoffman coclique + divisible design graph",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="emit a generator graph as graph6")
    g.add_argument("name", choices=[
        "petersen", "triangular", "grid", "complete", "edgeless", "cycle",
        "path", "sp-complement",
    ])
    g.add_argument("--d", type=int, default=2, help="half-rank for sp-complement")
    g.add_argument("--q", type=int, default=2, help="field order for sp-complement")
    g.add_argument("--m", type=int, default=5, help="size for triangular")
    g.add_argument("--rows", type=int, default=3)
    g.add_argument("--cols", type=int, default=3)
    g.add_argument("--n", type=int, default=5, help="order for complete/edgeless/cycle/path")
    g.add_argument("--json", action="store_true")
    g.set_defaults(fn=_cmd_gen)

    for name, fn in (("recognize", _cmd_recognize), ("spectrum", _cmd_spectrum)):
        p = sub.add_parser(name, help=f"{name} graphs from a graph6 file")
        p.add_argument("file")
        p.add_argument("--keep-going", action="store_true")
        p.set_defaults(fn=fn)

    p = sub.add_parser("coclique", help="coclique search")
    p.add_argument("file")
    p.add_argument("--mode", choices=["first", "all", "maximum"], default="all")
    p.add_argument("--target", type=int, default=0, help="exact size (default: Hoffman bound)")
    p.add_argument("--budget-nodes", type=int, default=0)
    p.add_argument("--keep-going", action="store_true")
    p.set_defaults(fn=_cmd_coclique)

    p = sub.add_parser("decompose", help="coclique + divisible design splits")
    p.add_argument("file")
    p.add_argument("--all", action="store_true", default=True)
    p.add_argument("--first", dest="all", action="store_false")
    p.add_argument("--budget-nodes", type=int, default=0)
    p.add_argument("--keep-going", action="store_true")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("construct", help="build the SRG from DDG + design + phi")
    p.add_argument("--ddg", required=True, help="graph6 file with the divisible design graph")
    p.add_argument("--partition", required=True, help='JSON {"classes": [[...], ...]}')
    p.add_argument("--design", required=True, help='JSON {"v": int, "blocks": [[...], ...]}')
    p.add_argument("--phi", required=True, help="comma-separated block index per class")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("feasible", help="enumerate feasible (n, s) families")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--s-range", default=None, help="e.g. --s-range=-12..-2")
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--brc", action="store_true", help="annotate with Bruck-Ryser-Chowla (advisory)")
    p.add_argument("--json", action="store_true")  # reports are always JSON
    p.set_defaults(fn=_cmd_feasible)

    p = sub.add_parser("iso", help="isomorphism test")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=_cmd_iso)

    p = sub.add_parser("canon", help="canonical graph6 form")
    p.add_argument("file")
    p.add_argument("--keep-going", action="store_true")
    p.set_defaults(fn=_cmd_canon)

    p = sub.add_parser("census", help="decompose a catalog and count distinct DDGs")
    p.add_argument("file")
    p.add_argument("--keep-going", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget-nodes", type=int, default=0)
    p.set_defaults(fn=_cmd_census)

    return ap


def run(argv: list[str]) -> int:
    """Entry point; returns the exit code instead of calling sys.exit."""
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    t0 = time.monotonic()
    try:
        return args.fn(args, t0)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (SrgddgError, assembly.AssemblyError, OSError, ValueError) as exc:
        _emit(_report(args.cmd, {}, {"error": str(exc)}, [], t0))
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
