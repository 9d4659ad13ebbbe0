"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .corpus import write_corpus
from .errors import InputError, InternalInconsistency, VerificationFailed
from .face_invariants import face_invariants
from .io import dumps_json, format_polytope, iter_polytope_files, load_config, parse_polytope
from .mirror import curve_invariants, euler_batyrev, euler_perverse, hodge_diamond, verify_mirror_pair
from .perverse_config import config_cohomology, config_euler, delta_matrix
from .polytope import is_reflexive, origin_interior


def _load(args) -> "LatticePolytope":  # noqa: F821
    P = parse_polytope(args.file)
    return P.dual if args.dual_input else P


def _diamond_text(t) -> str:
    return f"h00={t[0]} h10={t[1]} h01={t[2]} h11={t[3]}"


def cmd_check_reflexive(args):
    P = parse_polytope(args.file)
    refl = is_reflexive(P)
    data = {"file": str(args.file), "dim": P.dim, "n_vertices": P.n_vertices,
            "n_facets": len(P.facets), "origin_interior": origin_interior(P), "reflexive": refl}
    text = f"{args.file}: {'reflexive' if refl else 'not reflexive'}"
    return data, text, 0


def cmd_dual(args):
    P = parse_polytope(args.file)
    Q = P.dual
    data = {"file": str(args.file), "dual_vertices": [list(v) for v in Q.vertices]}
    return data, format_polytope(Q, comment=f"polar dual of {args.file}").rstrip("\n"), 0


def cmd_faces(args):
    P = _load(args)
    fv = P.f_vector()
    faces = [{"id": f.id, "dim": f.dim, "vertices": sorted(f.vertex_ids),
              "facets": sorted(f.containing_facet_ids)} for f in P.faces]
    lines = [f"f-vector: {' '.join(map(str, fv))}"]
    lines += [f"{f['id']:4d}  dim {f['dim']}  vertices {f['vertices']}" for f in faces]
    return {"f_vector": list(fv), "faces": faces}, "\n".join(lines), 0


def cmd_face_invariants(args):
    P = _load(args)
    rows = []
    for F in P.faces:
        if F.dim not in (1, 2):
            continue
        inv = face_invariants(P, F)
        rows.append({"id": F.id, "dim": F.dim, "s0": inv.s0, "s1": inv.s1, "s2": inv.s2,
                     "b": inv.b, "len": inv.len,
                     "vol2": None if inv.vol2 is None else str(inv.vol2)})
    head = f"{'id':>4} {'dim':>3} {'s0':>4} {'s1':>4} {'s2':>4} {'b':>4} {'len':>4} {'vol2':>6}"
    lines = [head] + [
        f"{r['id']:4d} {r['dim']:3d} {r['s0']:4d} {r['s1']:4d} {r['s2']:4d} {r['b']:4d} "
        f"{'' if r['len'] is None else r['len']:>4} {'' if r['vol2'] is None else r['vol2']:>6}"
        for r in rows]
    return {"faces": rows}, "\n".join(lines), 0


def cmd_curve_invariants(args):
    inv = curve_invariants(_load(args))
    data = {"v": inv.v, "e": inv.e, "n": inv.n, "g": inv.g, "d": inv.d,
            "e_tilde": inv.e_tilde, "b1_gamma": inv.b1_gamma}
    return data, " ".join(f"{k}={v}" for k, v in data.items()), 0


def cmd_hodge(args):
    h = hodge_diamond(_load(args)).as_tuple()
    data = {"h00": h[0], "h10": h[1], "h01": h[2], "h11": h[3]}
    return data, _diamond_text(h), 0


def cmd_euler(args):
    P = _load(args)
    ep, eb = euler_perverse(P), euler_batyrev(P)
    status = "pass" if ep == eb else "fail"
    data = {"perverse": ep, "batyrev": eb, "status": status}
    return data, f"euler perverse={ep} batyrev={eb} {status}", 0 if ep == eb else 1


def _verify_one(path: str, dual_input: bool):
    try:
        P = parse_polytope(path)
        if dual_input:
            P = P.dual
        report = verify_mirror_pair(P, raise_on_failure=False)
        return {"file": path, **report.to_dict()}
    except InputError as exc:
        return {"file": path, "status": "error", "error": str(exc)}


def _verify_text(r: dict) -> str:
    if r["status"] == "error":
        return f"{r['file']}: input error: {r['error']}"
    lines = [f"{r['file']}:",
             f"  diamond       {_diamond_text(r['diamond'])}",
             f"  dual diamond  {_diamond_text(r['dual_diamond'])}",
             f"  euler         perverse={r['euler']['perverse']} batyrev={r['euler']['batyrev']}"
             f"  (dual: {r['euler']['dual_perverse']} / {r['euler']['dual_batyrev']})"]
    for name, c in r["checks"].items():
        line = f"  {name:<18} {c['status']}  {c['lhs']} vs {c['rhs']}"
        if "note" in c:
            line += f"  [{c['note']}]"
        lines.append(line)
    lines.append(f"  overall       {r['status']}")
    return "\n".join(lines)


def cmd_verify_mirror(args):
    files = [str(p) for p in iter_polytope_files(args.paths)]
    if not files:
        raise InputError("no polytope files given")
    if len(files) > 1 and args.jobs != 1:
        with ProcessPoolExecutor(max_workers=args.jobs or None) as pool:
            reports = list(pool.map(_verify_one, files, [args.dual_input] * len(files)))
    else:
        reports = [_verify_one(f, args.dual_input) for f in files]
    reports.sort(key=lambda r: r["file"])
    if any(r["status"] == "error" for r in reports):
        code = 2
    elif all(r["status"] == "pass" for r in reports):
        code = 0
    else:
        code = 1
    text = "\n".join(_verify_text(r) for r in reports)
    if len(reports) > 1:
        n_pass = sum(r["status"] == "pass" for r in reports)
        text += f"\n{n_pass}/{len(reports)} polytopes pass"
        failed = [f"{r['file']}: {next(k for k, c in r['checks'].items() if c['status'] == 'fail')}"
                  for r in reports if r["status"] == "fail"]
        text += "".join(f"\nFAILED {f}" for f in failed)
        data = {"status": ["fail", "pass"][code == 0], "reports": reports}
    else:
        data = reports[0]
    return data, text, code


def cmd_config_hodge(args):
    cfg = load_config(args.file)
    coh = config_cohomology(cfg)
    h = coh.diamond.as_tuple()
    data = {"diamond": list(h), "h00": h[0], "h10": h[1], "h01": h[2], "h11": h[3],
            "rank_delta": coh.rank_delta, "euler": config_euler(cfg),
            "h10_split": {"genus": coh.h10_split[0], "coker_delta": coh.h10_split[1]},
            "delta": [list(r) for r in delta_matrix(cfg)]}
    text = f"({h[0]},{h[1]},{h[2]},{h[3]})"
    if args.verbose:
        text += f"\nrank delta = {coh.rank_delta}\neuler = {data['euler']}"
    return data, text, 0


def cmd_corpus(args):
    paths = write_corpus(args.directory)
    data = {"directory": str(args.directory), "files": [p.name for p in paths]}
    return data, f"wrote {len(paths)} polytope files to {args.directory}", 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", type=Path, help="write output to this file instead of stdout")

    poly = argparse.ArgumentParser(add_help=False)
    poly.add_argument("--dual-input", action="store_true",
                      help="the file holds the polar dual; dualize before computing")

    parser = argparse.ArgumentParser(
        prog="pervmirror",
        description="Perverse-curve Hodge numbers of Batyrev mirror pairs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, parents=(common,)):
        p = sub.add_parser(name, help=help, parents=list(parents))
        p.set_defaults(func=func)
        return p

    add("check-reflexive", cmd_check_reflexive, "test reflexivity").add_argument("file", type=Path)
    add("dual", cmd_dual, "polar dual polytope").add_argument("file", type=Path)
    for name, func, help in [
        ("faces", cmd_faces, "face lattice"),
        ("face-invariants", cmd_face_invariants, "lattice invariants of edges and 2-faces"),
        ("curve-invariants", cmd_curve_invariants, "v, e, n, g, d, e~, b1"),
        ("hodge", cmd_hodge, "Hodge diamond of the perverse curve"),
        ("euler", cmd_euler, "Euler number, two ways"),
    ]:
        add(name, func, help, (common, poly)).add_argument("file", type=Path)
    p = add("verify-mirror", cmd_verify_mirror, "check the mirror identities", (common, poly))
    p.add_argument("paths", nargs="+", type=Path, help="polytope files or directories")
    p.add_argument("--jobs", type=int, default=0, help="worker processes (0: all cores)")
    p = add("config-hodge", cmd_config_hodge, "diamond of a curve configuration (JSON)")
    p.add_argument("file", type=Path)
    p.add_argument("-v", "--verbose", action="store_true")
    add("corpus", cmd_corpus, "write the bundled polytope corpus").add_argument("directory", type=Path)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, text, code = args.func(args)
    except VerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    output = dumps_json(data) if args.json else text + "\n"
    if args.out:
        args.out.write_text(output)
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
