"""Compare the numba and numpy kernel backends on the bundled corpus.

    python benchmarks/bench_kernels.py [--repeat N] [--limit K]

Times the supporting-hyperplane search on every corpus polytope and on its
polar dual, the facet-slack evaluation on all lattice points of the bounding
box, and the full mirror verification, once per backend. The two backends must
return identical results; the script exits non-zero otherwise.
"""

from __future__ import annotations

import argparse
import sys
import time
from itertools import product

from pervmirror import _kernels
from pervmirror.corpus import corpus_vertex_lists
from pervmirror.mirror import clear_cache, verify_mirror_pair
from pervmirror.polytope import from_vertices


def _best_of(repeat, fn):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def _box_points(verts):
    lo = [min(c) for c in zip(*verts)]
    hi = [max(c) for c in zip(*verts)]
    return list(product(*(range(a, b + 1) for a, b in zip(lo, hi))))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="best-of repetitions per timing")
    ap.add_argument("--limit", type=int, default=0, help="only the first K corpus polytopes")
    args = ap.parse_args(argv)

    if not _kernels.HAVE_NUMBA:
        print("numba is not importable; nothing to compare")
        return 1

    vertex_lists = list(corpus_vertex_lists().values())
    if args.limit:
        vertex_lists = vertex_lists[: args.limit]
    polys = [from_vertices(v) for v in vertex_lists]
    point_sets = [list(v) for v in vertex_lists] + [list(P.dual.vertices) for P in polys]
    boxes = [(_box_points(P.vertices), [n for n, _ in P.facets], [lv for _, lv in P.facets])
             for P in polys]

    # compile once outside the timings
    _kernels.supporting_hyperplanes(point_sets[0], use_numba=True)
    _kernels.facet_slacks(*boxes[0], use_numba=True)

    rows, results = [], {}
    for name, flag in (("numba", True), ("numpy", False)):
        t_hyp, hyp = _best_of(args.repeat, lambda: [
            _kernels.supporting_hyperplanes(p, use_numba=flag) for p in point_sets])
        t_sl, sl = _best_of(args.repeat, lambda: [
            _kernels.facet_slacks(*b, use_numba=flag) for b in boxes])

        def pipeline():
            clear_cache()
            saved = _kernels.USE_NUMBA
            _kernels.USE_NUMBA = flag
            try:
                return [verify_mirror_pair(from_vertices(v)).diamond.as_tuple() for v in vertex_lists]
            finally:
                _kernels.USE_NUMBA = saved

        t_pipe, diamonds = _best_of(1, pipeline)
        rows.append((name, t_hyp, t_sl, t_pipe))
        results[name] = (hyp, [list(map(list, s)) for s in sl], diamonds)

    n_pts = sum(len(b[0]) for b in boxes)
    print(f"{len(polys)} polytopes, {len(point_sets)} hyperplane searches, "
          f"{n_pts} slack rows, best of {args.repeat}")
    print(f"{'backend':<8} {'hyperplanes':>12} {'slacks':>10} {'verify':>10}")
    for name, a, b, c in rows:
        print(f"{name:<8} {a:11.3f}s {b:9.3f}s {c:9.3f}s")
    (_, a1, b1, c1), (_, a2, b2, c2) = rows
    print(f"{'speedup':<8} {a2 / a1:11.1f}x {b2 / b1:9.1f}x {c2 / c1:9.1f}x")

    if results["numba"] != results["numpy"]:
        print("MISMATCH between backends")
        return 1
    print("backends agree")
    return 0


if __name__ == "__main__":
    sys.exit(main())
