"""Hot integer kernels: supporting-hyperplane search and facet slacks.

Two interchangeable implementations are provided. The numba one runs compiled
int64 loops; the numpy one is vectorised and, with ``dtype=object``, exact for
arbitrarily large coordinates. Set ``PERVMIRROR_NO_NUMBA=1`` to force the numpy
path. Coordinates larger than ``INT64_SAFE_COORD`` always use object arrays,
since the int64 cofactor products could otherwise overflow.
"""

from __future__ import annotations

import os
from itertools import combinations

import numpy as np

# |coord| <= 2**12 keeps 3x3 cofactors of differences (< 6 * (2**13)**3) and the
# subsequent dot products (< 4 * 2**42 * 2**12) far inside int64.
INT64_SAFE_COORD = 1 << 12

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("PERVMIRROR_NO_NUMBA", "").strip().lower() not in {
    "1", "true", "yes"}


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numpy path


def _minor_dets(D):
    """Signed cofactor normals for a stack of (d-1) x d difference matrices."""
    m, k, d = D.shape
    cols = []
    for j in range(d):
        keep = [c for c in range(d) if c != j]
        S = D[:, :, keep]
        if k == 1:
            det = S[:, 0, 0]
        elif k == 2:
            det = S[:, 0, 0] * S[:, 1, 1] - S[:, 0, 1] * S[:, 1, 0]
        else:
            det = (S[:, 0, 0] * (S[:, 1, 1] * S[:, 2, 2] - S[:, 1, 2] * S[:, 2, 1])
                   - S[:, 0, 1] * (S[:, 1, 0] * S[:, 2, 2] - S[:, 1, 2] * S[:, 2, 0])
                   + S[:, 0, 2] * (S[:, 1, 0] * S[:, 2, 1] - S[:, 1, 1] * S[:, 2, 0]))
        cols.append(det if j % 2 == 0 else -det)
    return np.stack(cols, axis=1)


def _supporting_numpy(V, combos):
    D = V[combos[:, 1:]] - V[combos[:, :1]]
    normals = _minor_dets(D)
    levels = np.einsum("ij,ij->i", normals, V[combos[:, 0]]) if V.dtype != object else \
        (normals * V[combos[:, 0]]).sum(axis=1)
    nonzero = (normals != 0).any(axis=1)
    normals, levels = normals[nonzero], levels[nonzero]
    slack = normals.dot(V.T) - levels[:, None]
    ge = (slack >= 0).all(axis=1)
    le = (slack <= 0).all(axis=1)
    normals = np.where(le[:, None] & ~ge[:, None], -normals, normals)
    levels = np.where(le & ~ge, -levels, levels)
    keep = ge | le
    normals, levels = normals[keep], levels[keep]
    if len(normals):
        g = np.gcd.reduce(np.abs(normals.astype(np.int64) if normals.dtype != object
                                 else normals), axis=1)
        normals = normals // g[:, None]
        levels = levels // g
    return normals, levels


def _slacks_numpy(points, normals, levels):
    return points.dot(normals.T) - levels[None, :]


# ---------------------------------------------------------------------------
# numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def _det_small(S, k):
        if k == 1:
            return S[0, 0]
        if k == 2:
            return S[0, 0] * S[1, 1] - S[0, 1] * S[1, 0]
        return (S[0, 0] * (S[1, 1] * S[2, 2] - S[1, 2] * S[2, 1])
                - S[0, 1] * (S[1, 0] * S[2, 2] - S[1, 2] * S[2, 0])
                + S[0, 2] * (S[1, 0] * S[2, 1] - S[1, 1] * S[2, 0]))

    @njit(cache=True)
    def _gcd(a, b):
        a = abs(a)
        b = abs(b)
        while b:
            a, b = b, a % b
        return a

    @njit(cache=True)
    def _supporting_numba(V, combos):
        m = combos.shape[0]
        d = V.shape[1]
        k = d - 1
        npts = V.shape[0]
        normals = np.zeros((m, d), dtype=np.int64)
        levels = np.zeros(m, dtype=np.int64)
        keep = np.zeros(m, dtype=np.bool_)
        D = np.zeros((k, d), dtype=np.int64)
        S = np.zeros((k, k), dtype=np.int64)
        nrm = np.zeros(d, dtype=np.int64)
        for t in range(m):
            base = combos[t, 0]
            for r in range(k):
                for c in range(d):
                    D[r, c] = V[combos[t, r + 1], c] - V[base, c]
            allzero = True
            for j in range(d):
                for r in range(k):
                    cc = 0
                    for c in range(d):
                        if c != j:
                            S[r, cc] = D[r, c]
                            cc += 1
                det = _det_small(S, k)
                nrm[j] = det if j % 2 == 0 else -det
                if nrm[j] != 0:
                    allzero = False
            if allzero:
                continue
            lev = 0
            for c in range(d):
                lev += nrm[c] * V[base, c]
            ge = True
            le = True
            for p in range(npts):
                s = -lev
                for c in range(d):
                    s += nrm[c] * V[p, c]
                if s < 0:
                    ge = False
                elif s > 0:
                    le = False
                if not ge and not le:
                    break
            if not (ge or le):
                continue
            sgn = 1 if ge else -1
            g = 0
            for c in range(d):
                g = _gcd(g, nrm[c])
            for c in range(d):
                normals[t, c] = sgn * nrm[c] // g
            levels[t] = sgn * lev // g
            keep[t] = True
        return normals[keep], levels[keep]

    @njit(cache=True)
    def _slacks_numba(points, normals, levels):
        n = points.shape[0]
        f = normals.shape[0]
        d = points.shape[1]
        out = np.empty((n, f), dtype=np.int64)
        for i in range(n):
            for j in range(f):
                s = -levels[j]
                for c in range(d):
                    s += points[i, c] * normals[j, c]
                out[i, j] = s
        return out


# ---------------------------------------------------------------------------
# dispatch


def _array(rows, big: bool):
    if big:
        return np.array([[int(x) for x in r] for r in rows], dtype=object)
    return np.array(rows, dtype=np.int64)


def _is_big(*arrays) -> bool:
    for rows in arrays:
        for r in rows:
            for x in r:
                if abs(int(x)) > INT64_SAFE_COORD:
                    return True
    return False


def supporting_hyperplanes(points, use_numba: bool | None = None):
    """All supporting hyperplanes through affinely independent d-subsets.

    Returns a sorted list of distinct ``(normal, level)`` pairs with primitive
    integer normals, oriented so that ``<normal, x> >= level`` on all points.
    """
    pts = [tuple(int(x) for x in p) for p in points]
    n, d = len(pts), len(pts[0])
    if n < d:
        return []
    big = _is_big(pts)
    numba_ok = HAVE_NUMBA and (USE_NUMBA if use_numba is None else use_numba) and not big
    V = _array(pts, big)
    combos = np.array(list(combinations(range(n), d)), dtype=np.int64)
    if numba_ok:
        normals, levels = _supporting_numba(V, combos)
    else:
        normals, levels = _supporting_numpy(V, combos)
    seen = {(tuple(int(x) for x in nr), int(lv)) for nr, lv in zip(normals, levels)}
    return sorted(seen)


def facet_slacks(points, normals, levels, use_numba: bool | None = None):
    """Matrix ``S[i, j] = <normals[j], points[i]> - levels[j]`` as Python-int rows."""
    if not len(points) or not len(normals):
        return [[] for _ in points]
    big = _is_big(points, normals, [levels])
    numba_ok = HAVE_NUMBA and (USE_NUMBA if use_numba is None else use_numba) and not big
    P = _array(points, big)
    N = _array(normals, big)
    L = np.array([int(x) for x in levels], dtype=object if big else np.int64)
    S = _slacks_numba(P, N, L) if numba_ok else _slacks_numpy(P, N, L)
    return S.tolist()
