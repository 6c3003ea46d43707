"""Batch proper-intersection counting kernels.

The pairwise O(e1*e2) crossing count is the one hot loop in this package
(the morph recomputes it at every step).  Three interchangeable backends
compute per-segment counts over int64 coordinate arrays:

* ``numba``  - @njit compiled double loop (default when numba is installed)
* ``numpy``  - broadcasting over the full m1 x m2 grid
* ``python`` - scalar loop over the exact predicates in :mod:`geometry`

Select with the ``FLIPDIST_KERNEL`` environment variable.  The int64
backends are only used when every coordinate satisfies
``|c| <= INT64_SAFE_LIMIT``; beyond that, callers fall back to the exact
big-int path regardless of the flag, so no sign is ever lost to overflow.
"""

from __future__ import annotations

import os

import numpy as np

from . import geometry

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

KERNEL_ENV = "FLIPDIST_KERNEL"

# With |c| <= 2^30 - 1, coordinate differences are < 2^31, their pairwise
# products are < 2^62 - 2^33, and each determinant fits in int64.
INT64_SAFE_LIMIT = (1 << 30) - 1


def active_kernel() -> str:
    choice = os.environ.get(KERNEL_ENV, "").strip().lower()
    if choice in ("numba", "numpy", "python"):
        if choice == "numba" and not HAS_NUMBA:
            return "numpy"
        return choice
    return "numba" if HAS_NUMBA else "numpy"


def segments_array(segments: list[geometry.Segment]) -> np.ndarray:
    """Pack segments as an (m, 4) int64 array [ax, ay, bx, by]."""
    if not segments:
        return np.empty((0, 4), dtype=np.int64)
    return np.array(
        [(a[0], a[1], b[0], b[1]) for a, b in segments], dtype=np.int64
    )


def _counts_python(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros(len(a), dtype=np.int64)
    segs_b = [((int(r[0]), int(r[1])), (int(r[2]), int(r[3]))) for r in b]
    for i, r in enumerate(a):
        seg_a = ((int(r[0]), int(r[1])), (int(r[2]), int(r[3])))
        out[i] = sum(
            geometry.properly_intersect(seg_a, seg_b) for seg_b in segs_b
        )
    return out


def _counts_numpy(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if len(a) == 0 or len(b) == 0:
        return np.zeros(len(a), dtype=np.int64)
    p = a[:, None, 0:2]
    q = a[:, None, 2:4]
    r = b[None, :, 0:2]
    s = b[None, :, 2:4]
    d1 = q - p
    d2 = s - r
    o1 = d1[..., 0] * (r - p)[..., 1] - d1[..., 1] * (r - p)[..., 0]
    o2 = d1[..., 0] * (s - p)[..., 1] - d1[..., 1] * (s - p)[..., 0]
    o3 = d2[..., 0] * (p - r)[..., 1] - d2[..., 1] * (p - r)[..., 0]
    o4 = d2[..., 0] * (q - r)[..., 1] - d2[..., 1] * (q - r)[..., 0]
    # Compare signs rather than products: the determinants themselves can be
    # near 2^62 and their products would overflow.
    hit = (np.sign(o1) * np.sign(o2) < 0) & (np.sign(o3) * np.sign(o4) < 0)
    return hit.sum(axis=1).astype(np.int64)


if HAS_NUMBA:

    @numba.njit(cache=True)
    def _counts_numba(a, b):  # pragma: no cover - exercised via dispatch
        m1 = a.shape[0]
        m2 = b.shape[0]
        out = np.zeros(m1, dtype=np.int64)
        for i in range(m1):
            px, py, qx, qy = a[i, 0], a[i, 1], a[i, 2], a[i, 3]
            c = 0
            for j in range(m2):
                rx, ry, sx, sy = b[j, 0], b[j, 1], b[j, 2], b[j, 3]
                o1 = (qx - px) * (ry - py) - (qy - py) * (rx - px)
                o2 = (qx - px) * (sy - py) - (qy - py) * (sx - px)
                if (o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0):
                    o3 = (sx - rx) * (py - ry) - (sy - ry) * (px - rx)
                    o4 = (sx - rx) * (qy - ry) - (sy - ry) * (qx - rx)
                    if (o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0):
                        c += 1
            out[i] = c
        return out


def crossing_counts(
    a: np.ndarray, b: np.ndarray, kernel: str | None = None
) -> np.ndarray:
    """Per-row counts of segments in ``b`` properly crossing each row of ``a``."""
    backend = kernel or active_kernel()
    if backend == "numba" and HAS_NUMBA:
        return _counts_numba(a, b)
    if backend == "numpy" or backend == "numba":
        return _counts_numpy(a, b)
    return _counts_python(a, b)


def int64_safe(a: np.ndarray, b: np.ndarray) -> bool:
    if len(a) == 0 and len(b) == 0:
        return True
    bound = INT64_SAFE_LIMIT
    return bool(
        (len(a) == 0 or np.abs(a).max() <= bound)
        and (len(b) == 0 or np.abs(b).max() <= bound)
    )
