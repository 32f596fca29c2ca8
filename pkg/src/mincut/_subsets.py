"""Vectorised tables over all ``2**k`` subsets of a small vertex list.

Bit ``i`` of a mask stands for the ``i``-th vertex of the list. Tables are
built by doubling, so each costs ``O(k * 2**k)`` numpy work.
"""

from __future__ import annotations

import numpy as np


def cut_table(weights: np.ndarray) -> np.ndarray:
    """``cut[mask]`` = weight of edges leaving ``mask`` within the list.

    ``weights`` is a symmetric ``k x k`` integer matrix with zero diagonal.
    """
    k = weights.shape[0]
    deg = weights.sum(axis=1)
    cut = np.zeros(1, dtype=np.int64)
    for v in range(k):
        # w[mask] = weight from v into mask, masks over the first v vertices
        w = np.zeros(1, dtype=np.int64)
        for u in range(v):
            w = np.concatenate((w, w + int(weights[v, u])))
        cut = np.concatenate((cut, cut + int(deg[v]) - 2 * w))
    return cut


def sum_table(values) -> np.ndarray:
    """``out[mask]`` = sum of ``values[i]`` over the bits of ``mask``."""
    out = np.zeros(1, dtype=np.int64)
    for x in values:
        out = np.concatenate((out, out + int(x)))
    return out


def popcount_table(k: int) -> np.ndarray:
    return sum_table([1] * k)


def members(mask: int, verts) -> list:
    return [verts[i] for i in range(len(verts)) if mask >> i & 1]
