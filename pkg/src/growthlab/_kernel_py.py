"""Pure numpy implementations of the hot kernels.

Same API as the compiled ``_kernel`` extension; used when the extension
is unavailable or when ``GROWTHLAB_PURE=1`` forces it.
"""

import numpy as np


def kernel_name():
    return "python"


def build_mult_table(E, base_cols, weights, keys_sorted, key_order):
    """table[i, j] = id of (element i followed by element j).

    Row i of the table is computed in one shot: the product's images on
    the base are E[j, E[i, base]], so its key is a single gather + dot.
    """
    n = E.shape[0]
    out = np.empty((n, n), dtype=np.uint16)
    E64 = E.astype(np.int64)
    for i in range(n):
        cols = E[i, base_cols]
        keys = E64[:, cols] @ weights
        pos = np.searchsorted(keys_sorted, keys)
        out[i] = key_order[pos]
    return out


def close_ids(table, gens, n):
    """Sorted ids of the subgroup generated by ``gens`` (element ids)."""
    gen_arr = np.unique(np.asarray(gens, dtype=np.int64))
    if gen_arr.size == 0:
        return np.empty(0, dtype=np.uint32)
    seen = np.zeros(n, dtype=bool)
    seen[gen_arr] = True
    members = [gen_arr]
    frontier = gen_arr
    while frontier.size:
        prod = table[np.ix_(frontier, gen_arr)].ravel()
        fresh = prod[~seen[prod]]
        if fresh.size == 0:
            break
        fresh = np.unique(fresh).astype(np.int64)
        seen[fresh] = True
        members.append(fresh)
        frontier = fresh
    ids = np.concatenate(members)
    ids.sort()
    return ids.astype(np.uint32)
