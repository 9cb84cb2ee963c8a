"""Numpy implementation of the group-census kernels.

All four functions work on a dense multiplication table: a C-contiguous
uint16 array with table[i, j] = index of element i * element j and the
identity at index 0, plus a parallel uint16 array of inverses.  Subgroups
are passed as sorted tuples of element indices.  The Cython module
_groupkern implements the same contract; groupkern.py picks one at import.
"""

import numpy as np

BACKEND = "numpy"


def closure(table, seeds):
    """Subgroup generated by the seed elements, as a sorted list of indices.

    Breadth-first right multiplication by the seeds starting from the
    identity; in a finite group the words in the seeds already form the
    generated subgroup, so no inverses are needed.
    """
    n = table.shape[0]
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    seed_arr = np.unique(np.asarray(list(seeds), dtype=np.intp))
    if seed_arr.size:
        frontier = np.array([0], dtype=np.intp)
        while frontier.size:
            prod = np.unique(table[frontier[:, None], seed_arr[None, :]])
            new = prod[~mask[prod]]
            mask[new] = True
            frontier = new.astype(np.intp)
    return [int(i) for i in np.flatnonzero(mask)]


def _conjugate_rows(table, inv, elems):
    # row c = sorted conjugate set c H c^-1
    e = np.asarray(elems, dtype=np.intp)
    ic = np.asarray(inv, dtype=np.intp)
    a = table[:, e].astype(np.intp)
    b = table[a, ic[:, None]]
    b.sort(axis=1)
    return b


def canonical_key(table, inv, elems):
    """Lexicographically least sorted element set among all conjugates."""
    b = _conjugate_rows(table, inv, elems)
    best = b[np.lexsort(b.T[::-1])[0]]
    return tuple(int(v) for v in best)


def normalizer(table, inv, elems):
    """All c with c H c^-1 == H, for H a sorted element list."""
    b = _conjugate_rows(table, inv, elems)
    tgt = np.sort(np.asarray(elems)).astype(b.dtype)
    hit = (b == tgt[None, :]).all(axis=1)
    return [int(i) for i in np.flatnonzero(hit)]


def conj_min_reps(table, inv, conjugators):
    """For every element g, the least conjugate c g c^-1 over the given c."""
    c = np.asarray(conjugators, dtype=np.intp)
    if c.size == 0:
        raise ValueError("need at least one conjugator")
    ic = np.asarray(inv, dtype=np.intp)[c]
    a = table[c, :].astype(np.intp)
    b = table[a, ic[:, None]]
    return b.min(axis=0)
