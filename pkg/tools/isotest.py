"""Exact isomorphism testing for small 2-generated 3-groups.

Build-time machinery for catalog identification (not part of the library):
elements are colored by iterated Weisfeiler-Leman-style refinement over the
Cayley and commutator tables; a candidate isomorphism must map generators
into matching color classes, and is then verified by evaluating one
group's relators on the candidate images in the other group.  For the
orders involved (<= 729) this is exact and fast enough.
"""

from __future__ import annotations

import numpy as np


def cayley_table(G) -> np.ndarray:
    n = G.order
    M = np.empty((n, n), dtype=np.int32)
    for a in range(n):
        M[a] = G.left_table(a)
    return M


def order_vector(G) -> np.ndarray:
    n = G.order
    out = np.zeros(n, dtype=np.int32)
    t = np.arange(n)
    k = 0
    while (t != 0).any():
        k += 1
        for i in np.flatnonzero(t != 0):
            t[i] = G.cube(int(t[i]))
        out[(t == 0) & (out == 0)] = k
    out[0] = 0
    return out  # log3 of element order


def commutator_table(G, M: np.ndarray) -> np.ndarray:
    n = G.order
    inv = np.asarray(G.inv, dtype=np.int32)
    uu, vv = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    vu = M[vv, uu]
    uv = M[uu, vv]
    return M[inv[vu], uv]


def color_signature(G, rounds: int = 6):
    """Canonical per-group invariant: the sorted signature multiset of the
    stable coloring (isomorphism invariant by construction)."""
    n = G.order
    M = cayley_table(G)
    C = commutator_table(G, M)
    lo = order_vector(G)
    colors = np.unique(lo, return_inverse=True)[1].astype(np.int64)
    final_sigs = None
    for _ in range(rounds):
        ncol = int(colors.max()) + 1
        sigs = []
        for u in range(n):
            joint = np.bincount(colors[M[u]] * ncol + colors[C[u]],
                                minlength=ncol * ncol)
            sigs.append((int(colors[u]),) + tuple(joint.tolist()))
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = np.array([order[s] for s in sigs], dtype=np.int64)
        if np.array_equal(new, colors):
            final_sigs = sigs
            break
        colors = new
        final_sigs = sigs
    return colors, tuple(sorted(final_sigs))


def _eval_word(word, images, M, inv):
    e = 0
    for letter in word:
        g = images[abs(letter) - 1]
        e = M[e, g] if letter > 0 else M[e, inv[g]]
    return e


def isomorphic(G1, G2, verbose: bool = False) -> bool:
    """Exact decision for 2-generated groups realized from presentations."""
    if G1.order != G2.order:
        return False
    col1, sig1 = color_signature(G1)
    col2, sig2 = color_signature(G2)
    if sig1 != sig2:
        if verbose:
            print("separated by color signatures")
        return False
    # candidate images: elements of G2 whose color matches the generators'
    pres = G1.presentation
    x_elem, y_elem = G1.gen_elem
    M2 = cayley_table(G2)
    inv2 = np.asarray(G2.inv, dtype=np.int64)
    ux = np.flatnonzero(col2 == col1[x_elem])
    uy = np.flatnonzero(col2 == col1[y_elem])
    if verbose:
        print(f"candidates: {len(ux)} x {len(uy)}")
    relators = list(pres.relators)
    maximal_masks = [h.mask() for h in G2.maximal_subgroups]
    for u in ux:
        for v in uy:
            if any(m[u] and m[v] for m in maximal_masks):
                continue  # not a generating pair
            images = (int(u), int(v))
            if all(_eval_word(rel, images, M2, inv2) == 0 for rel in relators):
                return True
    return False


def distinct_up_to_iso(groups, verbose: bool = False):
    """Partition a list of groups into isomorphism classes (indices)."""
    classes: list[list[int]] = []
    for i, g in enumerate(groups):
        for cls in classes:
            if isomorphic(groups[cls[0]], g, verbose=verbose):
                cls.append(i)
                break
        else:
            classes.append([i])
    return classes
