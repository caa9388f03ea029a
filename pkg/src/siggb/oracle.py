"""Reference Buchberger algorithm and Groebner basis checks.

Independent of the signature machinery; used to validate its output.
"""
from __future__ import annotations

import heapq

import numpy as np
from typing import Sequence

from .poly import Polynomial, ReducerTable, reduce_with_table, s_polynomial


def normal_form(p: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    table = ReducerTable(p.ring, capacity=max(len(G), 1))
    for g in G:
        table.append(g)
    return reduce_with_table(p, table)


def interreduce(G: Sequence[Polynomial], assume_groebner: bool = False) -> list[Polynomial]:
    """Reduced Groebner basis of a Groebner basis ``G``: monic, minimal and
    tail reduced, sorted by ascending leading monomial.

    Elements dropped for a non-minimal leading monomial are reduced first
    and come back if something is left, so any generating set is fully
    autoreduced.  ``assume_groebner`` skips that step.
    """
    polys = [g.monic() for g in G if g]
    if not polys:
        return []
    ring = polys[0].ring
    order = ring.order
    while True:
        polys.sort(key=lambda g: order.row_key(g.monos[0]))
        lms = np.array([g.monos[0] for g in polys], np.int32)
        keep = np.ones(len(polys), np.bool_)
        for k in range(1, len(polys)):
            # an earlier kept lm dividing this one (equal lms: keep the first)
            if (keep[:k] & np.all(lms[:k] <= lms[k], axis=1)).any():
                keep[k] = False
        minimal = [g for g, f in zip(polys, keep) if f]
        table = ReducerTable(ring, capacity=len(minimal))
        for g in minimal:
            table.append(g)
        if assume_groebner:
            break
        left = [reduce_with_table(g, table) for g, f in zip(polys, keep) if not f]
        left = [r.monic() for r in left if r]
        if not left:
            break
        polys = minimal + left
    out = []
    for k, g in enumerate(minimal):
        table.set_active(k, False)
        out.append(reduce_with_table(g, table).monic())
        table.set_active(k, True)
    out.sort(key=lambda g: order.row_key(g.monos[0]))
    return out


def buchberger(F: Sequence[Polynomial], stats: dict | None = None) -> list[Polynomial]:
    """Reduced Groebner basis by Buchberger's algorithm.

    Normal selection strategy (smallest lcm first) and the coprime leading
    monomial criterion only.  ``stats``, if given, receives the number of
    pairs reduced and of zero reductions.
    """
    G: list[Polynomial] = []
    F = [f for f in F if f]
    if not F:
        return []
    ring = F[0].ring
    order = ring.order
    table = ReducerTable(ring)
    pairs: list = []
    seq = 0

    def add(g):
        nonlocal seq
        k = len(G)
        for j, h in enumerate(G):
            lcm = g.lm.lcm(h.lm)
            if lcm.degree == g.lm.degree + h.lm.degree:
                continue  # coprime leading monomials
            heapq.heappush(pairs, (order.key(lcm), seq, j, k))
            seq += 1
        G.append(g)
        table.append(g)

    for f in F:
        r = reduce_with_table(f, table) if G else f
        if r:
            add(r.monic())
    reduced = zeros = 0
    while pairs:
        _, _, j, k = heapq.heappop(pairs)
        r = reduce_with_table(s_polynomial(G[j], G[k]), table)
        reduced += 1
        if r:
            add(r.monic())
        else:
            zeros += 1
    if stats is not None:
        stats["pairs_reduced"] = reduced
        stats["zero_reductions"] = zeros
    return interreduce(G, assume_groebner=True)


def is_groebner(G: Sequence[Polynomial]) -> bool:
    """Every S-polynomial reduces to zero modulo ``G``."""
    G = [g for g in G if g]
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            if G[a].lm.lcm(G[b].lm).degree == G[a].lm.degree + G[b].lm.degree:
                continue
            if normal_form(s_polynomial(G[a], G[b]), G):
                return False
    return True


def ideals_equal(G: Sequence[Polynomial], H: Sequence[Polynomial]) -> bool:
    """Compare reduced bases of two Groebner bases."""
    return interreduce(G) == interreduce(H)


def generates(G: Sequence[Polynomial], F: Sequence[Polynomial]) -> bool:
    """Each ``f`` in ``F`` reduces to zero modulo the Groebner basis ``G``."""
    return all(not normal_form(f, G) for f in F if f)
