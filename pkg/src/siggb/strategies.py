"""Strategy presets for the signature engine.

A strategy decides three things: what goes into the syzygy set, which of the
critical pairs sharing one signature survive (and in which order), and
whether a freshly reduced polynomial may spawn new pairs.  The engine calls
the hooks below with its ``EngineState``; ``state.G`` is the list of labeled
polynomials and ``state.table`` the matching array view.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from . import kernels

SEMI_COMPLETE = "semicomplete"
COMPLETE = "complete"


# ---------------------------------------------------------------------------
# syzygy set contents


def syz_leading_terms(state):
    """Leading monomials of the previous basis: ``lm(g) e_{i+1}`` is a
    principal syzygy signature."""
    tab = state.table
    for j in range(len(state.G) - 1):
        if tab.active[j]:
            state.syz.add(tab.lm[j])


def syz_add_zero(state, entry):
    if entry.syzygy:
        state.syz.add(entry.sig.row())


def syz_keep(state, entry):
    pass


def nm_prune(pairs, syz):
    """Drop pairs whose signature is divisible by a known syzygy signature."""
    return [pr for pr in pairs if not syz.divides(pr.sig_row)]


# ---------------------------------------------------------------------------
# ordering within a signature


def default_order(state, pairs):
    """Ascending lcm, then the older positive part, then the older negative."""
    G = state.G
    return sorted(pairs, key=lambda pr: (
        _key(pr.lcm_row), G[pr.pos].age, G[pr.neg].age, pr.seq))


def _key(row):
    return (row[0],) + tuple(-e for e in row[:0:-1])


def _sig_divides_mask(state, row, mask):
    tab = state.table
    return kernels.divisor_mask(np.asarray(row, np.int32), tab.sigm, mask)


def f5_rewritten(state, pr) -> bool:
    """A later, non-redundant entry of the new index whose signature
    monomial divides the pair's signature rewrites it (zeros included)."""
    tab = state.table
    n = len(state.G)
    mask = (tab.sigi == state.index) & ~state.flags()
    mask[: pr.pos + 1] = False
    return bool(kernels.divisor_mask(np.asarray(pr.sig_row, np.int32),
                                     tab.sigm[:n], mask).any())


def prune_f5(state, pairs, engine):
    return [pr for pr in default_order(state, pairs) if not f5_rewritten(state, pr)]


def ggv_retain(state, pairs, engine):
    """Keep the pair with the youngest positive part; among those the one
    with the oldest negative part."""
    if not pairs:
        return []
    G = state.G
    best = max(G[pr.pos].age for pr in pairs)
    cands = [pr for pr in pairs if G[pr.pos].age == best]
    return [min(cands, key=lambda pr: (G[pr.neg].age, pr.seq))]


def arri_rewritable(state, pr, engine) -> bool:
    """Some nonzero entry ``g`` of the new index with ``sig(g) | sig`` and
    ``t*lm(g) < lm(Spol)`` for the matching ``t``."""
    sp = engine.spoly(pr)
    if not sp:
        return False
    tab = state.table
    mask = tab.active & (tab.sigi == state.index)
    hit = _sig_divides_mask(state, pr.sig_row, mask)
    if not hit.any():
        return False
    sig = np.asarray(pr.sig_row, np.int32)
    rows = sig - tab.sigm[hit] + tab.lm[hit]
    return bool((kernels.cmp_many(rows, sp.monos[0]) < 0).any())


def prune_arri(state, pairs, engine):
    kept = [pr for pr in default_order(state, pairs)
            if not arri_rewritable(state, pr, engine)]
    # among equal signatures prefer the lowest leading monomial; zero
    # S-polynomials have none and are never compared
    lms = [(pr, engine.spoly(pr)) for pr in kept]
    nonzero = [_key(sp.monos[0]) for _, sp in lms if sp]
    if not nonzero:
        return kept
    low = min(nonzero)
    return [pr for pr, sp in lms if not sp or _key(sp.monos[0]) == low]


def minmon_retain(state, pairs, engine):
    return sorted(pairs, key=lambda pr: pr.seq)[:1]


def prune_none(state, pairs, engine):
    return default_order(state, pairs)


# ---------------------------------------------------------------------------
# what gets reduced


def reduce_spoly(state, pr, engine):
    cof = None
    if state.cofactors is not None:
        cof = _spoly_cofactors(state, pr)
    return engine.spoly(pr), cof


def _spoly_cofactors(state, pr):
    from .monomial import Monomial
    ring = state.ring
    p, q = state.G[pr.pos], state.G[pr.neg]
    lcm = Monomial(pr.lcm_row[1:])
    u, v = lcm / p.poly.lm, lcm / q.poly.lm
    fp = ring.field
    cv = fp.neg(fp.div(p.poly.lc, q.poly.lc))
    cof = {}
    for k, h in state.cofactors[pr.pos].items():
        cof[k] = h.mul_term(1, u)
    for k, h in state.cofactors[pr.neg].items():
        cof[k] = cof.get(k, ring.zero) + h.mul_term(cv, v)
    return {k: h for k, h in cof.items() if h}


def reduce_minmon(state, pr, engine):
    """Replace the S-polynomial by ``t*g`` when a nonzero entry of the new
    index with ``sig(g) | sig`` has fewer terms; the sparsest (then oldest)
    such entry is used."""
    sp = engine.spoly(pr)
    tab = state.table
    mask = tab.active & (tab.sigi == state.index)
    hit = np.nonzero(_sig_divides_mask(state, pr.sig_row, mask))[0]
    if hit.size:
        nt = tab.nterms[hit]
        j = int(hit[np.argmin(nt)])  # argmin returns the first, i.e. oldest
        if tab.nterms[j] < len(sp):
            from .monomial import Monomial
            t = np.asarray(pr.sig_row, np.int32) - tab.sigm[j]
            g = state.G[j].poly
            tm = Monomial.from_row(t)
            poly = g.mul_term(1, tm)
            cof = None
            if state.cofactors is not None:
                cof = {k: h.mul_term(1, tm) for k, h in state.cofactors[j].items()}
            return poly, cof
    return reduce_spoly(state, pr, engine)


# ---------------------------------------------------------------------------
# pair generation gate


def redundant_equality(state, entry, engine) -> bool:
    """An entry of the new index with ``t*sig(g) = sig`` and
    ``t*lm(g) = lm``; checked against its divisibility form when the
    engine runs with checks on."""
    tab = state.table
    mask = tab.active & (tab.sigi == state.index)
    sig = entry.sig.row()
    lm = entry.poly.monos[0]
    hit = _sig_divides_mask(state, sig, mask)
    res = False
    if hit.any():
        rows = sig - tab.sigm[hit] + tab.lm[hit]
        res = bool(np.all(rows == lm, axis=1).any())
    if engine.check:
        ck = engine.stats.checks
        ck["redundancy_calls"] += 1
        div = bool((_sig_divides_mask(state, sig, mask)
                    & kernels.divisor_mask(lm, tab.lm, mask)).any())
        if div != res:
            ck["redundancy_disagree"] += 1
    return res


def super_top_reducible(state, entry, engine) -> bool:
    """Some top reducer of ``lm`` is level: same index, same multiplied
    signature.  After complete reduction its leading coefficient is
    proportional too, so the top cancellation would cancel the signature."""
    tab = state.table
    lm = entry.poly.monos[0]
    hit = np.nonzero(kernels.divisor_mask(lm, tab.lm, tab.active))[0]
    res = False
    if hit.size:
        sig = entry.sig.row()
        ms = lm - tab.lm[hit] + tab.sigm[hit]
        level = (tab.sigi[hit] == state.index) & np.all(ms == sig, axis=1)
        res = bool(level.any())
    if engine.check:
        ck = engine.stats.checks
        ck["gs_calls"] += 1
        from .engine import is_sig_redundant_divisibility
        if res != is_sig_redundant_divisibility(entry.sig, entry.poly.lm, state.G):
            ck["gs_disagree"] += 1
    return res


def never_redundant(state, entry, engine) -> bool:
    return False


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StrategyConfig:
    name: str
    reduction_mode: str
    init_syz: Callable
    update_syz: Callable
    prune_S: Callable
    reduction_input: Callable
    is_redundant: Callable
    single_per_signature: bool = True
    use_redundancy_check: bool = True

    def with_options(self, use_redundancy_check: bool = True) -> "StrategyConfig":
        if use_redundancy_check:
            return replace(self, is_redundant=PRESETS[self.name].is_redundant,
                           use_redundancy_check=True)
        return replace(self, is_redundant=never_redundant,
                       use_redundancy_check=False)


def _syz_none(state):
    pass


PRESETS = {
    # F5 keeps going through a signature batch; a new rule rewrites the
    # remaining pairs unless it was redundant
    "f5": StrategyConfig("f5", SEMI_COMPLETE, syz_leading_terms, syz_keep,
                         prune_f5, reduce_spoly, redundant_equality,
                         single_per_signature=False),
    "f5p": StrategyConfig("f5p", SEMI_COMPLETE, syz_leading_terms, syz_add_zero,
                          prune_f5, reduce_spoly, redundant_equality,
                          single_per_signature=False),
    "ggv": StrategyConfig("ggv", COMPLETE, syz_leading_terms, syz_add_zero,
                          ggv_retain, reduce_spoly, super_top_reducible),
    "arri": StrategyConfig("arri", SEMI_COMPLETE, syz_leading_terms, syz_add_zero,
                           prune_arri, reduce_spoly, redundant_equality),
    "minmon": StrategyConfig("minmon", SEMI_COMPLETE, syz_leading_terms,
                             syz_add_zero, minmon_retain, reduce_minmon,
                             redundant_equality),
    # bare engine: every pair not caught by the syzygy set is reduced
    "none": StrategyConfig("none", SEMI_COMPLETE, _syz_none, syz_keep, prune_none,
                           reduce_spoly, redundant_equality,
                           single_per_signature=False),
}
ALIASES = {"f5'": "f5p", "f5prime": "f5p", "fr'": "f5p", "mm": "minmon",
           "bare": "none"}


def get_strategy(name: str) -> StrategyConfig:
    key = name.strip().lower()
    key = ALIASES.get(key, key)
    try:
        return PRESETS[key]
    except KeyError:
        raise ValueError(f"unknown strategy {name!r}; choose from "
                         f"{', '.join(sorted(PRESETS))}") from None
