"""Compiled kernels.

Monomials are int32 rows ``[deg, e1, ..., en]``; polynomials are a row matrix
sorted strictly descending in degrevlex plus an int64 coefficient vector with
entries in ``[0, p)``.  Reducer tables are passed as flat arrays so whole
reduction loops run without returning to the interpreter.
"""
import numpy as np
from numba import njit


@njit(inline="always")
def _cmp(a, b):
    if a[0] != b[0]:
        return 1 if a[0] > b[0] else -1
    for k in range(a.shape[0] - 1, 0, -1):
        if a[k] != b[k]:
            return 1 if a[k] < b[k] else -1
    return 0


@njit(inline="always")
def _divides(a, b):
    if a[0] > b[0]:
        return False
    for k in range(1, a.shape[0]):
        if a[k] > b[k]:
            return False
    return True


@njit(inline="always")
def _dmask(a):
    # bit b set when some variable k with (k-1) % 62 == b occurs
    m = 0
    for k in range(1, a.shape[0]):
        if a[k] > 0:
            m |= 1 << ((k - 1) % 62)
    return m


@njit(cache=True)
def dmask(a):
    return _dmask(a)


@njit(cache=True)
def _powmod(a, e, p):
    r = 1
    a = a % p
    while e > 0:
        if e & 1:
            r = (r * a) % p
        a = (a * a) % p
        e >>= 1
    return r


@njit(cache=True)
def cmp_rows(a, b):
    return _cmp(a, b)


@njit(cache=True)
def sub_mul(am, ac, coef, t, bm, bc, p):
    """Return ``A - coef * t * B``."""
    la = am.shape[0]
    lb = bm.shape[0]
    w = t.shape[0]
    om = np.empty((la + lb, w), np.int32)
    oc = np.empty(la + lb, np.int64)
    neg = (p - coef % p) % p
    sb = np.empty(w, np.int32)
    i = 0
    j = 0
    k = 0
    if lb > 0:
        for c in range(w):
            sb[c] = bm[0, c] + t[c]
    while i < la and j < lb:
        s = _cmp(am[i], sb)
        if s > 0:
            om[k] = am[i]
            oc[k] = ac[i]
            k += 1
            i += 1
        elif s < 0:
            v = (neg * bc[j]) % p
            if v != 0:
                om[k] = sb
                oc[k] = v
                k += 1
            j += 1
            if j < lb:
                for c in range(w):
                    sb[c] = bm[j, c] + t[c]
        else:
            v = (ac[i] + neg * bc[j]) % p
            if v != 0:
                om[k] = am[i]
                oc[k] = v
                k += 1
            i += 1
            j += 1
            if j < lb:
                for c in range(w):
                    sb[c] = bm[j, c] + t[c]
    while i < la:
        om[k] = am[i]
        oc[k] = ac[i]
        k += 1
        i += 1
    while j < lb:
        v = (neg * bc[j]) % p
        if v != 0:
            for c in range(w):
                om[k, c] = bm[j, c] + t[c]
            oc[k] = v
            k += 1
        j += 1
    return om[:k].copy(), oc[:k].copy()


@njit(cache=True)
def mul_term(m, c, coef, t, p):
    n = m.shape[0]
    om = np.empty_like(m)
    oc = np.empty(n, np.int64)
    for i in range(n):
        for k in range(m.shape[1]):
            om[i, k] = m[i, k] + t[k]
        oc[i] = (c[i] * coef) % p
    return om, oc


@njit(cache=True)
def find_divisor(mono, table, mask):
    for j in range(table.shape[0]):
        if mask[j] and _divides(table[j], mono):
            return j
    return -1


@njit(cache=True)
def divisor_mask(mono, table, mask):
    out = np.zeros(table.shape[0], np.bool_)
    for j in range(table.shape[0]):
        if mask[j] and _divides(table[j], mono):
            out[j] = True
    return out


@njit(cache=True)
def find_sig_reducer(lead, lead_c, sig_m, sig_i, sig_c, lm_tab, dm_tab, lcinv_tab,
                     sigm_tab, sigi_tab, active, complete, strict, p):
    """Index of the preferred sigma-safe top reducer of ``lead`` or -1.

    Preference is the smallest multiplied signature, then the smallest
    index.  With ``strict`` only reducers of strictly smaller signature are
    admitted (tail terms); otherwise level reducers count when ``complete``
    holds and the coefficient condition is met.
    """
    w = lead.shape[0]
    best = -1
    best_i = 0
    best_m = np.empty(w, np.int32)
    ms = np.empty(w, np.int32)
    nl = ~_dmask(lead)
    for j in range(lm_tab.shape[0]):
        if not active[j] or dm_tab[j] & nl:
            continue
        if not _divides(lm_tab[j], lead):
            continue
        for c in range(w):
            ms[c] = lead[c] - lm_tab[j, c] + sigm_tab[j, c]
        if sigi_tab[j] < sig_i:
            s = -1
        elif sigi_tab[j] > sig_i:
            s = 1
        else:
            s = _cmp(ms, sig_m)
        if s > 0:
            continue
        if s == 0:
            if strict or not complete:
                continue
            a = (lead_c * lcinv_tab[j]) % p
            if a == sig_c:
                continue
        if best >= 0:
            if sigi_tab[j] > best_i:
                continue
            if sigi_tab[j] == best_i and _cmp(ms, best_m) >= 0:
                continue
        best = j
        best_i = sigi_tab[j]
        for c in range(w):
            best_m[c] = ms[c]
    return best


@njit(cache=True)
def _grow(m, c, need):
    cap = m.shape[0]
    if need <= cap:
        return m, c
    ncap = max(2 * cap, need, 16)
    nm = np.empty((ncap, m.shape[1]), np.int32)
    nc = np.empty(ncap, np.int64)
    nm[:cap] = m
    nc[:cap] = c
    return nm, nc


@njit(cache=True)
def sig_reduce(pm, pc, sig_m, sig_i, sig_c, pool_m, pool_c, starts, ends,
               lm_tab, dm_tab, lcinv_tab, sigm_tab, sigi_tab, active, complete,
               tail, p):
    """Sigma-reduce ``(sig, P)`` against the table.

    Returns ``(monos, coeffs, sig_coef, steps)``; the caller rescales.
    """
    w = sig_m.shape[0]
    steps = 0
    t = np.empty(w, np.int32)
    # top phase
    while pm.shape[0] > 0:
        j = find_sig_reducer(pm[0], pc[0], sig_m, sig_i, sig_c, lm_tab,
                             dm_tab, lcinv_tab, sigm_tab, sigi_tab, active, complete,
                             False, p)
        if j < 0:
            break
        a = (pc[0] * lcinv_tab[j]) % p
        for c in range(w):
            t[c] = pm[0, c] - lm_tab[j, c]
        if sigi_tab[j] == sig_i:
            level = True
            for c in range(w):
                if t[c] + sigm_tab[j, c] != sig_m[c]:
                    level = False
                    break
            if level:
                sig_c = (sig_c - a) % p
        s0 = starts[j]
        s1 = ends[j]
        pm, pc = sub_mul(pm, pc, a, t, pool_m[s0:s1], pool_c[s0:s1], p)
        steps += 1
    if not tail or pm.shape[0] <= 1:
        return pm, pc, sig_c, steps
    # tail phase: strictly smaller signatures only
    rm = np.empty((16, w), np.int32)
    rc = np.empty(16, np.int64)
    rm[0] = pm[0]
    rc[0] = pc[0]
    k = 1
    pm = pm[1:]
    pc = pc[1:]
    while pm.shape[0] > 0:
        j = find_sig_reducer(pm[0], pc[0], sig_m, sig_i, sig_c, lm_tab,
                             dm_tab, lcinv_tab, sigm_tab, sigi_tab, active, complete,
                             True, p)
        if j < 0:
            rm, rc = _grow(rm, rc, k + 1)
            rm[k] = pm[0]
            rc[k] = pc[0]
            k += 1
            pm = pm[1:]
            pc = pc[1:]
            continue
        a = (pc[0] * lcinv_tab[j]) % p
        for c in range(w):
            t[c] = pm[0, c] - lm_tab[j, c]
        s0 = starts[j]
        s1 = ends[j]
        pm, pc = sub_mul(pm, pc, a, t, pool_m[s0:s1], pool_c[s0:s1], p)
        steps += 1
    return rm[:k].copy(), rc[:k].copy(), sig_c, steps


@njit(cache=True)
def normal_form(pm, pc, pool_m, pool_c, starts, ends, lm_tab, dm_tab, lcinv_tab,
                active, p):
    """Full normal form; the first divisor in table order is used."""
    w = pm.shape[1]
    rm = np.empty((16, w), np.int32)
    rc = np.empty(16, np.int64)
    k = 0
    t = np.empty(w, np.int32)
    steps = 0
    while pm.shape[0] > 0:
        j = -1
        nl = ~_dmask(pm[0])
        for i in range(lm_tab.shape[0]):
            if active[i] and not dm_tab[i] & nl and _divides(lm_tab[i], pm[0]):
                j = i
                break
        if j < 0:
            rm, rc = _grow(rm, rc, k + 1)
            rm[k] = pm[0]
            rc[k] = pc[0]
            k += 1
            pm = pm[1:]
            pc = pc[1:]
            continue
        a = (pc[0] * lcinv_tab[j]) % p
        for c in range(w):
            t[c] = pm[0, c] - lm_tab[j, c]
        s0 = starts[j]
        s1 = ends[j]
        pm, pc = sub_mul(pm, pc, a, t, pool_m[s0:s1], pool_c[s0:s1], p)
        steps += 1
    return rm[:k].copy(), rc[:k].copy(), steps


@njit(cache=True)
def pair_candidates(r_lm, r_sig, r_idx, lm_tab, sigm_tab, sigi_tab, eligible):
    """Oriented critical pairs between a new entry and every eligible row.

    Returns ``(others, mus, r_is_pos)``; level pairs are skipped.
    """
    m = lm_tab.shape[0]
    w = r_lm.shape[0]
    others = np.empty(m, np.int64)
    mus = np.empty((m, w), np.int32)
    rpos = np.empty(m, np.bool_)
    lcm = np.empty(w, np.int32)
    mr = np.empty(w, np.int32)
    mg = np.empty(w, np.int32)
    k = 0
    for j in range(m):
        if not eligible[j]:
            continue
        deg = 0
        for c in range(1, w):
            v = r_lm[c] if r_lm[c] > lm_tab[j, c] else lm_tab[j, c]
            lcm[c] = v
            deg += v
        lcm[0] = deg
        for c in range(w):
            mr[c] = lcm[c] - r_lm[c] + r_sig[c]
            mg[c] = lcm[c] - lm_tab[j, c] + sigm_tab[j, c]
        if sigi_tab[j] < r_idx:
            s = 1
        elif sigi_tab[j] > r_idx:
            s = -1
        else:
            s = _cmp(mr, mg)
        if s == 0:
            continue
        others[k] = j
        if s > 0:
            mus[k] = mr
            rpos[k] = True
        else:
            mus[k] = mg
            rpos[k] = False
        k += 1
    return others[:k].copy(), mus[:k].copy(), rpos[:k].copy()
