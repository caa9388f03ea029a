"""Pure-numpy kernels; same contracts as the compiled ones.

Vectorized where a whole table is scanned; the reduction loops themselves
iterate in Python.
"""
import numpy as np


def _order(m):
    # ascending permutation == descending degrevlex
    keys = [m[:, k] for k in range(1, m.shape[1])] + [-m[:, 0]]
    return np.lexsort(keys)


def cmp_rows(a, b):
    if a[0] != b[0]:
        return 1 if a[0] > b[0] else -1
    d = np.nonzero(a[1:] != b[1:])[0]
    if d.size == 0:
        return 0
    k = d[-1] + 1
    return 1 if a[k] < b[k] else -1


def cmp_many(rows, b):
    """Vectorized ``cmp_rows(rows[i], b)``."""
    d0 = rows[:, 0].astype(np.int64) - b[0]
    d = rows[:, 1:].astype(np.int64) - b[1:]
    nz = d != 0
    width = d.shape[1]
    last = width - 1 - np.argmax(nz[:, ::-1], axis=1)
    tail = -np.sign(d[np.arange(d.shape[0]), last]) * nz.any(axis=1)
    return np.where(d0 != 0, np.sign(d0), tail).astype(np.int64)


def sort_combine(m, c, p):
    """Sort terms descending and merge equal monomials mod ``p``."""
    if m.shape[0] == 0:
        return m.astype(np.int32), c.astype(np.int64)
    perm = _order(m)
    m = m[perm]
    c = c[perm] % p
    new = np.ones(m.shape[0], dtype=bool)
    new[1:] = np.any(m[1:] != m[:-1], axis=1)
    starts = np.nonzero(new)[0]
    sums = np.add.reduceat(c, starts) % p
    m = m[starts]
    keep = sums != 0
    return np.ascontiguousarray(m[keep], dtype=np.int32), sums[keep].astype(np.int64)


def sub_mul(am, ac, coef, t, bm, bc, p):
    """Return ``A - coef * t * B``."""
    if bm.shape[0] == 0:
        return am.copy(), ac.copy()
    neg = (p - coef % p) % p
    m = np.concatenate([am, bm + t])
    c = np.concatenate([ac, (bc * neg) % p])
    return sort_combine(m, c, p)


def mul_term(m, c, coef, t, p):
    return (m + t).astype(np.int32), (c * coef) % p


def dmask(a):
    """Bitmask of occurring variables, folded onto 62 bits."""
    m = 0
    for k in np.nonzero(np.asarray(a)[1:] > 0)[0]:
        m |= 1 << (int(k) % 62)
    return m


def divisor_mask(mono, table, mask):
    return mask & np.all(table <= mono, axis=1)


def find_divisor(mono, table, mask):
    hits = np.nonzero(divisor_mask(mono, table, mask))[0]
    return int(hits[0]) if hits.size else -1


def find_sig_reducer(lead, lead_c, sig_m, sig_i, sig_c, lm_tab, dm_tab, lcinv_tab,
                     sigm_tab, sigi_tab, active, complete, strict, p):
    cand = active & ((dm_tab & ~dmask(lead)) == 0)
    idx = np.nonzero(divisor_mask(lead, lm_tab, cand))[0]
    if idx.size == 0:
        return -1
    ms = lead - lm_tab[idx] + sigm_tab[idx]
    si = sigi_tab[idx]
    s = np.where(si < sig_i, -1, np.where(si > sig_i, 1, cmp_many(ms, sig_m)))
    ok = s < 0
    if complete and not strict:
        a = (int(lead_c) * lcinv_tab[idx]) % p
        ok |= (s == 0) & (a != sig_c)
    idx, ms, si = idx[ok], ms[ok], si[ok]
    if idx.size == 0:
        return -1
    # smallest (index, monomial), then smallest position
    keys = [idx] + [-ms[:, k] for k in range(1, ms.shape[1])] + [ms[:, 0], si]
    perm = np.lexsort(keys)
    return int(idx[perm[0]])


def _top_phase(pm, pc, sig_m, sig_i, sig_c, pool_m, pool_c, starts, ends,
               lm_tab, dm_tab, lcinv_tab, sigm_tab, sigi_tab, active, complete, p):
    steps = 0
    while pm.shape[0] > 0:
        j = find_sig_reducer(pm[0], pc[0], sig_m, sig_i, sig_c, lm_tab,
                             dm_tab, lcinv_tab, sigm_tab, sigi_tab, active, complete,
                             False, p)
        if j < 0:
            break
        a = int(pc[0]) * int(lcinv_tab[j]) % p
        t = pm[0] - lm_tab[j]
        if sigi_tab[j] == sig_i and np.array_equal(t + sigm_tab[j], sig_m):
            sig_c = (sig_c - a) % p
        s0, s1 = starts[j], ends[j]
        pm, pc = sub_mul(pm, pc, a, t, pool_m[s0:s1], pool_c[s0:s1], p)
        steps += 1
    return pm, pc, sig_c, steps


def sig_reduce(pm, pc, sig_m, sig_i, sig_c, pool_m, pool_c, starts, ends,
               lm_tab, dm_tab, lcinv_tab, sigm_tab, sigi_tab, active, complete,
               tail, p):
    pm, pc, sig_c, steps = _top_phase(pm, pc, sig_m, sig_i, sig_c, pool_m,
                                      pool_c, starts, ends, lm_tab, dm_tab, lcinv_tab,
                                      sigm_tab, sigi_tab, active, complete, p)
    if not tail or pm.shape[0] <= 1:
        return pm, pc, sig_c, steps
    out_m = [pm[0]]
    out_c = [pc[0]]
    pm, pc = pm[1:], pc[1:]
    while pm.shape[0] > 0:
        j = find_sig_reducer(pm[0], pc[0], sig_m, sig_i, sig_c, lm_tab,
                             dm_tab, lcinv_tab, sigm_tab, sigi_tab, active, complete,
                             True, p)
        if j < 0:
            out_m.append(pm[0])
            out_c.append(pc[0])
            pm, pc = pm[1:], pc[1:]
            continue
        a = int(pc[0]) * int(lcinv_tab[j]) % p
        s0, s1 = starts[j], ends[j]
        pm, pc = sub_mul(pm, pc, a, pm[0] - lm_tab[j], pool_m[s0:s1],
                         pool_c[s0:s1], p)
        steps += 1
    return (np.array(out_m, dtype=np.int32), np.array(out_c, dtype=np.int64),
            sig_c, steps)


def normal_form(pm, pc, pool_m, pool_c, starts, ends, lm_tab, dm_tab, lcinv_tab,
                active, p):
    out_m = []
    out_c = []
    steps = 0
    w = pm.shape[1]
    while pm.shape[0] > 0:
        j = find_divisor(pm[0], lm_tab, active)
        if j < 0:
            out_m.append(pm[0])
            out_c.append(pc[0])
            pm, pc = pm[1:], pc[1:]
            continue
        a = int(pc[0]) * int(lcinv_tab[j]) % p
        s0, s1 = starts[j], ends[j]
        pm, pc = sub_mul(pm, pc, a, pm[0] - lm_tab[j], pool_m[s0:s1],
                         pool_c[s0:s1], p)
        steps += 1
    if not out_m:
        return np.empty((0, w), np.int32), np.empty(0, np.int64), steps
    return (np.array(out_m, dtype=np.int32), np.array(out_c, dtype=np.int64),
            steps)


def pair_candidates(r_lm, r_sig, r_idx, lm_tab, sigm_tab, sigi_tab, eligible):
    idx = np.nonzero(eligible)[0]
    lcm = np.maximum(lm_tab[idx], r_lm)
    lcm[:, 0] = lcm[:, 1:].sum(axis=1)
    mr = lcm - r_lm + r_sig
    mg = lcm - lm_tab[idx] + sigm_tab[idx]
    si = sigi_tab[idx]
    s = np.where(si < r_idx, 1, np.where(si > r_idx, -1, 0))
    same = si == r_idx
    if same.any():
        s[same] = np.array([cmp_rows(a, b) for a, b in zip(mr[same], mg[same])],
                           dtype=np.int64)
    keep = s != 0
    rpos = s[keep] > 0
    mus = np.where(rpos[:, None], mr[keep], mg[keep]).astype(np.int32)
    return idx[keep].astype(np.int64), mus, rpos
