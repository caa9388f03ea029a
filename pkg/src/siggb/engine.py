"""Generic signature-based Groebner basis engine.

One increment takes a Groebner basis ``G_prev`` of ``<f_1..f_i>`` and a new
generator ``f`` and returns labeled polynomials whose nonzero, non-redundant
members form a Groebner basis of ``<G_prev, f>``.  Old basis elements carry
signatures ``e_1..e_i`` and the new generator ``e_{i+1}``; critical pairs are
processed by ascending signature, degree batch by degree batch, and a
strategy supplies the syzygy set, the pruning of equal-signature batches and
the reduction mode.
"""
from __future__ import annotations

import heapq
import logging
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .monomial import EQ, GT, LT, Monomial, MonomialOrder
from .poly import Polynomial, PolyRing, ReducerTable, s_polynomial
from .strategies import COMPLETE, SEMI_COMPLETE, StrategyConfig, get_strategy

log = logging.getLogger(__name__)


class EngineError(RuntimeError):
    pass


class InputInIdeal(EngineError):
    """The new generator already lies in the ideal of the previous basis."""


class PairCeilingExceeded(EngineError):
    pass


class EngineTimeout(EngineError):
    pass


# ---------------------------------------------------------------------------
# signatures


@dataclass(frozen=True)
class MonSig:
    """Monic module monomial ``monomial * e_index``."""

    monomial: Monomial
    index: int

    def row(self) -> np.ndarray:
        return self.monomial.row()

    def __repr__(self):
        return f"MonSig({self.monomial.exponents}, e{self.index})"


def sig_cmp(a: MonSig, b: MonSig, order: MonomialOrder | None = None) -> int:
    """Position over term: the index decides, then the monomial."""
    if a.index != b.index:
        return GT if a.index > b.index else LT
    order = order or MonomialOrder(a.monomial.nvars)
    return order.cmp(a.monomial, b.monomial)


def sig_mul(t: Monomial, s: MonSig) -> MonSig:
    return MonSig(t * s.monomial, s.index)


def _key(row) -> tuple:
    return MonomialOrder.row_key(row)


@dataclass
class LabeledPoly:
    sig: MonSig
    poly: Polynomial
    age: int
    redundant: bool = False

    @property
    def syzygy(self) -> bool:
        return self.poly.is_zero()


@dataclass
class CriticalPair:
    """Oriented pair: ``u*sig(pos)`` is strictly above ``v*sig(neg)``."""

    sig_row: tuple
    index: int
    pos: int
    neg: int
    lcm_row: tuple
    seq: int
    spoly: Optional[Polynomial] = field(default=None, repr=False)

    @property
    def sig(self) -> MonSig:
        return MonSig(Monomial(self.sig_row[1:]), self.index)

    @property
    def lcm(self) -> Monomial:
        return Monomial(self.lcm_row[1:])

    @property
    def degree(self) -> int:
        return self.sig_row[0]

    def key(self) -> tuple:
        return _key(self.sig_row)


@dataclass
class EngineStats:
    pairs_reduced: int = 0
    zero_reductions: int = 0
    pairs_created: int = 0
    pruned_syz: int = 0
    pruned_rewritten: int = 0
    redundant: int = 0
    reduction_steps: int = 0
    increments: int = 0
    # filled only when invariant checking is on
    checks: dict = field(default_factory=lambda: {
        "fixpoints": 0, "type_a_left": 0, "type_b_left": 0,
        "redundancy_calls": 0, "redundancy_disagree": 0,
        "gs_calls": 0, "gs_disagree": 0, "orientation_bad": 0,
        "order_bad": 0, "no_expansion": 0, "pairs_checked": 0,
    })

    def merge(self, other: "EngineStats"):
        for k, v in vars(other).items():
            if k == "checks":
                for ck, cv in v.items():
                    self.checks[ck] += cv
            else:
                setattr(self, k, getattr(self, k) + v)


@dataclass
class ModuleWitness:
    """Cofactors of every entry with respect to ``inputs`` (= G_prev + [f])."""

    inputs: list
    entries: list  # of (LabeledPoly, dict[int, Polynomial])


class SyzygySet:
    """Monomials ``t`` such that ``t*e_{i+1}`` is a known syzygy signature."""

    def __init__(self, width: int):
        self._rows = np.zeros((16, width), np.int32)
        self.count = 0

    def add(self, row):
        if self.count == self._rows.shape[0]:
            grown = np.zeros((2 * self.count, self._rows.shape[1]), np.int32)
            grown[: self.count] = self._rows
            self._rows = grown
        self._rows[self.count] = row
        self.count += 1

    @property
    def rows(self):
        return self._rows[: self.count]

    @property
    def monomials(self) -> set:
        return {Monomial.from_row(r) for r in self.rows}

    def divides(self, row) -> bool:
        if not self.count:
            return False
        return kernels.find_divisor(np.asarray(row, np.int32), self.rows,
                                    np.ones(self.count, np.bool_)) >= 0


# ---------------------------------------------------------------------------


class EngineState:
    """Everything one increment mutates; confined to the running engine."""

    def __init__(self, ring: PolyRing, index: int):
        self.ring = ring
        self.index = index
        self.G: list[LabeledPoly] = []
        self.table = ReducerTable(ring)
        self.redundant = np.zeros(64, np.bool_)
        self.P: list[CriticalPair] = []
        self.S: list = []
        self.degree = -1
        self.syz = SyzygySet(ring.width)
        self.cofactors: Optional[list] = None
        self.seq = 0
        self.last_key: Optional[tuple] = None

    def flags(self):
        return self.redundant[: len(self.G)]

    def current(self):
        """Mask of entries carrying the new index."""
        return self.table.sigi == self.index

    def add_entry(self, entry: LabeledPoly):
        n = len(self.G)
        if n == self.redundant.shape[0]:
            grown = np.zeros(2 * n, np.bool_)
            grown[:n] = self.redundant
            self.redundant = grown
        self.redundant[n] = entry.redundant
        self.G.append(entry)
        self.table.append(entry.poly, entry.sig.row(), entry.sig.index)


class SignatureEngine:
    """Runs increments of the signature-based algorithm under a strategy.

    ``tail_reduce`` enables sigma-safe tail reduction, ``certify`` tracks
    cofactors for every entry, ``check`` re-verifies the reduction and
    redundancy invariants after each reduction with independent code.
    """

    def __init__(self, ring: PolyRing, strategy: StrategyConfig | str = "arri", *,
                 tail_reduce: bool = False, certify: bool = False,
                 check: bool = False, max_pairs: Optional[int] = None,
                 deadline: Optional[float] = None):
        self.ring = ring
        self.strategy = get_strategy(strategy) if isinstance(strategy, str) else strategy
        self.tail_reduce = tail_reduce
        self.certify = certify
        self.check = check
        self.max_pairs = max_pairs
        self.deadline = deadline
        self.stats = EngineStats()
        self.witnesses: list[ModuleWitness] = []
        self.trace: list[tuple] = []
        self.state: Optional[EngineState] = None

    # -- increment ----------------------------------------------------------
    def basis_step(self, G_prev: Sequence[Polynomial], f_new: Polynomial) -> list[LabeledPoly]:
        ring = self.ring
        if not f_new:
            raise InputInIdeal("the new generator is zero")
        if G_prev:
            from .poly import top_reduce_full
            if not top_reduce_full(f_new, list(G_prev)):
                raise InputInIdeal("the new generator lies in the ideal of G_prev")
        idx = len(G_prev) + 1
        st = self.state = EngineState(ring, idx)
        one = Monomial.one(ring.nvars)
        for j, g in enumerate(G_prev, start=1):
            st.add_entry(LabeledPoly(MonSig(one, j), g, age=j - 1))
        st.add_entry(LabeledPoly(MonSig(one, idx), f_new, age=idx - 1))
        if self.certify:
            st.cofactors = [{k: ring.one} for k in range(idx)]
        self.stats.increments += 1
        if G_prev:
            self._make_pairs(idx - 1, initial=True)
        self.strategy.init_syz(st)
        self._loop()
        if self.certify:
            self.witnesses.append(ModuleWitness(
                inputs=list(G_prev) + [f_new],
                entries=list(zip(st.G, st.cofactors))))
        return st.G

    def _loop(self):
        st = self.state
        while st.P:
            # prune P by the syzygy set, then take the lowest degree batch
            kept = []
            for pr in st.P:
                if st.syz.divides(pr.sig_row):
                    self.stats.pruned_syz += 1
                else:
                    kept.append(pr)
            if not kept:
                st.P = []
                break
            d = min(pr.degree for pr in kept)
            st.degree = d
            st.S = []
            st.P = []
            for pr in kept:
                if pr.degree == d:
                    heapq.heappush(st.S, (pr.key(), pr.seq, pr))
                else:
                    st.P.append(pr)
            while st.S:
                key, _, first = heapq.heappop(st.S)
                group = [first]
                while st.S and st.S[0][0] == key:
                    group.append(heapq.heappop(st.S)[2])
                self._process_group(group)

    def _process_group(self, group: list[CriticalPair]):
        st = self.state
        strategy = self.strategy
        while group:
            kept = []
            for pr in group:
                if st.syz.divides(pr.sig_row):
                    self.stats.pruned_syz += 1
                else:
                    kept.append(pr)
            chosen = strategy.prune_S(st, kept, self)
            self.stats.pruned_rewritten += len(kept) - len(chosen)
            if not chosen:
                return
            pr = chosen[0]
            self._reduce_pair(pr)
            group = chosen[1:]
            if strategy.single_per_signature:
                self.stats.pruned_rewritten += len(group)
                return

    # -- reduction ----------------------------------------------------------
    def spoly(self, pr: CriticalPair) -> Polynomial:
        if pr.spoly is None:
            st = self.state
            pr.spoly = s_polynomial(st.G[pr.pos].poly, st.G[pr.neg].poly)
        return pr.spoly

    def _reduce_pair(self, pr: CriticalPair):
        st = self.state
        ring = self.ring
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise EngineTimeout("deadline reached")
        if self.max_pairs is not None and self.stats.pairs_reduced >= self.max_pairs:
            raise PairCeilingExceeded(
                f"more than {self.max_pairs} pairs reduced; aborting")
        key = pr.key()
        if self.check and st.last_key is not None and key < st.last_key:
            self.stats.checks["order_bad"] += 1
        st.last_key = key
        self.trace.append((st.index, pr.sig_row))

        poly, cof = self.strategy.reduction_input(st, pr, self)
        sig = pr.sig
        sig_row = np.asarray(pr.sig_row, np.int32)
        complete = self.strategy.reduction_mode == COMPLETE
        tab = st.table
        if cof is None:
            m, c, sig_c, steps = kernels.sig_reduce(
                poly.monos, poly.coeffs, sig_row, st.index, 1, tab.pool_m,
                tab.pool_c, tab.starts, tab.ends, tab.lm, tab.dmask, tab.lcinv, tab.sigm,
                tab.sigi, tab.active, complete, self.tail_reduce, ring.p)
            r = Polynomial(ring, m, c)
        else:
            r, sig_c, steps, cof = self._reduce_tracked(poly, cof, sig_row, complete)
        sig_c = int(sig_c)
        if sig_c != 1:
            inv = ring.field.inv(sig_c)
            r = r.scale(inv)
            if cof is not None:
                cof = {k: h.scale(inv) for k, h in cof.items()}
        self.stats.reduction_steps += int(steps)
        self.stats.pairs_reduced += 1
        entry = LabeledPoly(sig, r, age=len(st.G))
        if r.is_zero():
            self.stats.zero_reductions += 1
        self.strategy.update_syz(st, entry)
        if self.check:
            self._check_fixpoint(entry, complete)
        if r:
            entry.redundant = self.strategy.is_redundant(st, entry, self)
            if entry.redundant:
                self.stats.redundant += 1
        new = len(st.G)
        st.add_entry(entry)
        if cof is not None:
            st.cofactors.append(cof)
        if r and not entry.redundant:
            self._make_pairs(new)

    def _reduce_tracked(self, poly, cof, sig_row, complete):
        """Stepwise sigma-reduction carrying cofactors along."""
        st = self.state
        ring = self.ring
        p = ring.p
        tab = st.table
        m, c = poly.monos, poly.coeffs
        sig_c = 1
        steps = 0
        out_m, out_c = [], []
        top = True
        while m.shape[0]:
            j = kernels.find_sig_reducer(
                m[0], c[0], sig_row, st.index, sig_c, tab.lm, tab.dmask, tab.lcinv, tab.sigm,
                tab.sigi, tab.active, complete, not top, p)
            if j < 0:
                if top and not self.tail_reduce:
                    break
                top = False
                out_m.append(m[0])
                out_c.append(c[0])
                m, c = m[1:], c[1:]
                continue
            a = int(c[0]) * int(tab.lcinv[j]) % p
            t = (m[0] - tab.lm[j]).astype(np.int32)
            if (top and tab.sigi[j] == st.index
                    and np.array_equal(t + tab.sigm[j], sig_row)):
                sig_c = (sig_c - a) % p
            g = st.G[j].poly
            m, c = kernels.sub_mul(m, c, a, t, g.monos, g.coeffs, p)
            tm = Monomial.from_row(t)
            for k, h in st.cofactors[j].items():
                cof[k] = cof.get(k, ring.zero) - h.mul_term(a, tm)
            steps += 1
        if out_m:
            m = np.concatenate([np.array(out_m, np.int32).reshape(-1, ring.width), m])
            c = np.concatenate([np.array(out_c, np.int64), c])
        cof = {k: h for k, h in cof.items() if h}
        return Polynomial(ring, m, c), sig_c, steps, cof

    # -- pairs --------------------------------------------------------------
    def _make_pairs(self, new: int, initial: bool = False):
        st = self.state
        tab = st.table
        n = len(st.G)
        eligible = tab.active & ~st.flags()
        eligible[new] = False
        lm_r = tab.lm[new]
        others, mus, rpos = kernels.pair_candidates(
            lm_r, tab.sigm[new], st.index, tab.lm[:n], tab.sigm[:n], tab.sigi[:n],
            eligible[:n])
        if others.shape[0] == 0:
            return
        lcms = np.maximum(tab.lm[others], lm_r)
        lcms[:, 0] = lcms[:, 1:].sum(axis=1)
        d = st.degree
        for j, mu, rp, lcm in zip(others.tolist(), mus.tolist(), rpos.tolist(),
                                  lcms.tolist()):
            pos, neg = (new, j) if rp else (j, new)
            mu = tuple(mu)
            if st.syz.count and st.syz.divides(mu):
                self.stats.pruned_syz += 1
                continue
            pr = CriticalPair(mu, st.index, pos, neg, tuple(lcm), st.seq)
            st.seq += 1
            self.stats.pairs_created += 1
            if self.check:
                self._check_orientation(pr)
            if not initial and mu[0] == d:
                heapq.heappush(st.S, (pr.key(), pr.seq, pr))
            else:
                st.P.append(pr)

    # -- independent invariant checks ---------------------------------------
    def _multiplied(self, j: int, t: Monomial) -> MonSig:
        return sig_mul(t, self.state.G[j].sig)

    def _check_orientation(self, pr: CriticalPair):
        st = self.state
        p, q = st.G[pr.pos], st.G[pr.neg]
        lcm = p.poly.lm.lcm(q.poly.lm)
        up = sig_mul(lcm / p.poly.lm, p.sig)
        vq = sig_mul(lcm / q.poly.lm, q.sig)
        self.stats.checks["pairs_checked"] += 1
        if (sig_cmp(up, vq, self.ring.order) != GT or up != pr.sig
                or lcm != pr.lcm):
            self.stats.checks["orientation_bad"] += 1

    def _check_fixpoint(self, entry: LabeledPoly, complete: bool):
        """No type-(A) reducer is left; nor type (B), in either mode."""
        ck = self.stats.checks
        ck["fixpoints"] += 1
        r = entry.poly
        if not r:
            return
        order = self.ring.order
        lm, lc = r.lm, r.lc
        for g in self.state.G:
            if not g.poly or not g.poly.lm.divides(lm):
                continue
            ms = sig_mul(lm / g.poly.lm, g.sig)
            s = sig_cmp(ms, entry.sig, order)
            if s == LT:
                ck["type_a_left"] += 1
            elif s == EQ and lc != g.poly.lc:
                ck["type_b_left"] += 1


def sigma_reduce(entry: tuple[MonSig, Polynomial], G: Sequence[LabeledPoly],
                 mode: str = SEMI_COMPLETE, tail: bool = False) -> tuple[MonSig, Polynomial]:
    """Sigma-reduce ``(sig, poly)`` modulo ``G`` and return the monic-signature result."""
    sig, poly = entry
    ring = poly.ring
    tab = ReducerTable(ring, capacity=max(len(G), 1))
    for g in G:
        tab.append(g.poly, g.sig.row(), g.sig.index)
    m, c, sig_c, _ = kernels.sig_reduce(
        poly.monos, poly.coeffs, sig.row(), sig.index, 1, tab.pool_m, tab.pool_c,
        tab.starts, tab.ends, tab.lm, tab.dmask, tab.lcinv, tab.sigm, tab.sigi, tab.active,
        mode == COMPLETE, tail, ring.p)
    r = Polynomial(ring, m, c)
    if int(sig_c) != 1:
        r = r.scale(ring.field.inv(int(sig_c)))
    return sig, r


def is_sig_redundant(sig: MonSig, lm: Monomial, G: Sequence[LabeledPoly]) -> bool:
    """Equality form: some ``g`` of the same index and ``t`` with
    ``t*sig(g) = sig`` and ``t*lm(g) = lm``."""
    for g in G:
        if g.sig.index != sig.index or not g.poly:
            continue
        if not g.sig.monomial.divides(sig.monomial):
            continue
        t = sig.monomial / g.sig.monomial
        if t * g.poly.lm == lm:
            return True
    return False


def is_sig_redundant_divisibility(sig: MonSig, lm: Monomial,
                                  G: Sequence[LabeledPoly]) -> bool:
    """The defining form: ``sig(g) | sig`` and ``lm(g) | lm``."""
    return any(g.sig.index == sig.index and g.poly
               and g.sig.monomial.divides(sig.monomial)
               and g.poly.lm.divides(lm) for g in G)


def make_pairs(new: LabeledPoly, G: Sequence[LabeledPoly], d: int):
    """Pairs of ``new`` with every nonzero, non-redundant entry of ``G``.

    Returns ``(into_S, into_P)`` as lists of ``(sig, pos, neg)`` with ``pos``
    and ``neg`` indices into ``G`` (``len(G)`` stands for ``new``).
    """
    order = new.poly.ring.order
    into_S, into_P = [], []
    me = len(G)
    for j, g in enumerate(G):
        if not g.poly or g.redundant:
            continue
        lcm = new.poly.lm.lcm(g.poly.lm)
        a = sig_mul(lcm / new.poly.lm, new.sig)
        b = sig_mul(lcm / g.poly.lm, g.sig)
        s = sig_cmp(a, b, order)
        if s == EQ:
            continue
        item = (a, me, j) if s == GT else (b, j, me)
        (into_S if item[0].monomial.degree == d else into_P).append(item)
    return into_S, into_P


def certify(witness: ModuleWitness) -> bool:
    """Check ``sum h_k f_k == poly`` and that the top cofactor's leading
    monomial (with coefficient 1) is the signature, for each nonzero entry."""
    inputs = witness.inputs
    top = len(inputs) - 1
    for entry, cof in witness.entries:
        if not entry.poly:
            continue
        ring = entry.poly.ring
        total = ring.zero
        for k, h in cof.items():
            total = total + h * inputs[k]
        if total != entry.poly:
            return False
        if entry.sig.index - 1 == top:
            h = cof.get(top)
            if h is None or not h:
                return False
            if h.lm != entry.sig.monomial or h.lc != 1:
                return False
        else:
            if any(k > entry.sig.index - 1 and h for k, h in cof.items()):
                return False
    return True


@dataclass
class GBResult:
    basis: list
    stats: EngineStats
    skipped_inputs: list
    witnesses: list
    labeled: list  # labeled polynomials of the last increment


def incremental_gb(F: Sequence[Polynomial], strategy: StrategyConfig | str = "arri", *,
                   tail_reduce: bool = False, certify: bool = False,
                   check: bool = False, use_redundancy_check: bool = True,
                   max_pairs: Optional[int] = None,
                   timeout: Optional[float] = None) -> GBResult:
    """Reduced Groebner basis of ``<F>``, adding one generator per increment.

    Inputs are made monic; an input already in the ideal of its
    predecessors is skipped (and listed in ``skipped_inputs``).  Between
    increments the basis is interreduced.
    """
    from .oracle import interreduce, normal_form

    if isinstance(strategy, str):
        strategy = get_strategy(strategy)
    if not use_redundancy_check:
        strategy = strategy.with_options(use_redundancy_check=False)
    F = list(F)
    if not F:
        raise ValueError("empty input system")
    ring = F[0].ring
    if any(f.ring != ring for f in F):
        raise ValueError("inputs live in different rings")
    deadline = time.monotonic() + timeout if timeout else None
    eng = SignatureEngine(ring, strategy, tail_reduce=tail_reduce,
                          certify=certify, check=check, max_pairs=max_pairs,
                          deadline=deadline)
    G: list[Polynomial] = []
    skipped = []
    labeled: list = []
    for k, f in enumerate(F):
        if not f:
            skipped.append(k)
            continue
        f = f.monic()
        if G and not normal_form(f, G):
            log.warning("input %d lies in the ideal of the previous inputs; skipped", k)
            skipped.append(k)
            continue
        labeled = eng.basis_step(G, f)
        G = interreduce([e.poly for e in labeled if e.poly and not e.redundant],
                        assume_groebner=True)
    return GBResult(G, eng.stats, skipped, eng.witnesses, labeled)
