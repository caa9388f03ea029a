import pytest

from siggb import Monomial
from siggb.engine import (CriticalPair, EngineState, LabeledPoly, MonSig,
                          SignatureEngine, SyzygySet)
from siggb.strategies import (PRESETS, arri_rewritable, f5_rewritten, get_strategy,
                              ggv_retain, minmon_retain, nm_prune, reduce_minmon,
                              super_top_reducible)

M = lambda *e: Monomial(e)  # noqa: E731


def row(*e):
    return (sum(e),) + e


def build(ring, entries, index=2, strategy="arri"):
    st = EngineState(ring, index)
    for k, (sig, poly) in enumerate(entries):
        st.add_entry(LabeledPoly(sig, poly, age=k))
    eng = SignatureEngine(ring, strategy)
    eng.state = st
    return st, eng


def pair(sig, pos, neg, lcm, seq=0, index=2):
    return CriticalPair(row(*sig), index, pos, neg, row(*lcm), seq)


def test_nm_prune(R2):
    syz = SyzygySet(R2.width)
    pr = pair((2, 1), 1, 0, (2, 1))
    assert nm_prune([pr], syz) == [pr]
    syz.add(row(1, 0))
    assert nm_prune([pr], syz) == []


def test_f5_rewritten(R2):
    x, y = R2.gens
    st, _ = build(R2, [(MonSig(M(0, 0), 1), x**2 - y),
                       (MonSig(M(0, 0), 2), x * y - 1)])
    pr = pair((2, 1), 1, 0, (2, 1))
    assert not f5_rewritten(st, pr)
    st.add_entry(LabeledPoly(MonSig(M(0, 1), 2), y**3 + 1, age=2))
    assert f5_rewritten(st, pr)
    # a redundant later entry is not a rule
    st.redundant[2] = True
    assert not f5_rewritten(st, pr)


def test_ggv_retain(R2):
    x, y = R2.gens
    st, eng = build(R2, [(MonSig(M(0, 0), 1), x**2 - y),
                         (MonSig(M(0, 0), 2), x * y - 1),
                         (MonSig(M(1, 0), 2), y**2 - 1)])
    a = pair((1, 1), 1, 0, (2, 1), seq=0)
    b = pair((1, 1), 2, 0, (2, 2), seq=1)
    assert ggv_retain(st, [a], eng) == [a]
    assert ggv_retain(st, [a, b], eng) == [b]


def test_arri_rewritable(R2):
    x, y = R2.gens
    entries = [(MonSig(M(0, 0), 1), x**2 - y), (MonSig(M(0, 0), 2), x * y - 1)]
    pr = pair((1, 0), 1, 0, (2, 1))  # Spol = y^2 - x
    st, eng = build(R2, entries)
    assert not arri_rewritable(st, pr, eng)
    st, eng = build(R2, entries + [(MonSig(M(1, 0), 2), y + 1)])
    assert arri_rewritable(st, pr, eng)


def test_minmon_substitutes_sparser_multiple(R2):
    x, y = R2.gens
    entries = [(MonSig(M(0, 0), 1), x**2 + y + 1),
               (MonSig(M(0, 0), 2), x * y + x + y + 1)]
    pr = pair((1, 0), 1, 0, (2, 1))
    st, eng = build(R2, entries + [(MonSig(M(1, 0), 2), y**2 + 1)], strategy="minmon")
    assert len(eng.spoly(pr)) == 5
    poly, _ = reduce_minmon(st, pr, eng)
    assert poly == y**2 + 1


def test_minmon_keeps_spoly_without_sparser_entry(R2):
    x, y = R2.gens
    st, eng = build(R2, [(MonSig(M(0, 0), 1), x**2 - y),
                         (MonSig(M(0, 0), 2), x * y - 1)], strategy="minmon")
    pr = pair((1, 0), 1, 0, (2, 1))
    poly, _ = reduce_minmon(st, pr, eng)
    assert poly == eng.spoly(pr)


def test_minmon_retain_keeps_first(R2):
    x, y = R2.gens
    st, eng = build(R2, [(MonSig(M(0, 0), 1), x), (MonSig(M(0, 0), 2), y)])
    a, b = pair((1, 0), 1, 0, (1, 1), seq=4), pair((1, 0), 1, 0, (1, 1), seq=2)
    assert minmon_retain(st, [a, b], eng) == [b]


def test_super_top_reducible(R2):
    x, y = R2.gens
    st, eng = build(R2, [(MonSig(M(0, 0), 2), x - 1)], strategy="ggv")
    e = LabeledPoly(MonSig(M(0, 1), 2), x * y - y, 1)
    assert super_top_reducible(st, e, eng)
    e = LabeledPoly(MonSig(M(0, 1), 2), y**2, 1)
    assert not super_top_reducible(st, e, eng)


@pytest.mark.parametrize("alias,name", [("F5'", "f5p"), ("fr'", "f5p"), ("MM", "minmon"),
                                        ("bare", "none"), ("GGV", "ggv")])
def test_aliases(alias, name):
    assert get_strategy(alias) is PRESETS[name]


def test_unknown_strategy():
    with pytest.raises(ValueError):
        get_strategy("magma")


def test_with_options_disables_gate():
    s = get_strategy("arri").with_options(use_redundancy_check=False)
    assert not s.use_redundancy_check
    assert s.with_options(True).is_redundant is PRESETS["arri"].is_redundant
