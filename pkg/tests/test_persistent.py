import pytest
from hypothesis import given, settings

from omegacanon import fixtures as fx
from omegacanon.core import Dfa, Structure, run_finite
from omegacanon.errors import CapacityError, ContractError, InputError
from omegacanon.fdfa import Fdfa, Mode
from omegacanon.omega import periodic_fdfa
from omegacanon.persistent import (
    ACCEPTING,
    REJECTING,
    DiameterMeasure,
    build_persistent_dfa,
    diameter,
    is_persistent,
    persistent_chain_witness,
)
from omegacanon.wagner import inclusion_measures
from omegacanon.words import words

from conftest import automata, w

FDFAS = sorted(n for n in fx.FDFAS if n != "unsaturated")


def _significant(f, u, v):
    """Word-level check: ``v`` loops on ``u``, ``P_u(v) = P_u(vv)``, and
    every ``P_u(x, v)`` returns to itself under some power of ``v``."""
    q = f.leading.run(u)
    if f.leading.run(v, q) != q:
        return False
    p = f.progress[q].structure
    if p.run(v) != p.run(v + v):
        return False
    for x in p.states:
        start = run_finite(p, x, v)
        y = run_finite(p, start, v)
        for _ in range(p.state_count):
            if y == start:
                break
            y = run_finite(p, y, v)
        if y != start:
            return False
    return True


def test_universal_fdfa():
    f = fx.universal_fdfa()
    assert diameter(f) == DiameterMeasure(1, 0)
    pd = build_persistent_dfa(f, 0)
    assert not pd.significant[0]
    assert all(pd.significant[x] and pd.accepting[x] for x in range(1, pd.node_count))


def test_persistent_examples():
    club = fx.inf_aa_fin_bb_colorful()
    assert is_persistent(club, (), w("bb"))
    assert not is_persistent(club, (), w("b"))
    assert not is_persistent(club, (), w("a"))
    g = fx.inf_aa_fdfa()
    assert not is_persistent(g, (), w("a"))
    for v in ("ab", "abaa", "aa", "b"):
        assert is_persistent(g, (), w(v))
    with pytest.raises(InputError):
        is_persistent(g, (), ())
    with pytest.raises(InputError):
        build_persistent_dfa(g, 7)


@pytest.mark.parametrize("name", FDFAS)
def test_significance_matches_word_oracle(name):
    f = fx.FDFAS[name]()
    for q in f.leading.reachable():
        pd = build_persistent_dfa(f, q)
        u = f.leading.access_words()[q]
        for v in words(2, 7, 1):
            assert pd.significant[pd.node_of(v)] == _significant(f, u, v)


def test_diameters_of_fixtures():
    expect = {
        "b-parity-f1": (1, 2),
        "b-parity-f2": (1, 2),
        "inf-aa-fin-bb-fs": (2, 3),
        "inf-aa-fin-bb-colorful": (2, 3),
        "inf-aa-fdfa": (1, 2),
        "universal-fdfa": (1, 0),
    }
    for name, (plus, minus) in expect.items():
        assert diameter(fx.FDFAS[name]()) == DiameterMeasure(plus, minus)


def _check_chain(f, polarity, k):
    got = persistent_chain_witness(f, polarity, k)
    assert got is not None
    u, periods = got
    assert len(periods) == k
    q = f.leading.run(u)
    for i, v in enumerate(periods):
        assert _significant(f, u, v)
        want = polarity if i % 2 == 0 else not polarity
        assert f.progress[q].accepts(v) == want
        if i:
            prev = periods[i - 1]
            assert len(prev) < len(v) and v[: len(prev)] == prev


def test_chain_witnesses():
    club = fx.inf_aa_fin_bb_colorful()
    _check_chain(club, REJECTING, 3)
    _check_chain(club, ACCEPTING, 2)
    assert persistent_chain_witness(club, REJECTING, 4) is None
    assert persistent_chain_witness(club, ACCEPTING, 3) is None
    g = fx.inf_aa_fdfa()
    _check_chain(g, REJECTING, 2)
    assert persistent_chain_witness(g, REJECTING, 3) is None
    with pytest.raises(InputError):
        persistent_chain_witness(g, ACCEPTING, 0)


def test_mixed_component_is_a_contract_error():
    # P accepts exactly the words ending in b: a and ab are both persistent
    # periods, in one component, with opposite acceptance
    lead = Structure(fx.AB, ((0, 0),))
    p = Dfa(Structure(fx.AB, ((0, 1), (0, 1))), frozenset({1}))
    with pytest.raises(ContractError):
        diameter(Fdfa(lead, (p,), Mode.DUO))


def test_node_cap():
    with pytest.raises(CapacityError):
        build_persistent_dfa(fx.inf_aa_fin_bb_fs(), 0, cap=3)


@settings(max_examples=60, deadline=None)
@given(automata(max_states=5))
def test_diameter_equals_wagner_measure(m):
    f = periodic_fdfa(m)
    d = diameter(f)
    wm = inclusion_measures(m)
    assert (d.d_plus, d.d_minus) == (wm.m_plus, wm.m_minus)
    for pol, k in ((ACCEPTING, d.d_plus), (REJECTING, d.d_minus)):
        if k:
            _check_chain(f, pol, k)
        assert persistent_chain_witness(f, pol, k + 1) is None


@settings(max_examples=40, deadline=None)
@given(automata(max_states=4))
def test_significance_on_periodic_fdfas(m):
    f = periodic_fdfa(m)
    for q in f.leading.reachable():
        pd = build_persistent_dfa(f, q)
        u = f.leading.access_words()[q]
        for v in words(2, 5, 1):
            x = pd.node_of(v)
            assert pd.significant[x] == _significant(f, u, v)
            if pd.significant[x]:
                assert pd.maxalt(x) >= 1
            else:
                with pytest.raises(ContractError):
                    pd.maxalt(x)
