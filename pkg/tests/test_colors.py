import pytest
from hypothesis import HealthCheck, given, settings

from omegacanon import fixtures as fx
from omegacanon.colors import (
    NEG_INF,
    ColorContext,
    brute_force_color,
    color_states_procedure,
    finite_color,
    finite_color_clamped,
    infinite_color,
    is_invariant,
    is_relevant,
    is_reliable,
)
from omegacanon.core import isomorphic
from omegacanon.errors import InputError
from omegacanon.fdfa import Mode, accepts, equivalence_witness
from omegacanon.omega import accepts_up, periodic_fdfa
from omegacanon.wagner import inclusion_measures
from omegacanon.words import UPWord, upwords, words

from conftest import automata, context, w


def up(u, v):
    return UPWord(w(u), w(v))


def test_finite_colors_of_running_example(running_ctx):
    table = {"a": 3, "aa": 2, "aabb": 1, "bb": 1}
    for v, c in table.items():
        assert finite_color(running_ctx, (), w(v)) == c
    # the leading congruence has one class, so the prefix does not matter
    for u in ("b", "ab", "bba"):
        for v, c in table.items():
            assert finite_color(running_ctx, w(u), w(v)) == c
    assert running_ctx.min_color_of_language == 1
    with pytest.raises(InputError):
        finite_color(running_ctx, (), ())


def test_infinite_colors_of_running_example(running_ctx):
    table = {("", "b"): 1, ("", "abaabb"): 1, ("", "abaa"): 2, ("", "ab"): 3, ("", "a"): 2}
    for (u, v), c in table.items():
        assert infinite_color(running_ctx, up(u, v)) == c
    # the DPA's run color coincides with the natural color here
    dpa = fx.inf_aa_fin_bb_dpa()
    for x in upwords(2, 2, 4):
        run_color = min(dpa.acceptance.kappa[q] for q in _inf(dpa, x))
        assert infinite_color(running_ctx, x) == run_color


def _inf(m, x):
    from omegacanon.omega import lasso_inf
    return lasso_inf(m.structure, x)


def test_min_colors():
    expect = {
        "inf-aa-fin-bb-dma": (1,),
        "inf-aa-dba": (0,),
        "b-parity-dpa": (0, 0),
        "universal": (0,),
        "fin-bb-dca": (1,),
        "fin-a-dca": (1,),
    }
    for name, mins in expect.items():
        assert context(name).min_colors == mins


def test_brute_force_agrees_on_running_example(running_ctx):
    for v in words(2, 4, 1):
        assert brute_force_color(running_ctx, (), v) == finite_color(running_ctx, (), v)
    with pytest.raises(InputError):
        brute_force_color(running_ctx, (), w("a"), rep_bound=0)


def test_relevance_and_reliability():
    ctx = context("b-parity-dpa")
    # after b the class flips on every b; a loops
    assert is_invariant(ctx, w("b"), w("a"))
    assert not is_invariant(ctx, w("b"), w("b"))
    assert is_relevant(ctx, w("b"), w("b"))
    assert not is_reliable(ctx, w("b"), w("b"))
    assert finite_color(ctx, (), w("b")) != NEG_INF
    running = context("inf-aa-fin-bb-dma")
    assert is_reliable(running, (), w("aa"))
    assert not is_reliable(running, (), w("a"))
    assert finite_color_clamped(running, (), w("a")) == 3


def test_irrelevant_periods():
    # a^ω is accepted only from q0; once a b is read the word can never return
    from omegacanon.core import Structure
    from omegacanon.omega import Buchi, OmegaAutomaton
    m = OmegaAutomaton(Structure(fx.AB, ((0, 1), (1, 1))), Buchi({0}))
    ctx = ColorContext(m)
    assert finite_color(ctx, (), w("b")) == NEG_INF
    assert not is_relevant(ctx, (), w("ab"))
    assert finite_color_clamped(ctx, (), w("b")) == ctx.min_color(())
    assert brute_force_color(ctx, (), w("b")) == NEG_INF


def test_colorful_fdfa_of_running_example(running_ctx):
    cf = running_ctx.colorful
    assert cf.colors == ((3, 3, 3, 2, 1, 2),)
    club = fx.inf_aa_fin_bb_colorful()
    p = cf.progress[0]
    assert isomorphic(p.structure, club.progress[0].structure, cf.colors[0], fx.CLUB_COLORS)
    assert color_states_procedure(cf) == cf.colors
    assert equivalence_witness(cf.fdfa, club) is None
    for v in ("a", "aa", "aabb", "bb"):
        assert cf.color_of((), w(v)) == finite_color(running_ctx, (), w(v))


@pytest.mark.parametrize("name", fx.LANGUAGES + ("fin-bb-dca", "fin-a-dca", "inf-aa-fin-bb-dpa"))
def test_colorful_fdfa_fixtures(name):
    ctx = context(name)
    m = ctx.automaton
    cf = ctx.colorful
    assert cf.fdfa.mode is Mode.DUO
    assert color_states_procedure(cf) == cf.colors
    for x in upwords(2, 2, 4):
        assert accepts(cf.fdfa, x) == accepts_up(m, x)
    for u in words(2, 2):
        for v in words(2, 5, 1):
            assert cf.color_of(u, v) == finite_color_clamped(ctx, u, v)


def test_colorful_equivalent_automata_give_isomorphic_fdfas():
    a, b = context("inf-aa-fin-bb-dma").colorful, context("inf-aa-fin-bb-dpa").colorful
    assert isomorphic(a.leading, b.leading)
    for pa, pb, ca, cb in zip(a.progress, b.progress, a.colors, b.colors):
        assert isomorphic(pa.structure, pb.structure, ca, cb)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(automata(max_states=4))
def test_colors_against_brute_force(m):
    ctx = ColorContext(m)
    n = m.state_count
    # extensions must be long enough to tour any strongly connected set
    for u in words(2, 1):
        for v in words(2, 3, 1):
            assert brute_force_color(ctx, u, v, z_bound=2 * n, rep_bound=n) == finite_color(ctx, u, v)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(automata(max_states=5))
def test_color_invariants(m):
    ctx = ColorContext(m)
    wm = inclusion_measures(m)
    top = max(wm.m_plus, wm.m_minus)
    seen = set()
    for u in words(2, 2):
        for v in words(2, 4, 1):
            c = finite_color(ctx, u, v)
            if c == NEG_INF:
                assert not is_relevant(ctx, u, v)
                continue
            seen.add(c)
            assert c >= ctx.min_color(u)
            # extensions never raise the color
            for z in words(2, 2):
                assert finite_color(ctx, u, v + z) <= c
            if is_reliable(ctx, u, v):
                assert (c % 2 == 0) == accepts_up(m, UPWord(u, v))
        for x in upwords(2, 1, 3):
            c = infinite_color(ctx, UPWord(u + x.u, x.v))
            assert (c % 2 == 0) == accepts_up(m, UPWord(u + x.u, x.v))
    # never more colors than a minimal parity automaton needs
    if seen:
        allowed = top + 1 if wm.m_plus == wm.m_minus else top
        assert max(seen) - min(seen) + 1 <= allowed
    cf = ctx.colorful
    assert color_states_procedure(cf) == cf.colors
    f = periodic_fdfa(m)
    assert equivalence_witness(cf.fdfa, f.with_mode(Mode.DUO)) is None
