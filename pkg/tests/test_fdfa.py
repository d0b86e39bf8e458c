import pytest
from hypothesis import given, settings

from omegacanon import fixtures as fx
from omegacanon.core import Alphabet, Dfa, Structure
from omegacanon.errors import InputError
from omegacanon.fdfa import (
    Fdfa,
    Mode,
    NormalizationKind as K,
    accepts,
    accepts_persistent_mode,
    check_saturation_bounded,
    complement,
    contains,
    emptiness_witness,
    equivalence_witness,
    equivalent,
    intersect,
    is_empty,
    is_normalized,
    is_universal,
    normalization_bound,
    normalize,
    union,
)
from omegacanon.omega import accepts_up, periodic_fdfa
from omegacanon.words import UPWord, canonical_up, upwords

from conftest import automata, w


def up(u, v):
    return UPWord(w(u), w(v))


FDFAS = sorted(n for n in fx.FDFAS if n != "unsaturated")


def test_validation():
    f = fx.b_parity_f1()
    with pytest.raises(InputError):
        Fdfa(f.leading, f.progress[:1], Mode.DUO)
    p = f.progress[0]
    moved = Dfa(p.structure.with_initial(1), p.accepting)
    with pytest.raises(InputError):
        Fdfa(f.leading, (moved, f.progress[1]), Mode.DUO)


def test_is_normalized_examples():
    f1, f2 = fx.b_parity_f1(), fx.b_parity_f2()
    assert is_normalized(f1, (), w("a"), K.NORMALIZED)
    assert not is_normalized(f1, (), w("b"), K.NORMALIZED)
    assert is_normalized(f2, (), w("aa"), K.DUO)
    assert not is_normalized(f2, (), w("a"), K.DUO)
    g = fx.inf_aa_fdfa()
    for v in ("a", "ab", "abaa"):
        assert is_normalized(g, (), w(v), K.DUO)
    assert is_normalized(f2, (), w("a"), K.EXACT)


def test_normalize_examples():
    f2 = fx.b_parity_f2()
    assert normalize(f2, up("", "aa"), K.DUO) == up("", "aa")
    assert normalize(f2, up("", "a"), K.DUO) == up("", "aa")
    club = fx.inf_aa_fin_bb_colorful()
    got = normalize(club, up("b", "ab"), K.DUO)
    # exhaustive search over i <= m, j <= 2mn, lexicographically least (i, j)
    m, jmax = normalization_bound(club)
    expect = next(
        UPWord(w("b") + w("ab") * i, w("ab") * j)
        for i in range(m + 1) for j in range(1, jmax + 1)
        if is_normalized(club, w("b") + w("ab") * i, w("ab") * j, K.DUO)
    )
    assert got == expect
    assert is_normalized(club, got.u, got.v, K.DUO)


def test_acceptance_mode_examples(running):
    f1, f2 = fx.b_parity_f1(), fx.b_parity_f2()
    assert accepts(f1, up("", "a"))
    assert not accepts(f2.with_mode(Mode.NORMALIZED), up("", "a"))
    assert accepts(f2, up("", "a"))
    club = fx.inf_aa_fin_bb_colorful()
    assert not accepts(club, up("", "bb"))
    assert not accepts_up(running, up("", "bb"))
    assert accepts_persistent_mode(f2, up("", "a"))
    assert not accepts_persistent_mode(club, up("", "bb"))


def test_complement_examples(running):
    f2 = fx.b_parity_f2()
    assert complement(complement(f2)) == f2
    assert not accepts(complement(f2), up("", "a"))
    assert accepts(complement(periodic_fdfa(running)), up("", "bb"))


def test_products_examples(running):
    aa = periodic_fdfa(fx.inf_aa_dba())
    bb = periodic_fdfa(fx.fin_bb_dca())
    both = intersect(aa, bb)
    for x in upwords(2, 2, 4):
        assert accepts(both, x) == accepts_up(running, x)
    with pytest.raises(InputError):
        intersect(aa, aa.with_mode(Mode.DUO))
    other = Fdfa(Structure(Alphabet(("x",)), ((0,),)), (Dfa(Structure(Alphabet(("x",)), ((0,),)), frozenset()),))
    with pytest.raises(InputError):
        union(aa, other)


def test_emptiness_examples(running):
    club = fx.inf_aa_fin_bb_colorful()
    none = Fdfa(club.leading, tuple(Dfa(p.structure, frozenset()) for p in club.progress), Mode.DUO)
    assert is_empty(none)
    x = emptiness_witness(club)
    assert x is not None and accepts(club, x) and accepts_up(running, x)
    assert is_empty(complement(fx.universal_fdfa()))
    assert is_universal(fx.universal_fdfa())


def test_decision_examples():
    fs, club = fx.inf_aa_fin_bb_fs(), fx.inf_aa_fin_bb_colorful()
    assert equivalent(club, club)
    assert equivalent(fs, club)
    for name in FDFAS:
        assert contains(fx.universal_fdfa(), fx.FDFAS[name]())
    x = equivalence_witness(fs, fx.inf_aa_fdfa())
    assert x is not None
    assert accepts(fs, x) != accepts(fx.inf_aa_fdfa(), x)


def test_saturation_examples(running):
    assert check_saturation_bounded(periodic_fdfa(running), 3, 4) is None
    good, bad = check_saturation_bounded(fx.unsaturated_fdfa(), 2, 3)
    assert canonical_up(good) == canonical_up(bad)
    f = fx.unsaturated_fdfa()
    assert f.progress_of(good.u).accepts(good.v) and not f.progress_of(bad.u).accepts(bad.v)
    one = Alphabet(("a",))
    s = Structure(one, ((0,),))
    assert check_saturation_bounded(Fdfa(s, (Dfa(s, frozenset({0})),), Mode.EXACT), 3, 3) is None
    with pytest.raises(InputError):
        check_saturation_bounded(f, 0, 0)


@pytest.mark.parametrize("name", FDFAS)
def test_fixture_algebra(name):
    f = fx.FDFAS[name]()
    comp = complement(f)
    for x in upwords(2, 2, 4, canonical_only=True):
        a = accepts(f, x)
        assert accepts(comp, x) != a
        assert accepts(intersect(f, comp), x) is False
        assert accepts(union(f, comp), x) is True
        assert accepts_persistent_mode(f, x) == accepts(f.with_mode(Mode.DUO), x)
        for kind in K:
            n = normalize(f, x, kind)
            assert is_normalized(f, n.u, n.v, kind)
            assert canonical_up(n) == canonical_up(x)
    assert is_empty(intersect(f, comp))
    assert is_universal(union(f, comp))


@settings(max_examples=30, deadline=None)
@given(automata(max_states=4), automata(max_states=4))
def test_boolean_operations_on_periodic_fdfas(m1, m2):
    f1, f2 = periodic_fdfa(m1), periodic_fdfa(m2)
    f1d, f2d = f1.with_mode(Mode.DUO), f2.with_mode(Mode.DUO)
    i, u = intersect(f1d, f2d), union(f1d, f2d)
    for x in upwords(2, 2, 3):
        a, b = accepts_up(m1, x), accepts_up(m2, x)
        # exact, normalized and duo acceptance coincide on the periodic FDFA
        for mode in Mode:
            assert accepts(f1.with_mode(mode), x) == a
        assert accepts(i, x) == (a and b)
        assert accepts(u, x) == (a or b)
    x = emptiness_witness(f1)
    if x is None:
        assert not any(accepts_up(m1, y) for y in upwords(2, 3, 4))
    else:
        assert accepts(f1, x) and accepts_up(m1, x)
    d = equivalence_witness(f1, f2)
    if d is not None:
        assert accepts_up(m1, d) != accepts_up(m2, d)
    else:
        assert all(accepts_up(m1, y) == accepts_up(m2, y) for y in upwords(2, 2, 4))
