import pytest
from hypothesis import strategies as st

from omegacanon import fixtures as fx
from omegacanon.colors import ColorContext
from omegacanon.core import Alphabet, Dfa, Structure
from omegacanon.omega import Buchi, CoBuchi, Muller, OmegaAutomaton, Parity

AB = fx.AB


def w(text):
    """Parse a word over {a, b}."""
    return AB.parse(text)


@st.composite
def structures(draw, max_states=6, k=2):
    n = draw(st.integers(1, max_states))
    rows = [tuple(draw(st.integers(0, n - 1)) for _ in range(k)) for _ in range(n)]
    alphabet = Alphabet(tuple("abc"[:k]))
    return Structure(alphabet, tuple(rows), 0)


@st.composite
def automata(draw, max_states=5, kinds=("buchi", "cobuchi", "parity", "muller")):
    s = draw(structures(max_states))
    n = s.state_count
    kind = draw(st.sampled_from(kinds))
    states = st.integers(0, n - 1)
    if kind == "buchi":
        acc = Buchi(draw(st.frozensets(states)))
    elif kind == "cobuchi":
        acc = CoBuchi(draw(st.frozensets(states)))
    elif kind == "parity":
        acc = Parity(tuple(draw(st.integers(0, 4)) for _ in range(n)))
    else:
        sets = draw(st.lists(st.frozensets(states, min_size=1), max_size=6, unique=True))
        acc = Muller(tuple(sets))
    return OmegaAutomaton(s, acc)


@st.composite
def dfas(draw, max_states=6):
    s = draw(structures(max_states))
    acc = draw(st.frozensets(st.integers(0, s.state_count - 1)))
    return Dfa(s, acc)


_CTX = {}


def context(name):
    if name not in _CTX:
        _CTX[name] = ColorContext(fx.AUTOMATA[name]())
    return _CTX[name]


@pytest.fixture
def running():
    return fx.inf_aa_fin_bb_dma()


@pytest.fixture
def running_ctx():
    return context("inf-aa-fin-bb-dma")
