"""Bundled example machines.

The running example is the language of words with infinitely many ``aa``
and finitely many ``bb``.  All fixtures use the alphabet ``{a, b}``.
"""

from __future__ import annotations

from .core import Alphabet, Dfa, Structure
from .fdfa import Fdfa, Mode
from .omega import Buchi, CoBuchi, Muller, OmegaAutomaton, Parity

AB = Alphabet(("a", "b"))

A, B = 0, 1


def _structure(rows, initial=0) -> Structure:
    return Structure(AB, tuple(tuple(r) for r in rows), initial)


# q0..q4 of the running example
_INF_AA_FIN_BB = [
    (1, 2),  # q0
    (3, 2),  # q1
    (1, 4),  # q2
    (3, 2),  # q3
    (1, 4),  # q4
]


def inf_aa_fin_bb_dma() -> OmegaAutomaton:
    """Muller automaton; the accepting sets are {q3} and {q1, q2, q3}."""
    return OmegaAutomaton(_structure(_INF_AA_FIN_BB), Muller([{3}, {1, 2, 3}]))


def inf_aa_fin_bb_dpa() -> OmegaAutomaton:
    return OmegaAutomaton(_structure(_INF_AA_FIN_BB), Parity([3, 3, 3, 2, 1]))


def inf_aa_dba() -> OmegaAutomaton:
    return OmegaAutomaton(_structure([(1, 0), (2, 0), (2, 0)]), Buchi({2}))


def fin_bb_dca() -> OmegaAutomaton:
    """Finitely many ``bb``: state 2 is entered on every second ``b`` in a row."""
    return OmegaAutomaton(_structure([(0, 1), (0, 2), (0, 2)]), CoBuchi({2}))


def fin_a_dca() -> OmegaAutomaton:
    """Finitely many ``a``."""
    return OmegaAutomaton(_structure([(1, 0), (1, 0)]), CoBuchi({1}))


def universal() -> OmegaAutomaton:
    return OmegaAutomaton(_structure([(0, 0)]), Buchi({0}))


def b_parity_dpa() -> OmegaAutomaton:
    """Infinitely many ``b``, or finitely many ``b`` with an even count.

    States are (parity of the number of b's, last letter): 0 = (even, a),
    1 = (odd, a), 2 = (even, b), 3 = (odd, b).
    """
    rows = [(0, 3), (1, 2), (0, 3), (1, 2)]
    return OmegaAutomaton(_structure(rows), Parity([2, 1, 0, 0]))


def big_muller(n: int = 13) -> OmegaAutomaton:
    """An ``n``-state ring on ``a``, with ``b`` resetting to state 0."""
    rows = [((q + 1) % n, 0) for q in range(n)]
    return OmegaAutomaton(_structure(rows), Muller([set(range(n))]))


# ---------------------------------------------------------------------------
# FDFAs


def _dfa(rows, accepting) -> Dfa:
    return Dfa(_structure(rows), frozenset(accepting))


_PARITY_LEADING = [(0, 1), (1, 0)]


def b_parity_f1() -> Fdfa:
    """Normalized acceptance; progress states p1, p2, p3 and pp1, pp2, pp3."""
    p_eps = _dfa([(1, 2), (1, 2), (2, 1)], {1})
    p_b = _dfa([(1, 2), (1, 2), (2, 2)], {2})
    return Fdfa(_structure(_PARITY_LEADING), (p_eps, p_b), Mode.NORMALIZED)


def b_parity_f2() -> Fdfa:
    """Duo-normalized acceptance; P_ε tells ``a`` and ``aa`` apart."""
    p_eps = _dfa([(1, 3), (2, 3), (2, 3), (3, 3)], {2, 3})
    p_b = _dfa([(1, 2), (1, 2), (2, 2)], {2})
    return Fdfa(_structure(_PARITY_LEADING), (p_eps, p_b), Mode.DUO)


FS_STATES = ("e", "a", "aa", "ab", "aab", "b", "ba", "baa", "baab", "bb")


def inf_aa_fin_bb_fs() -> Fdfa:
    """A 10-state progress DFA under normalized acceptance."""
    ix = {name: i for i, name in enumerate(FS_STATES)}
    trans = {
        "e": ("a", "b"),
        "a": ("aa", "ab"),
        "aa": ("aa", "aab"),
        "aab": ("aa", "bb"),
        "ab": ("a", "bb"),
        "b": ("ba", "bb"),
        "ba": ("baa", "b"),
        "baa": ("baa", "baab"),
        "baab": ("baa", "bb"),
        "bb": ("bb", "bb"),
    }
    rows = [tuple(ix[t] for t in trans[name]) for name in FS_STATES]
    acc = {ix[s] for s in ("a", "aa", "aab", "baa")}
    return Fdfa(_structure([(0, 0)]), (_dfa(rows, acc),), Mode.NORMALIZED)


CLUB_STATES = ("e", "a", "b", "aa", "aab", "bb")
CLUB_COLORS = (3, 3, 3, 2, 2, 1)


def inf_aa_fin_bb_colorful() -> Fdfa:
    """The colorful FDFA of the running example (duo-normalized)."""
    rows = [(1, 2), (3, 2), (1, 5), (3, 4), (3, 5), (5, 5)]
    return Fdfa(_structure([(0, 0)]), (_dfa(rows, {3, 4}),), Mode.DUO)


def inf_aa_fdfa() -> Fdfa:
    """Duo-normalized FDFA for infinitely many ``aa`` whose progress DFA
    alternates along a, ab, abaa."""
    rows = [(1, 2), (1, 2), (3, 2), (4, 2), (4, 4)]
    return Fdfa(_structure([(0, 0)]), (_dfa(rows, {1, 4}),), Mode.DUO)


def universal_fdfa() -> Fdfa:
    return Fdfa(_structure([(0, 0)]), (_dfa([(0, 0)], {0}),), Mode.DUO)


def unsaturated_fdfa() -> Fdfa:
    """``(ε, ab)`` and ``(a, ba)`` describe the same word but disagree."""
    return Fdfa(_structure([(0, 0)]), (_dfa([(1, 2), (1, 1), (2, 2)], {1}),), Mode.DUO)


AUTOMATA = {
    "inf-aa-fin-bb-dma": inf_aa_fin_bb_dma,
    "inf-aa-fin-bb-dpa": inf_aa_fin_bb_dpa,
    "inf-aa-dba": inf_aa_dba,
    "fin-bb-dca": fin_bb_dca,
    "fin-a-dca": fin_a_dca,
    "universal": universal,
    "b-parity-dpa": b_parity_dpa,
    "big-muller": big_muller,
}

FDFAS = {
    "b-parity-f1": b_parity_f1,
    "b-parity-f2": b_parity_f2,
    "inf-aa-fin-bb-fs": inf_aa_fin_bb_fs,
    "inf-aa-fin-bb-colorful": inf_aa_fin_bb_colorful,
    "inf-aa-fdfa": inf_aa_fdfa,
    "universal-fdfa": universal_fdfa,
    "unsaturated": unsaturated_fdfa,
}

# the four languages the property suites run on
LANGUAGES = ("inf-aa-fin-bb-dma", "inf-aa-dba", "b-parity-dpa", "universal")
