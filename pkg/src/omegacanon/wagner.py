"""Inclusion measures of deterministic ω-automata and the position of
their language in the Wagner hierarchy."""

from __future__ import annotations

from dataclasses import dataclass

from .core import sccs, strongly_connected_subsets
from .omega import OmegaAutomaton, default_cap


@dataclass(frozen=True)
class WagnerMeasure:
    m_plus: int
    m_minus: int


@dataclass(frozen=True)
class HierarchyClass:
    k: int
    polarity: str  # "plus", "minus" or "plus_minus"

    def __str__(self):
        sign = {"plus": "+", "minus": "-", "plus_minus": "±"}[self.polarity]
        return f"DM{sign}{self.k}"


def _chain_lengths(m: OmegaAutomaton, cap: int) -> list:
    """For every strongly connected subset S of a reachable MSCC, the pair
    (acceptance of S, longest alternating chain ending in S)."""
    out = []
    dec = sccs(m.structure)
    for comp, ok in zip(dec.components, dec.nontrivial):
        if not ok:
            continue
        subsets = strongly_connected_subsets(m.structure, comp, cap)
        subsets.sort(key=len)
        acc = {s: m.acceptance.accepts_inf(s) for s in subsets}
        length = {}
        for s in subsets:
            best = 1
            for t in subsets:
                if len(t) >= len(s):
                    break
                if acc[t] != acc[s] and t < s:
                    best = max(best, length[t] + 1)
            length[s] = best
            out.append((acc[s], best))
    return out


def inclusion_measures(m: OmegaAutomaton, cap: int | None = None) -> WagnerMeasure:
    """Longest alternating inclusion chains ``S1 ⊂ S2 ⊂ ... ⊂ Sk`` of
    strongly connected subsets; ``m_plus`` counts chains whose smallest
    element is accepting, ``m_minus`` those whose smallest is rejecting."""
    cap = default_cap() if cap is None else cap
    plus = minus = 0
    for accepting, length in _chain_lengths(m, cap):
        # the chain ending in S of length L starts with the polarity of S
        # flipped L-1 times; shorter suffixes of it start with either
        first_accepting = accepting if length % 2 else not accepting
        if first_accepting:
            plus = max(plus, length)
            minus = max(minus, length - 1)
        else:
            minus = max(minus, length)
            plus = max(plus, length - 1)
    return WagnerMeasure(plus, minus)


def classify(m: OmegaAutomaton, cap: int | None = None) -> HierarchyClass:
    return class_of_measure(inclusion_measures(m, cap))


def class_of_measure(w: WagnerMeasure) -> HierarchyClass:
    if w.m_plus == w.m_minus:
        return HierarchyClass(max(w.m_plus, 1), "plus_minus")
    if w.m_plus > w.m_minus:
        return HierarchyClass(w.m_plus, "plus")
    return HierarchyClass(w.m_minus, "minus")
