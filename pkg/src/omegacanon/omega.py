"""Deterministic ω-automata: acceptance on ultimately periodic words,
language equivalence of states, the leading right congruence and the
periodic progress DFAs."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .core import (
    Dfa,
    Structure,
    condense,
    is_scc,
    minimize_moore,
    product,
    run_finite,
    sccs,
    strongly_connected_subsets,
)
from .errors import CapacityError, ContractError, InputError
from .words import UPWord

DEFAULT_CAP = 12
PROFILE_LIMIT = 200_000


def default_cap() -> int:
    """Enumeration cap per MSCC, overridable through ``OMEGACANON_CAP``."""
    raw = os.environ.get("OMEGACANON_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"OMEGACANON_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InputError("OMEGACANON_CAP must be positive")
    return cap


# ---------------------------------------------------------------------------
# acceptance conditions


@dataclass(frozen=True)
class Buchi:
    F: frozenset

    kind = "buchi"

    def __post_init__(self):
        object.__setattr__(self, "F", frozenset(self.F))

    def accepts_inf(self, inf) -> bool:
        return not self.F.isdisjoint(inf)

    def parity_colors(self, n: int) -> tuple:
        return tuple(0 if q in self.F else 1 for q in range(n))

    def check(self, n: int):
        _check_states(self.F, n)


@dataclass(frozen=True)
class CoBuchi:
    F: frozenset

    kind = "cobuchi"

    def __post_init__(self):
        object.__setattr__(self, "F", frozenset(self.F))

    def accepts_inf(self, inf) -> bool:
        return self.F.isdisjoint(inf)

    def parity_colors(self, n: int) -> tuple:
        return tuple(1 if q in self.F else 2 for q in range(n))

    def check(self, n: int):
        _check_states(self.F, n)


@dataclass(frozen=True)
class Parity:
    """Min-even parity: a run accepts iff its least recurring color is even."""

    kappa: tuple

    kind = "parity"

    def __post_init__(self):
        object.__setattr__(self, "kappa", tuple(self.kappa))

    def accepts_inf(self, inf) -> bool:
        return min(self.kappa[q] for q in inf) % 2 == 0

    def parity_colors(self, n: int) -> tuple:
        return self.kappa

    def check(self, n: int):
        if len(self.kappa) != n:
            raise InputError(f"parity needs {n} colors, got {len(self.kappa)}")
        for c in self.kappa:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise InputError(f"bad color {c!r}")


@dataclass(frozen=True)
class Muller:
    alpha: tuple  # tuple of frozensets

    kind = "muller"

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.alpha)
        if len(set(sets)) != len(sets):
            raise InputError("Muller table contains duplicate sets")
        object.__setattr__(self, "alpha", sets)

    def accepts_inf(self, inf) -> bool:
        return frozenset(inf) in self.alpha

    def parity_colors(self, n: int):
        return None

    def check(self, n: int):
        for s in self.alpha:
            _check_states(s, n)


def _check_states(states, n):
    for q in states:
        if not isinstance(q, int) or not 0 <= q < n:
            raise InputError(f"state {q!r} out of range")


@dataclass(frozen=True)
class OmegaAutomaton:
    structure: Structure
    acceptance: object

    def __post_init__(self):
        self.acceptance.check(self.structure.state_count)

    @property
    def alphabet(self):
        return self.structure.alphabet

    @property
    def state_count(self) -> int:
        return self.structure.state_count

    def accepts(self, w: UPWord) -> bool:
        return accepts_up(self, w)

    def with_initial(self, q: int) -> "OmegaAutomaton":
        return OmegaAutomaton(self.structure.with_initial(q), self.acceptance)


# ---------------------------------------------------------------------------
# runs on ultimately periodic words


def _read(structure: Structure, q: int, v) -> tuple:
    """State after ``v`` from ``q`` and the set of states entered on the way."""
    seen = set()
    delta = structure.delta
    for a in v:
        q = delta[q][a]
        seen.add(q)
    return q, seen


def lasso_inf(structure: Structure, w: UPWord, start: int | None = None) -> frozenset:
    """The set of states visited infinitely often on ``w``."""
    q = run_finite(structure, structure.initial if start is None else start, w.u)
    run_finite(structure, q, w.v)  # validates the period
    index = {}
    blocks = []
    while q not in index:
        index[q] = len(blocks)
        nxt, seen = _read(structure, q, w.v)
        blocks.append(seen)
        q = nxt
    inf = set()
    for seen in blocks[index[q]:]:
        inf |= seen
    return frozenset(inf)


def accepts_up(m: OmegaAutomaton, w: UPWord) -> bool:
    return m.acceptance.accepts_inf(lasso_inf(m.structure, w))


def accepting_scc(m: OmegaAutomaton, states) -> bool:
    s = frozenset(states)
    if not is_scc(m.structure, s):
        raise ContractError(f"{sorted(s)} is not an SCC")
    return m.acceptance.accepts_inf(s)


# ---------------------------------------------------------------------------
# language equivalence


def _lasso_through(succ, component, start) -> tuple:
    """A nonempty word leading from ``start`` through every node of
    ``component`` and back, staying inside it.  ``succ(x)`` yields
    ``(symbol, y)`` pairs."""
    comp = set(component)
    word = []
    cur = start
    for target in sorted(comp - {start}) + [start]:
        word.extend(_inner_path(succ, comp, cur, target))
        cur = target
    return tuple(word)


def _inner_path(succ, comp, src, dst) -> list:
    """Shortest nonempty path from ``src`` to ``dst`` inside ``comp``."""
    parent = {}
    queue = deque()
    for a, y in succ(src):
        if y in comp and y not in parent:
            parent[y] = (src, a)
            queue.append(y)
    while dst not in parent:
        x = queue.popleft()
        for a, y in succ(x):
            if y in comp and y not in parent:
                parent[y] = (x, a)
                queue.append(y)
    path = []
    y = dst
    while True:
        x, a = parent[y]
        path.append(a)
        if x == src:
            break
        y = x
    path.reverse()
    return path


def _path_word(structure: Structure, start: int, target: int) -> tuple:
    words = structure.access_words(start)
    return words[target]


def _parity_disagreement(nodes, succ, c1, c2, want1):
    """A strongly connected node set where side 1 has acceptance ``want1``
    and side 2 the opposite, or None."""
    dec = condense(nodes, succ)
    for comp, ok in zip(dec.components, dec.nontrivial):
        if not ok:
            continue
        m1 = min(c1(x) for x in comp)
        m2 = min(c2(x) for x in comp)
        good1 = (m1 % 2 == 0) == want1
        good2 = (m2 % 2 == 0) != want1
        if good1 and good2:
            return comp
        if not good1:
            sub = [x for x in comp if c1(x) != m1]
        else:
            sub = [x for x in comp if c2(x) != m2]
        found = _parity_disagreement(sub, succ, c1, c2, want1)
        if found is not None:
            return found
    return None


def _reachable_scsets(structure: Structure, cap: int) -> list:
    out = []
    dec = sccs(structure)
    for comp, ok in zip(dec.components, dec.nontrivial):
        if ok:
            out.extend(strongly_connected_subsets(structure, comp, cap))
    return out


def distinguishing_word(
    m1: OmegaAutomaton, m2: OmegaAutomaton, cap: int | None = None
) -> UPWord | None:
    """An ultimately periodic word accepted by exactly one of the two
    automata (each read from its initial state), or None if the languages
    coincide."""
    if m1.alphabet != m2.alphabet:
        raise InputError("alphabet mismatch")
    prod, tuples = product(m1.structure, m2.structure)
    k = len(prod.alphabet)

    def succ(x):
        return prod.delta[x]

    def labelled(x):
        return ((a, prod.delta[x][a]) for a in range(k))

    nodes = prod.reachable()
    col1 = m1.acceptance.parity_colors(m1.state_count)
    col2 = m2.acceptance.parity_colors(m2.state_count)
    comp = None
    if col1 is not None and col2 is not None:
        for want in (True, False):
            comp = _parity_disagreement(
                nodes,
                succ,
                lambda x: col1[tuples[x][0]],
                lambda x: col2[tuples[x][1]],
                want,
            )
            if comp is not None:
                break
    else:
        cap = default_cap() if cap is None else cap
        sets1 = _reachable_scsets(m1.structure, cap)
        sets2 = _reachable_scsets(m2.structure, cap)
        acc1 = {s: m1.acceptance.accepts_inf(s) for s in sets1}
        acc2 = {s: m2.acceptance.accepts_inf(s) for s in sets2}
        for a1 in sets1:
            for a2 in sets2:
                if acc1[a1] == acc2[a2]:
                    continue
                inside = [x for x in nodes if tuples[x][0] in a1 and tuples[x][1] in a2]
                dec = condense(inside, succ)
                for c, ok in zip(dec.components, dec.nontrivial):
                    if not ok:
                        continue
                    if {tuples[x][0] for x in c} == a1 and {tuples[x][1] for x in c} == a2:
                        comp = c
                        break
                if comp is not None:
                    break
            if comp is not None:
                break
    if comp is None:
        return None
    anchor = min(comp)
    u = _path_word(prod, prod.initial, anchor)
    v = _lasso_through(labelled, comp, anchor)
    return UPWord(u, v)


def state_equiv(m: OmegaAutomaton, q1: int, q2: int, cap: int | None = None) -> bool:
    """True iff the ω-languages accepted from ``q1`` and from ``q2`` agree."""
    for q in (q1, q2):
        if not 0 <= q < m.state_count:
            raise InputError(f"state {q} out of range")
    if q1 == q2:
        return True
    return distinguishing_word(m.with_initial(q1), m.with_initial(q2), cap) is None


def equivalent(m1: OmegaAutomaton, m2: OmegaAutomaton, cap: int | None = None) -> bool:
    return distinguishing_word(m1, m2, cap) is None


# ---------------------------------------------------------------------------
# leading congruence


@dataclass(frozen=True)
class LeadingCongruence:
    """The quotient of an ω-automaton by language equivalence of states.

    Classes are numbered in BFS order from the class of the initial state.
    """

    structure: Structure
    class_of: dict  # reachable automaton state -> class
    representatives: tuple  # class -> an automaton state in it
    access: tuple  # class -> shortest word reaching it

    @property
    def size(self) -> int:
        return self.structure.state_count

    def class_of_word(self, word) -> int:
        return self.structure.run(word)


def leading_congruence(m: OmegaAutomaton, cap: int | None = None) -> LeadingCongruence:
    reach = m.structure.reachable()
    reps = []
    block = {}
    for q in reach:
        for i, r in enumerate(reps):
            if state_equiv(m, r, q, cap):
                block[q] = i
                break
        else:
            block[q] = len(reps)
            reps.append(q)
    quotient = minimize_moore(m.structure, lambda q: block[q])
    class_of = quotient.state_map
    n = quotient.structure.state_count
    if n != len(reps):
        raise ContractError("language equivalence is not a congruence on this automaton")
    representatives = [None] * n
    for q in reach:
        if representatives[class_of[q]] is None:
            representatives[class_of[q]] = q
    access = quotient.structure.access_words()
    return LeadingCongruence(
        quotient.structure,
        class_of,
        tuple(representatives),
        tuple(access[c] for c in range(n)),
    )


# ---------------------------------------------------------------------------
# periodic progress DFAs


def _profile_accepts(m: OmegaAutomaton, profile: dict, start: int) -> bool:
    index = {}
    order = []
    q = start
    while q not in index:
        index[q] = len(order)
        order.append(q)
        q = profile[q][0]
    inf = set()
    for s in order[index[q]:]:
        inf |= profile[s][1]
    if not inf:
        return False
    return m.acceptance.accepts_inf(inf)


def periodic_progress_dfa(
    m: OmegaAutomaton, lc: LeadingCongruence | None = None, class_u: int = 0
) -> Dfa:
    """Minimal DFA for ``{v nonempty : u v^ω in L}`` where ``u`` is any word
    of the given leading class."""
    if lc is None:
        lc = leading_congruence(m)
    if not 0 <= class_u < lc.size:
        raise InputError(f"leading class {class_u} out of range")
    start = lc.representatives[class_u]
    domain = tuple(sorted(m.structure.reachable(start)))
    delta = m.structure.delta
    k = len(m.alphabet)

    def key(profile):
        return tuple((profile[q][0], frozenset(profile[q][1])) for q in domain)

    identity = {q: (q, frozenset()) for q in domain}
    ids = {key(identity): 0}
    profiles = [identity]
    rows = []
    i = 0
    while i < len(profiles):
        p = profiles[i]
        row = []
        for a in range(k):
            nxt = {}
            for q in domain:
                t, seen = p[q]
                t2 = delta[t][a]
                nxt[q] = (t2, seen | {t2})
            kk = key(nxt)
            if kk not in ids:
                if len(profiles) >= PROFILE_LIMIT:
                    raise CapacityError("too many transition profiles")
                ids[kk] = len(profiles)
                profiles.append(nxt)
            row.append(ids[kk])
        rows.append(tuple(row))
        i += 1
    accepting = [False] + [_profile_accepts(m, p, start) for p in profiles[1:]]
    raw = Structure(m.alphabet, tuple(rows), 0)
    quotient = minimize_moore(raw, accepting)
    acc = frozenset(j for j, o in enumerate(quotient.outputs) if o)
    return Dfa(quotient.structure, acc)


def periodic_fdfa(m: OmegaAutomaton, cap: int | None = None):
    """The periodic FDFA of the language of ``m`` (exact acceptance)."""
    from .fdfa import Fdfa, Mode

    lc = leading_congruence(m, cap)
    progress = tuple(periodic_progress_dfa(m, lc, c) for c in range(lc.size))
    return Fdfa(lc.structure, progress, Mode.EXACT)
