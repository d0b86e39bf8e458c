"""Complete deterministic automaton structures and the graph machinery
used by every other module.

States are dense integers ``0..n-1`` and symbols are referred to by their
index in the alphabet.  All iteration is in (state, symbol) index order so
that every construction is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .errors import InputError

Word = tuple  # tuple[int, ...] of symbol indices


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple

    def __post_init__(self):
        syms = tuple(self.symbols)
        object.__setattr__(self, "symbols", syms)
        if not syms:
            raise InputError("alphabet must be nonempty")
        if len(set(syms)) != len(syms):
            raise InputError(f"duplicate symbols in alphabet {syms!r}")
        for s in syms:
            if not isinstance(s, str) or not s or any(c.isspace() for c in s):
                raise InputError(f"bad symbol {s!r}")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise InputError(f"symbol {symbol!r} not in alphabet {self.symbols}") from None

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def parse(self, text) -> Word:
        """Turn a string of one-character symbols (or a sequence of symbol
        names, or of indices) into a word."""
        if isinstance(text, str):
            if not self.single_char:
                return tuple(self.index(s) for s in text.split())
            return tuple(self.index(c) for c in text)
        out = []
        for s in text:
            if isinstance(s, int):
                if not 0 <= s < len(self.symbols):
                    raise InputError(f"symbol index {s} out of range")
                out.append(s)
            else:
                out.append(self.index(s))
        return tuple(out)

    def render(self, word: Sequence[int]) -> str:
        sep = "" if self.single_char else " "
        return sep.join(self.symbols[i] for i in word)


@dataclass(frozen=True)
class Structure:
    """A complete deterministic automaton structure (alphabet, states,
    initial state, transition table)."""

    alphabet: Alphabet
    delta: tuple  # delta[state][symbol] -> state
    initial: int = 0

    def __post_init__(self):
        delta = tuple(tuple(row) for row in self.delta)
        object.__setattr__(self, "delta", delta)
        n, k = len(delta), len(self.alphabet)
        if n == 0:
            raise InputError("structure needs at least one state")
        if not 0 <= self.initial < n:
            raise InputError(f"initial state {self.initial} out of range")
        for q, row in enumerate(delta):
            if len(row) != k:
                raise InputError(
                    f"state {q} has {len(row)} transitions, alphabet has {k} symbols"
                )
            for t in row:
                if not isinstance(t, int) or not 0 <= t < n:
                    raise InputError(f"transition target {t!r} from state {q} out of range")

    @property
    def state_count(self) -> int:
        return len(self.delta)

    @property
    def states(self) -> range:
        return range(len(self.delta))

    def step(self, q: int, a: int) -> int:
        return self.delta[q][a]

    def run(self, word: Sequence[int], start: int | None = None) -> int:
        return run_finite(self, self.initial if start is None else start, word)

    def successors(self, q: int) -> tuple:
        return self.delta[q]

    def reachable(self, start: int | None = None) -> list:
        """States reachable from ``start`` in BFS order."""
        start = self.initial if start is None else start
        seen = {start}
        order = [start]
        queue = deque([start])
        while queue:
            q = queue.popleft()
            for t in self.delta[q]:
                if t not in seen:
                    seen.add(t)
                    order.append(t)
                    queue.append(t)
        return order

    def access_words(self, start: int | None = None) -> dict:
        """Shortest (length-lexicographic) word reaching each reachable state."""
        start = self.initial if start is None else start
        words = {start: ()}
        queue = deque([start])
        while queue:
            q = queue.popleft()
            for a, t in enumerate(self.delta[q]):
                if t not in words:
                    words[t] = words[q] + (a,)
                    queue.append(t)
        return words

    def with_initial(self, q: int) -> "Structure":
        return Structure(self.alphabet, self.delta, q)


@dataclass(frozen=True)
class Dfa:
    structure: Structure
    accepting: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        acc = frozenset(self.accepting)
        object.__setattr__(self, "accepting", acc)
        for q in acc:
            if not 0 <= q < self.structure.state_count:
                raise InputError(f"accepting state {q} out of range")

    @property
    def alphabet(self) -> Alphabet:
        return self.structure.alphabet

    @property
    def initial(self) -> int:
        return self.structure.initial

    @property
    def state_count(self) -> int:
        return self.structure.state_count

    def run(self, word, start=None) -> int:
        return self.structure.run(word, start)

    def accepts(self, word) -> bool:
        return self.structure.run(word) in self.accepting

    def complement(self) -> "Dfa":
        return Dfa(self.structure, frozenset(self.structure.states) - self.accepting)


def run_finite(structure: Structure, start: int, word: Sequence[int]) -> int:
    """State reached from ``start`` after reading ``word``."""
    q = start
    delta = structure.delta
    k = len(structure.alphabet)
    for a in word:
        if not isinstance(a, int) or not 0 <= a < k:
            raise InputError(f"invalid symbol index {a!r}")
        q = delta[q][a]
    return q


# ---------------------------------------------------------------------------
# strongly connected components


@dataclass(frozen=True)
class SccDecomposition:
    """SCCs of a (restricted) transition graph.

    ``components`` is in topological order of the condensation: an edge
    from component i to component j (i != j) implies i < j.
    ``nontrivial[i]`` is False for a singleton without a self-loop, which
    does not count as an SCC.
    """

    components: tuple
    component_of: dict
    condensation: tuple  # condensation[i] = frozenset of successor component ids
    nontrivial: tuple

    def __len__(self):
        return len(self.components)

    def terminal(self, i: int) -> bool:
        return not self.condensation[i]

    def mscc(self) -> list:
        """The maximal SCCs proper (nontrivial components)."""
        return [c for c, ok in zip(self.components, self.nontrivial) if ok]


def condense(nodes: Iterable[Hashable], succ: Callable[[Hashable], Iterable]) -> SccDecomposition:
    """Tarjan's algorithm (iterative) over the subgraph induced by ``nodes``.

    ``succ(x)`` may yield nodes outside ``nodes``; those edges are ignored.
    """
    nodes = list(nodes)
    inside = set(nodes)
    index = {}
    low = {}
    on_stack = set()
    stack = []
    found = []  # reverse topological order
    counter = 0
    succ_cache = {}

    def successors(x):
        if x not in succ_cache:
            seen = []
            for y in succ(x):
                if y in inside and y not in seen:
                    seen.append(y)
            succ_cache[x] = seen
        return succ_cache[x]

    for root in nodes:
        if root in index:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            x, i = work[-1]
            out = successors(x)
            if i < len(out):
                work[-1] = (x, i + 1)
                y = out[i]
                if y not in index:
                    index[y] = low[y] = counter
                    counter += 1
                    stack.append(y)
                    on_stack.add(y)
                    work.append((y, 0))
                elif y in on_stack:
                    low[x] = min(low[x], index[y])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[x])
            if low[x] == index[x]:
                comp = []
                while True:
                    y = stack.pop()
                    on_stack.discard(y)
                    comp.append(y)
                    if y == x:
                        break
                found.append(comp)

    found.reverse()
    components = tuple(frozenset(c) for c in found)
    component_of = {x: i for i, c in enumerate(found) for x in c}
    condensation = []
    nontrivial = []
    for i, comp in enumerate(found):
        targets = set()
        loop = False
        for x in comp:
            for y in successors(x):
                j = component_of[y]
                if j != i:
                    targets.add(j)
                elif y == x or len(comp) > 1:
                    loop = True
        condensation.append(frozenset(targets))
        nontrivial.append(loop)
    return SccDecomposition(components, component_of, tuple(condensation), tuple(nontrivial))


def sccs(structure: Structure, restrict_to: Iterable[int] | None = None) -> SccDecomposition:
    """SCC decomposition of the reachable part of ``structure`` or of the
    graph induced by ``restrict_to``."""
    if restrict_to is None:
        nodes = structure.reachable()
    else:
        nodes = sorted(set(restrict_to))
        for q in nodes:
            if not 0 <= q < structure.state_count:
                raise InputError(f"state {q} out of range")
    return condense(nodes, structure.successors)


def is_scc(structure: Structure, states: Iterable[int]) -> bool:
    """True iff ``states`` is strongly connected inside itself; a singleton
    needs a self-loop."""
    s = frozenset(states)
    if not s:
        return False
    delta = structure.delta
    if len(s) == 1:
        (q,) = s
        return q in delta[q]
    root = min(s)
    fwd = _closure(root, lambda q: (t for t in delta[q] if t in s))
    if fwd != s:
        return False
    preds = {q: [] for q in s}
    for q in s:
        for t in delta[q]:
            if t in s:
                preds[t].append(q)
    return _closure(root, lambda q: preds[q]) == s


def _closure(root, succ) -> frozenset:
    seen = {root}
    todo = [root]
    while todo:
        q = todo.pop()
        for t in succ(q):
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return frozenset(seen)


def strongly_connected_subsets(structure: Structure, component: Iterable[int], cap: int) -> list:
    """All strongly connected subsets of ``component`` (by bitmask
    enumeration).  Raises CapacityError above ``cap`` states."""
    from .errors import CapacityError

    comp = sorted(component)
    if len(comp) > cap:
        raise CapacityError(
            f"MSCC with {len(comp)} states exceeds the enumeration cap of {cap}"
        )
    out = []
    for mask in range(1, 1 << len(comp)):
        subset = frozenset(q for i, q in enumerate(comp) if mask >> i & 1)
        if is_scc(structure, subset):
            out.append(subset)
    return out


# ---------------------------------------------------------------------------
# products and quotients


def product(*structures: Structure) -> tuple:
    """Reachable synchronous product of one or more structures.

    Returns ``(structure, tuples)`` where ``tuples[p]`` is the tuple of
    component states of product state ``p``.
    """
    if not structures:
        raise InputError("product needs at least one structure")
    alphabet = structures[0].alphabet
    for s in structures[1:]:
        if s.alphabet != alphabet:
            raise InputError("alphabet mismatch in product")
    start = tuple(s.initial for s in structures)
    ids = {start: 0}
    tuples = [start]
    rows = []
    k = len(alphabet)
    i = 0
    while i < len(tuples):
        cur = tuples[i]
        row = []
        for a in range(k):
            nxt = tuple(s.delta[q][a] for s, q in zip(structures, cur))
            if nxt not in ids:
                ids[nxt] = len(tuples)
                tuples.append(nxt)
            row.append(ids[nxt])
        rows.append(tuple(row))
        i += 1
    return Structure(alphabet, tuple(rows), 0), tuple(tuples)


@dataclass(frozen=True)
class MooreQuotient:
    structure: Structure
    outputs: tuple  # per quotient state
    state_map: dict  # original reachable state -> quotient state


def minimize_moore(
    structure: Structure,
    output: Sequence[Hashable] | Callable[[int], Hashable],
    respect_initial_output: bool = True,
) -> MooreQuotient:
    """Coarsest output-respecting congruence on the reachable states
    (Moore partition refinement), numbered in BFS order from the initial
    state.

    With ``respect_initial_output=False`` the initial state's own output is
    not observed: if no nonempty word leads back to it, it is merged into
    the unique class whose successors match its successors, and otherwise
    kept as a class of its own.
    """
    out = output if callable(output) else output.__getitem__
    reach = structure.reachable()
    init = structure.initial
    delta = structure.delta
    k = len(structure.alphabet)

    ignore_init = not respect_initial_output and not any(
        init in delta[q] for q in reach
    )
    body = [q for q in reach if q != init] if ignore_init else reach

    block = {}
    keys = {}
    for q in body:
        block[q] = keys.setdefault(("o", out(q)), len(keys))
    while True:
        keys = {}
        new = {}
        for q in body:
            sig = (block[q],) + tuple(block[delta[q][a]] for a in range(k))
            new[q] = keys.setdefault(sig, len(keys))
        stable = len(keys) == len(set(block.values()))
        block = new
        if stable:
            break

    if ignore_init:
        sig = tuple(block[delta[init][a]] for a in range(k))
        matches = sorted({block[q] for q in body if tuple(block[delta[q][a]] for a in range(k)) == sig})
        if len(matches) == 1:
            block[init] = matches[0]
        else:
            block[init] = max(block.values(), default=-1) + 1

    # renumber blocks in BFS order from the initial state
    rep = {}
    for q in reach:
        rep.setdefault(block[q], q)
    numbering = {}
    queue = deque([block[init]])
    numbering[block[init]] = 0
    while queue:
        b = queue.popleft()
        q = rep[b]
        for a in range(k):
            nb = block[delta[q][a]]
            if nb not in numbering:
                numbering[nb] = len(numbering)
                queue.append(nb)
    rows = [None] * len(numbering)
    outs = [None] * len(numbering)
    for b, i in numbering.items():
        q = rep[b]
        rows[i] = tuple(numbering[block[delta[q][a]]] for a in range(k))
        outs[i] = out(q)
    if ignore_init and block[init] not in {block[q] for q in body}:
        outs[0] = None
    state_map = {q: numbering[block[q]] for q in reach}
    return MooreQuotient(Structure(structure.alphabet, tuple(rows), 0), tuple(outs), state_map)


def minimize_dfa(dfa: Dfa) -> Dfa:
    quotient = minimize_moore(dfa.structure, lambda q: q in dfa.accepting)
    acc = frozenset(i for i, o in enumerate(quotient.outputs) if o)
    return Dfa(quotient.structure, acc)


def canonical_numbering(structure: Structure) -> tuple:
    """Restrict to reachable states and renumber them in BFS order.

    Returns ``(structure, old_to_new)``.
    """
    order = structure.reachable()
    new = {q: i for i, q in enumerate(order)}
    rows = tuple(tuple(new[t] for t in structure.delta[q]) for q in order)
    return Structure(structure.alphabet, rows, 0), new


# ---------------------------------------------------------------------------
# DFA views


@dataclass(frozen=True)
class DfaViews:
    to_q: Dfa  # words from the initial state reaching q
    from_q: Dfa  # the DFA started in q
    from_q_to_q2: Dfa  # words leading from q to q2


def dfa_views(dfa: Dfa, q: int, q2: int) -> DfaViews:
    s = dfa.structure
    for x in (q, q2):
        if not 0 <= x < s.state_count:
            raise InputError(f"state {x} out of range")
    return DfaViews(
        Dfa(s, frozenset([q])),
        Dfa(s.with_initial(q), dfa.accepting),
        Dfa(s.with_initial(q), frozenset([q2])),
    )


def isomorphic(s1: Structure, s2: Structure, labels1=None, labels2=None) -> bool:
    """Isomorphism of the reachable parts of two structures (with optional
    per-state labels that must match)."""
    if s1.alphabet != s2.alphabet:
        return False
    m = {s1.initial: s2.initial}
    queue = deque([s1.initial])
    while queue:
        q = queue.popleft()
        p = m[q]
        if labels1 is not None and labels1[q] != labels2[p]:
            return False
        for a in range(len(s1.alphabet)):
            t1, t2 = s1.delta[q][a], s2.delta[p][a]
            if t1 in m:
                if m[t1] != t2:
                    return False
            else:
                m[t1] = t2
                queue.append(t1)
    return len(set(m.values())) == len(m) == len(s2.reachable())
