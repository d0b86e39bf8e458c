"""The persistent DFA of an FDFA and the diameter measure.

For a leading state ``u`` with progress DFA ``P`` (states ``0..n-1``,
initial ``0``) the persistent DFA tracks, for the period ``v`` read so far,
the vector ``(Q(u v), P(0, v), ..., P(n-1, v))``.  A vector is significant
when ``v`` loops on ``u`` in the leading structure, ``P(v) = P(v v)``, and
``P(q, v)`` lies on a ``v``-cycle for every ``q``; these are exactly the
periods ``v`` for which ``(u, v)`` is persistent.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import SccDecomposition, Structure, condense
from .errors import CapacityError, ContractError, InputError
from .fdfa import Fdfa

DEFAULT_NODE_CAP = 200_000

ACCEPTING = True
REJECTING = False


def _all_periodic(vec: tuple) -> bool:
    for k in range(len(vec)):
        first = vec[k]
        x = vec[first]
        steps = 0
        while x != first and steps < len(vec):
            x = vec[x]
            steps += 1
        if x != first:
            return False
    return True


@dataclass(frozen=True)
class PersistentDfa:
    fdfa: Fdfa
    leading_state: int
    structure: Structure  # node 0 is the empty period
    vectors: tuple  # node -> (j, i-vector); None for node 0
    accepting: tuple
    significant: tuple
    dec: SccDecomposition
    best: tuple  # component -> (longest chain starting accepting, starting rejecting)
    after: tuple  # component -> same, but only through strict successors

    @property
    def node_count(self) -> int:
        return self.structure.state_count

    def node_of(self, v) -> int:
        return self.structure.run(v)

    def polarity(self, comp: int):
        """Acceptance shared by the significant nodes of a component, or
        None when it has none."""
        for x in self.dec.components[comp]:
            if self.significant[x]:
                return self.accepting[x]
        return None

    def chain_from(self, node: int, polarity: bool) -> int:
        """Longest alternating chain of significant nodes reachable from
        ``node`` whose first element has the given acceptance."""
        return self.best[self.dec.component_of[node]][0 if polarity else 1]

    def longest_chain_from(self, node: int) -> int:
        return max(self.chain_from(node, ACCEPTING), self.chain_from(node, REJECTING))

    def maxalt(self, node: int) -> int:
        """Longest alternating chain starting at the significant ``node``."""
        if not self.significant[node]:
            raise ContractError(f"node {node} is not significant")
        pol = self.accepting[node]
        return 1 + self.after[self.dec.component_of[node]][1 if pol else 0]

    def relevant(self, node: int) -> bool:
        return self.longest_chain_from(node) > 0


def build_persistent_dfa(f: Fdfa, leading_state: int, cap: int = DEFAULT_NODE_CAP) -> PersistentDfa:
    if not 0 <= leading_state < f.leading.state_count:
        raise InputError(f"leading state {leading_state} out of range")
    p = f.progress[leading_state]
    pd = p.structure.delta
    ld = f.leading.delta
    n = p.state_count
    k = len(f.alphabet)
    identity = (leading_state, tuple(range(n)))

    vectors = [None]
    ids = {}
    rows = [[None] * k]
    queue = deque()

    def node(vec):
        if vec not in ids:
            if len(vectors) >= cap:
                raise CapacityError(f"persistent DFA exceeds {cap} nodes")
            ids[vec] = len(vectors)
            vectors.append(vec)
            rows.append([None] * k)
            queue.append(vec)
        return ids[vec]

    def step(vec, a):
        j, i = vec
        return ld[j][a], tuple(pd[x][a] for x in i)

    for a in range(k):
        rows[0][a] = node(step(identity, a))
    while queue:
        vec = queue.popleft()
        src = ids[vec]
        for a in range(k):
            rows[src][a] = node(step(vec, a))

    acc = [False]
    sig = [False]
    for vec in vectors[1:]:
        j, i = vec
        first = i[p.initial]
        acc.append(first in p.accepting)
        sig.append(j == leading_state and i[first] == first and _all_periodic(i))

    structure = Structure(f.alphabet, tuple(tuple(r) for r in rows), 0)
    dec = condense(range(len(vectors)), structure.successors)

    pol = []
    for comp in dec.components:
        seen = {acc[x] for x in comp if sig[x]}
        if len(seen) > 1:
            raise ContractError(
                f"leading state {leading_state}: a component of the persistent DFA mixes "
                "accepting and rejecting significant nodes; the FDFA is not saturated"
            )
        pol.append(seen.pop() if seen else None)

    best = [None] * len(dec)
    after = [None] * len(dec)
    for c in reversed(range(len(dec))):
        nxt = [0, 0]
        for d in dec.condensation[c]:
            nxt[0] = max(nxt[0], best[d][0])
            nxt[1] = max(nxt[1], best[d][1])
        after[c] = tuple(nxt)
        cur = list(nxt)
        if pol[c] is not None:
            mine = 0 if pol[c] else 1
            cur[mine] = max(cur[mine], 1 + nxt[1 - mine])
        best[c] = tuple(cur)

    return PersistentDfa(
        f, leading_state, structure, tuple(vectors), tuple(acc), tuple(sig), dec,
        tuple(best), tuple(after),
    )


def persistent_dfas(f: Fdfa, cap: int = DEFAULT_NODE_CAP) -> tuple:
    return tuple(build_persistent_dfa(f, q, cap) for q in range(f.leading.state_count))


def is_persistent(f: Fdfa, u, v, pdfa: PersistentDfa | None = None) -> bool:
    v = tuple(v)
    if not v:
        raise InputError("period must be nonempty")
    q = f.leading.run(u)
    if pdfa is None or pdfa.leading_state != q:
        pdfa = build_persistent_dfa(f, q)
    return pdfa.significant[pdfa.node_of(v)]


@dataclass(frozen=True)
class DiameterMeasure:
    d_plus: int
    d_minus: int


def diameter(f: Fdfa, cap: int = DEFAULT_NODE_CAP) -> DiameterMeasure:
    plus = minus = 0
    for q in f.leading.reachable():
        pd = build_persistent_dfa(f, q, cap)
        plus = max(plus, pd.chain_from(0, ACCEPTING))
        minus = max(minus, pd.chain_from(0, REJECTING))
    return DiameterMeasure(plus, minus)


def _path(structure: Structure, src: int, dst: int) -> tuple:
    """Shortest nonempty word from ``src`` to ``dst``."""
    parent = {}
    queue = deque()
    for a, y in enumerate(structure.delta[src]):
        if y not in parent:
            parent[y] = (src, a)
            queue.append(y)
    while dst not in parent:
        x = queue.popleft()
        for a, y in enumerate(structure.delta[x]):
            if y not in parent:
                parent[y] = (x, a)
                queue.append(y)
    word = []
    y = dst
    while True:
        x, a = parent[y]
        word.append(a)
        if x == src:
            break
        y = x
    return tuple(reversed(word))


def persistent_chain_witness(f: Fdfa, polarity: bool, k: int) -> tuple | None:
    """``(u, [v1, ..., vk])``: a persistent chain of length ``k`` whose
    first period has the given acceptance, each period a proper prefix of
    the next; None if the diameter is smaller."""
    if k < 1:
        raise InputError("chain length must be positive")
    for q in f.leading.reachable():
        pd = build_persistent_dfa(f, q)
        if pd.chain_from(0, polarity) < k:
            continue
        dec = pd.dec
        nodes = []
        cur_comp = dec.component_of[0]
        want = polarity
        remaining = k
        # walk down the condensation following the DP values
        while remaining:
            comp = cur_comp
            while True:
                if pd.polarity(comp) == want and 1 + pd.after[comp][1 if want else 0] >= remaining:
                    break
                comp = next(
                    d for d in sorted(dec.condensation[comp])
                    if pd.best[d][0 if want else 1] >= remaining
                )
            node = min(x for x in dec.components[comp] if pd.significant[x])
            nodes.append(node)
            remaining -= 1
            want = not want
            if remaining:
                cur_comp = next(
                    d for d in sorted(dec.condensation[comp])
                    if pd.best[d][0 if want else 1] >= remaining
                )
        u = f.leading.access_words()[q]
        periods = []
        v = ()
        prev = 0
        for node in nodes:
            v = v + _path(pd.structure, prev, node)
            periods.append(v)
            prev = node
        for i, v in enumerate(periods):
            if not is_persistent(f, u, v, pd) or (pd.accepting[pd.node_of(v)] != (polarity if i % 2 == 0 else not polarity)):
                raise ContractError("constructed chain failed verification")
        return u, periods
    return None
