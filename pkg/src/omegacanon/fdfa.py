"""Families of DFAs: acceptance modes, normalization, Boolean operations
and decision procedures.

All answers assume the FDFA is saturated for its mode, that is, every
admissible decomposition of an ω-word agrees on membership.
:func:`check_saturation_bounded` tests this on short words.
"""

from __future__ import annotations

import enum
from collections import defaultdict, deque
from dataclasses import dataclass

from .core import Dfa, Structure, product
from .errors import ContractError, InputError
from .words import UPWord, canonical_up, upwords


class Mode(enum.Enum):
    EXACT = "exact"
    NORMALIZED = "normalized"
    DUO = "duo"

    @property
    def kind(self) -> "NormalizationKind":
        return NormalizationKind[self.name]


class NormalizationKind(enum.IntEnum):
    EXACT = 0
    NORMALIZED = 1
    DUO = 2
    PERSISTENT = 3


@dataclass(frozen=True)
class Fdfa:
    leading: Structure
    progress: tuple  # progress[q] is the progress DFA of leading state q
    mode: Mode = Mode.DUO

    def __post_init__(self):
        progress = tuple(self.progress)
        object.__setattr__(self, "progress", progress)
        if not isinstance(self.mode, Mode):
            object.__setattr__(self, "mode", Mode(self.mode))
        if len(progress) != self.leading.state_count:
            raise InputError(
                f"{self.leading.state_count} leading states but {len(progress)} progress DFAs"
            )
        for q, p in enumerate(progress):
            if p.alphabet != self.leading.alphabet:
                raise InputError(f"progress DFA {q} has a different alphabet")
            if p.initial != 0:
                raise InputError(f"progress DFA {q} must start in state 0")

    @property
    def alphabet(self):
        return self.leading.alphabet

    def leading_state(self, u) -> int:
        return self.leading.run(u)

    def progress_of(self, u) -> Dfa:
        return self.progress[self.leading.run(u)]

    def with_mode(self, mode: Mode) -> "Fdfa":
        return Fdfa(self.leading, self.progress, Mode(mode))

    def accepts(self, w: UPWord) -> bool:
        return accepts(self, w)

    @property
    def size(self) -> tuple:
        return self.leading.state_count, max(p.state_count for p in self.progress)


def progress_accepts(f: Fdfa, u, v) -> bool:
    """Whether ``v`` is accepted by the progress DFA of ``u`` (no
    normalization applied)."""
    return f.progress_of(u).accepts(v)


def _weakly_normalized_everywhere(p: Dfa, v) -> bool:
    s = p.structure
    for q in s.states:
        first = s.run(v, q)
        x = first
        seen = set()
        while x not in seen:
            seen.add(x)
            x = s.run(v, x)
            if x == first:
                break
        else:
            return False
    return True


def is_normalized(f: Fdfa, u, v, kind: NormalizationKind) -> bool:
    u, v = tuple(u), tuple(v)
    if not v:
        raise InputError("period must be nonempty")
    kind = NormalizationKind(kind)
    if kind == NormalizationKind.EXACT:
        return True
    q = f.leading.run(u)
    if f.leading.run(v, q) != q:
        return False
    if kind == NormalizationKind.NORMALIZED:
        return True
    p = f.progress[q]
    after = p.run(v)
    if p.run(v, after) != after:
        return False
    if kind == NormalizationKind.DUO:
        return True
    return _weakly_normalized_everywhere(p, v)


def normalization_bound(f: Fdfa) -> tuple:
    m, n = f.size
    return m, 2 * m * n


def normalize(f: Fdfa, w: UPWord, kind: NormalizationKind) -> UPWord:
    """``(x y^i, y^j)`` for ``w = (x, y)`` satisfying ``kind``, with the
    lexicographically least ``(i, j)``."""
    kind = NormalizationKind(kind)
    max_i, max_j = normalization_bound(f)
    x, y = w.u, w.v
    for i in range(max_i + 1):
        u = x + y * i
        for j in range(1, max_j + 1):
            if is_normalized(f, u, y * j, kind):
                return UPWord(u, y * j)
    raise ContractError(f"no {kind.name.lower()} decomposition within the proven bounds")


def accepts(f: Fdfa, w: UPWord) -> bool:
    n = normalize(f, w, f.mode.kind)
    return progress_accepts(f, n.u, n.v)


def accepts_persistent_mode(f: Fdfa, w: UPWord) -> bool:
    n = normalize(f, w, NormalizationKind.PERSISTENT)
    return progress_accepts(f, n.u, n.v)


# ---------------------------------------------------------------------------
# Boolean operations


def complement(f: Fdfa) -> Fdfa:
    return Fdfa(f.leading, tuple(p.complement() for p in f.progress), f.mode)


def _combine(f1: Fdfa, f2: Fdfa, both: bool) -> Fdfa:
    if f1.alphabet != f2.alphabet:
        raise InputError("alphabet mismatch")
    if f1.mode != f2.mode:
        raise InputError(f"mode mismatch: {f1.mode.value} vs {f2.mode.value}")
    leading, pairs = product(f1.leading, f2.leading)
    progress = []
    for q1, q2 in pairs:
        p1, p2 = f1.progress[q1], f2.progress[q2]
        s, tuples = product(p1.structure, p2.structure)
        if both:
            acc = [i for i, (a, b) in enumerate(tuples) if a in p1.accepting and b in p2.accepting]
        else:
            acc = [i for i, (a, b) in enumerate(tuples) if a in p1.accepting or b in p2.accepting]
        progress.append(Dfa(s, frozenset(acc)))
    return Fdfa(leading, tuple(progress), f1.mode)


def intersect(f1: Fdfa, f2: Fdfa) -> Fdfa:
    return _combine(f1, f2, True)


def union(f1: Fdfa, f2: Fdfa) -> Fdfa:
    return _combine(f1, f2, False)


# ---------------------------------------------------------------------------
# decision procedures


def emptiness_witness(f: Fdfa) -> UPWord | None:
    """An accepted word, or None if the FDFA accepts nothing.

    For each leading state ``q`` and accepting progress state ``t`` this
    searches a nonempty ``y`` with ``Q(q, y) = q``, ``P_q(y) = t`` and
    ``P_q(t, y) = t``, so that ``(u, y)`` is duo-normalized and accepted.
    """
    lead = f.leading
    access = lead.access_words()
    k = len(f.alphabet)
    for q in sorted(access):
        p = f.progress[q]
        pd = p.structure.delta
        for t in sorted(p.accepting & set(p.structure.reachable())):
            goal = (q, t, t)
            parent = {}
            queue = deque()

            def push(x, prev, a):
                if x not in parent:
                    parent[x] = (prev, a)
                    queue.append(x)

            for a in range(k):
                push((lead.delta[q][a], pd[p.initial][a], pd[t][a]), None, a)
            while queue and goal not in parent:
                j, s1, s2 = cur = queue.popleft()
                for a in range(k):
                    push((lead.delta[j][a], pd[s1][a], pd[s2][a]), cur, a)
            if goal in parent:
                y = []
                x = goal
                while x is not None:
                    prev, a = parent[x]
                    y.append(a)
                    x = prev
                return UPWord(access[q], tuple(reversed(y)))
    return None


def is_empty(f: Fdfa) -> bool:
    return emptiness_witness(f) is None


def universality_witness(f: Fdfa) -> UPWord | None:
    """A rejected word, or None."""
    return emptiness_witness(complement(f))


def is_universal(f: Fdfa) -> bool:
    return universality_witness(f) is None


def _common_mode(f1: Fdfa, f2: Fdfa) -> tuple:
    # saturation for a weaker mode implies saturation, with the same
    # language, for every stronger one
    if f1.mode == f2.mode:
        return f1, f2
    return f1.with_mode(Mode.DUO), f2.with_mode(Mode.DUO)


def inclusion_witness(big: Fdfa, small: Fdfa) -> UPWord | None:
    """A word accepted by ``small`` but not by ``big``, or None."""
    big, small = _common_mode(big, small)
    return emptiness_witness(intersect(small, complement(big)))


def contains(big: Fdfa, small: Fdfa) -> bool:
    return inclusion_witness(big, small) is None


def equivalence_witness(f1: Fdfa, f2: Fdfa) -> UPWord | None:
    return inclusion_witness(f1, f2) or inclusion_witness(f2, f1)


def equivalent(f1: Fdfa, f2: Fdfa) -> bool:
    return equivalence_witness(f1, f2) is None


def check_saturation_bounded(f: Fdfa, max_u: int, max_v: int) -> tuple | None:
    """Two decompositions of the same ω-word, both admissible for the
    FDFA's mode, that disagree on membership; or None.  Decompositions
    range over ``|x| <= max_u`` and ``1 <= |y| <= max_v``."""
    if max_u < 0 or max_v < 1:
        raise InputError("saturation bounds must be max_u >= 0 and max_v >= 1")
    kind = f.mode.kind
    groups = defaultdict(dict)
    for w in upwords(len(f.alphabet), max_u, max_v):
        if not is_normalized(f, w.u, w.v, kind):
            continue
        verdict = progress_accepts(f, w.u, w.v)
        group = groups[canonical_up(w)]
        if (not verdict) in group:
            other = group[not verdict]
            return (w, other) if verdict else (other, w)
        group.setdefault(verdict, w)
    return None
