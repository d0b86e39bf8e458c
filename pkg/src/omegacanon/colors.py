"""Natural colors of finite and infinite words, and the colorful FDFA.

Colors are read off the persistent DFAs of the periodic FDFA: the color of
a relevant period ``v`` after ``u`` is the length of the longest
alternating chain of significant nodes reachable from the node of ``v``,
minus one, plus the minimal color of ``u``.  Irrelevant periods get
``-inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .core import Dfa, Structure, condense, minimize_moore
from .errors import ContractError, InputError
from .fdfa import Fdfa, Mode, NormalizationKind, normalize
from .omega import OmegaAutomaton, leading_congruence, periodic_progress_dfa
from .persistent import build_persistent_dfa
from .words import UPWord

NEG_INF = -math.inf
EPSILON = "ε"


class ColorContext:
    """A language together with everything needed to color its words."""

    def __init__(self, m: OmegaAutomaton, cap: int | None = None):
        self.automaton = m
        self.leading = leading_congruence(m, cap)
        self.progress = tuple(
            periodic_progress_dfa(m, self.leading, c) for c in range(self.leading.size)
        )
        self.fdfa = Fdfa(self.leading.structure, self.progress, Mode.EXACT)
        self.persistent = tuple(
            build_persistent_dfa(self.fdfa, c) for c in range(self.leading.size)
        )
        relevant_mins = {}
        for c, pd in enumerate(self.persistent):
            sig = [x for x in range(pd.node_count) if pd.significant[x]]
            if sig:
                low = any(pd.accepting[x] and pd.maxalt(x) == 1 for x in sig)
                relevant_mins[c] = 0 if low else 1
        if not relevant_mins:
            raise ContractError("no leading class has a relevant period")
        self.min_color_of_language = min(relevant_mins.values())
        self.min_colors = tuple(
            relevant_mins.get(c, self.min_color_of_language) for c in range(self.leading.size)
        )
        self._check_parities()

    @property
    def alphabet(self):
        return self.automaton.alphabet

    def _check_parities(self):
        for c, pd in enumerate(self.persistent):
            for x in range(pd.node_count):
                if pd.significant[x]:
                    col = self.node_color(c, x)
                    if (col % 2 == 0) != pd.accepting[x]:
                        raise ContractError(
                            f"class {c}: significant node {x} has color {col} but "
                            f"acceptance {pd.accepting[x]}"
                        )

    def class_of(self, u) -> int:
        return self.leading.structure.run(u)

    def node_color(self, cls: int, node: int):
        pd = self.persistent[cls]
        longest = pd.longest_chain_from(node)
        if longest == 0:
            return NEG_INF
        return longest - 1 + self.min_colors[cls]

    def node_color_clamped(self, cls: int, node: int) -> int:
        return max(self.node_color(cls, node), self.min_colors[cls])

    def maxalt(self, cls: int, node: int) -> int:
        return self.persistent[cls].maxalt(node)

    def min_color(self, u) -> int:
        return self.min_colors[self.class_of(u)]

    @cached_property
    def colorful(self) -> "ColorfulFdfa":
        return build_colorful_fdfa(self)


def _period(v) -> tuple:
    v = tuple(v)
    if not v:
        raise InputError("period must be nonempty")
    return v


def finite_color(ctx: ColorContext, u, v):
    """Natural color of the period ``v`` after ``u``; ``-math.inf`` when
    ``v`` is irrelevant to ``u``."""
    cls = ctx.class_of(u)
    return ctx.node_color(cls, ctx.persistent[cls].node_of(_period(v)))


def finite_color_clamped(ctx: ColorContext, u, v) -> int:
    return max(finite_color(ctx, u, v), ctx.min_color(u))


def is_relevant(ctx: ColorContext, u, v) -> bool:
    cls = ctx.class_of(u)
    pd = ctx.persistent[cls]
    return pd.relevant(pd.node_of(_period(v)))


def is_invariant(ctx: ColorContext, u, v) -> bool:
    lead = ctx.leading.structure
    q = lead.run(u)
    return lead.run(_period(v), q) == q


def is_reliable(ctx: ColorContext, u, v) -> bool:
    """``v`` loops on the class of ``u`` and all its powers share its color."""
    v = _period(v)
    if not is_invariant(ctx, u, v):
        return False
    cls = ctx.class_of(u)
    pd = ctx.persistent[cls]
    node = pd.node_of(v)
    color = ctx.node_color(cls, node)
    seen = set()
    x = node
    while x not in seen:
        seen.add(x)
        if ctx.node_color(cls, x) != color:
            return False
        x = pd.structure.run(v, x)
    return True


def infinite_color(ctx: ColorContext, w: UPWord) -> int:
    n = normalize(ctx.fdfa, w, NormalizationKind.PERSISTENT)
    return finite_color(ctx, n.u, n.v)


# ---------------------------------------------------------------------------
# brute-force evaluation of the inductive definition


class _ProfileOracle:
    """Evaluates the inductive color definition with bounded quantifiers.

    Periods are represented by their transition profile in the source
    automaton, which determines both ``u``-invariance and membership of
    every ``u (v z)^ω``.  The leading classes are only used to decide
    invariance and relevance, which are exact.
    """

    def __init__(self, ctx: ColorContext, z_bound: int, rep_bound: int):
        self.ctx = ctx
        self.m = ctx.automaton
        self.delta = self.m.structure.delta
        self.n = self.m.state_count
        self.k = len(self.m.alphabet)
        self.z_bound = z_bound
        self.rep_bound = rep_bound
        self.letters = [self._letter(a) for a in range(self.k)]
        self.memo = {}
        # all profiles of words of length <= z_bound
        layer = [self.identity()]
        self.extensions = list(layer)
        for _ in range(z_bound):
            layer = [self.compose(p, l) for p in layer for l in self.letters]
            self.extensions.extend(layer)
        self.extensions = list(dict.fromkeys(self.extensions))

    def identity(self):
        return tuple((q, frozenset()) for q in range(self.n))

    def _letter(self, a):
        return tuple((self.delta[q][a], frozenset([self.delta[q][a]])) for q in range(self.n))

    def compose(self, p1, p2):
        return tuple((p2[t][0], seen | p2[t][1]) for t, seen in p1)

    def of_word(self, v):
        p = self.identity()
        for a in v:
            p = self.compose(p, self.letters[a])
        return p

    def power(self, p, i):
        out = p
        for _ in range(i - 1):
            out = self.compose(out, p)
        return out

    def invariant(self, q, p) -> bool:
        cls = self.ctx.leading.class_of
        return cls[p[q][0]] == cls[q]

    def accepts(self, q, p) -> bool:
        index = {}
        order = []
        x = q
        while x not in index:
            index[x] = len(order)
            order.append(x)
            x = p[x][0]
        inf = set()
        for s in order[index[x]:]:
            inf |= p[s][1]
        return self.m.acceptance.accepts_inf(inf)

    def relevant(self, q, p) -> bool:
        lead = self.ctx.leading
        cu = lead.class_of[q]
        cv = lead.class_of[p[q][0]]
        return cu in lead.structure.reachable(cv)

    def color_below(self, q, p, limit: int):
        """The color of ``p`` if it is below ``limit``, else ``limit``."""
        key = (q, p, limit)
        if key in self.memo:
            return self.memo[key]
        result = limit
        for c in range(limit):
            if self._satisfies(q, p, c):
                result = c
                break
        self.memo[key] = result
        return result

    def _satisfies(self, q, p, c) -> bool:
        for z in self.extensions:
            vz = self.compose(p, z)
            if not self.invariant(q, vz):
                continue
            if self.accepts(q, vz) == (c % 2 == 0):
                continue
            if not any(
                self.color_below(q, self.power(vz, i), c) < c
                for i in range(1, self.rep_bound + 1)
            ):
                return False
        return True


def brute_force_color(ctx: ColorContext, u, v, z_bound: int = 4, rep_bound: int = 3, limit: int = 32):
    """The inductive color definition with extensions ``|z| <= z_bound``
    and repetitions ``i <= rep_bound``.  Sound only relative to the bounds;
    meant as an independent cross-check of :func:`finite_color`."""
    if z_bound < 0 or rep_bound < 1:
        raise InputError("bounds must be z_bound >= 0 and rep_bound >= 1")
    v = _period(v)
    oracle = _ProfileOracle(ctx, z_bound, rep_bound)
    q = ctx.automaton.structure.run(u)
    p = oracle.of_word(v)
    if not oracle.relevant(q, p):
        return NEG_INF
    c = oracle.color_below(q, p, limit)
    if c == limit:
        raise ContractError(f"no color below {limit} within the given bounds")
    return c


# ---------------------------------------------------------------------------
# the colorful FDFA


@dataclass(frozen=True)
class ColorfulFdfa:
    fdfa: Fdfa  # duo-normalized acceptance
    colors: tuple  # colors[u][state] for each progress DFA
    min_colors: tuple

    @property
    def leading(self) -> Structure:
        return self.fdfa.leading

    @property
    def progress(self) -> tuple:
        return self.fdfa.progress

    def color_of(self, u, v) -> int:
        q = self.fdfa.leading.run(u)
        return self.colors[q][self.fdfa.progress[q].run(v)]


def build_colorful_fdfa(ctx: ColorContext) -> ColorfulFdfa:
    progress = []
    colors = []
    for cls, pd in enumerate(ctx.persistent):
        out = [EPSILON] + [ctx.node_color_clamped(cls, x) for x in range(1, pd.node_count)]
        quotient = minimize_moore(pd.structure, out)
        labels = list(quotient.outputs)
        s = quotient.structure
        labels[0] = max(labels[t] for t in s.delta[0] if t != 0)
        accepting = frozenset(q for q, c in enumerate(labels) if c % 2 == 0)
        progress.append(Dfa(s, accepting))
        colors.append(tuple(labels))
    fdfa = Fdfa(ctx.leading.structure, tuple(progress), Mode.DUO)
    return ColorfulFdfa(fdfa, tuple(colors), ctx.min_colors)


def color_states_procedure(cf: ColorfulFdfa) -> tuple:
    """Recolor every progress DFA from its acceptance alone: a terminal
    component gets 0 or 1; any other component gets the largest color
    below it, bumped by one if the parity disagrees with its acceptance."""
    out = []
    for p in cf.progress:
        s = p.structure
        dec = condense(s.reachable(), s.successors)
        comp_color = [None] * len(dec)
        for c in reversed(range(len(dec))):
            members = dec.components[c]
            acc = {q in p.accepting for q in members}
            if len(acc) > 1:
                raise ContractError("progress component mixes accepting and rejecting states")
            accepting = acc.pop()
            if not dec.condensation[c]:
                comp_color[c] = 0 if accepting else 1
            else:
                top = max(comp_color[d] for d in dec.condensation[c])
                comp_color[c] = top if (top % 2 == 0) == accepting else top + 1
        colors = [None] * s.state_count
        for q in s.reachable():
            colors[q] = comp_color[dec.component_of[q]]
        out.append(tuple(colors))
    return tuple(out)
