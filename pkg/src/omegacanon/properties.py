"""Exhaustive property suites over bounded word sets.

Each suite returns a list of :class:`Violation` records; an empty list
means every property held.  Every record carries the words needed to
replay it.  The suites back both the test-suite and ``omegacanon
selftest``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian

from .blackwhite import build_c_lector, visits_f_infinitely
from .colors import (
    ColorContext,
    _ProfileOracle,
    color_states_procedure,
    finite_color,
    finite_color_clamped,
    infinite_color,
    is_invariant,
    is_relevant,
    is_reliable,
)
from .core import condense
from .fdfa import (
    Fdfa,
    Mode,
    NormalizationKind,
    accepts,
    accepts_persistent_mode,
    check_saturation_bounded,
    complement,
    emptiness_witness,
    intersect,
    is_normalized,
    normalize,
    union,
)
from .omega import (
    OmegaAutomaton,
    accepts_up,
    periodic_fdfa,
    state_equiv,
)
from .persistent import diameter, is_persistent
from .wagner import inclusion_measures
from .words import UPWord, canonical_up, upwords, words


@dataclass(frozen=True)
class Bounds:
    max_u: int = 2
    max_v: int = 5
    max_z: int = 6
    brute_z: int = 4
    brute_rep: int = 3

    def __post_init__(self):
        if self.max_u < 0 or self.max_v < 1 or self.max_z < 0:
            raise ValueError("bounds must satisfy max_u >= 0, max_v >= 1, max_z >= 0")


@dataclass(frozen=True)
class Violation:
    suite: str
    prop: str
    witness: dict
    detail: str = ""

    def to_json(self) -> dict:
        return {"suite": self.suite, "property": self.prop, "witness": self.witness, "detail": self.detail}


@dataclass
class _Report:
    suite: str
    render: object
    limit: int = 5
    items: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    def fail(self, prop: str, detail: str = "", **words):
        n = self.counts.get(prop, 0)
        self.counts[prop] = n + 1
        if n < self.limit:
            witness = {k: self._show(v) for k, v in words.items()}
            self.items.append(Violation(self.suite, prop, witness, detail))

    def _show(self, w):
        if isinstance(w, UPWord):
            return {"u": self.render(w.u), "v": self.render(w.v)}
        if isinstance(w, tuple):
            return self.render(w)
        return w


def _fmt(c):
    return "-inf" if c == float("-inf") else c


# ---------------------------------------------------------------------------
# ω-automata


def omega_suite(m: OmegaAutomaton, bounds: Bounds = Bounds()) -> list:
    r = _Report("omega", m.alphabet.render)
    k = len(m.alphabet)
    from .omega import leading_congruence, periodic_progress_dfa

    for w in upwords(k, bounds.max_u, min(bounds.max_v, 4)):
        base = accepts_up(m, w)
        variants = [canonical_up(w), UPWord(w.u + w.v, w.v)]
        variants += [UPWord(w.u, w.v * i) for i in range(2, 5)]
        for x in variants:
            if accepts_up(m, x) != base:
                r.fail("accepts_up invariance", w=w, variant=x)
    lc = leading_congruence(m)
    tails = list(upwords(k, 2, 2))
    for x in words(k, bounds.max_u):
        for y in words(k, bounds.max_u):
            if x < y and lc.class_of_word(x) == lc.class_of_word(y):
                for t in tails:
                    if accepts_up(m, UPWord(x + t.u, t.v)) != accepts_up(m, UPWord(y + t.u, t.v)):
                        r.fail("leading congruence", x=x, y=y, tail=t)
    for c in range(lc.size):
        p = periodic_progress_dfa(m, lc, c)
        u = lc.access[c]
        for v in words(k, bounds.max_v + 1, 1):
            if p.accepts(v) != accepts_up(m, UPWord(u, v)):
                r.fail("periodic progress DFA", u=u, v=v)
    n = m.state_count
    if n <= 8:
        rel = {(a, b): state_equiv(m, a, b) for a in range(n) for b in range(n)}
        for a, b, c in cartesian(range(n), repeat=3):
            if rel[a, b] != rel[b, a]:
                r.fail("state_equiv symmetric", detail=f"{a},{b}")
            if rel[a, b] and rel[b, c] and not rel[a, c]:
                r.fail("state_equiv transitive", detail=f"{a},{b},{c}")
    return r.items


# ---------------------------------------------------------------------------
# colors


def _ctx_words(ctx, bounds):
    k = len(ctx.alphabet)
    return list(words(k, bounds.max_u)), list(words(k, bounds.max_v, 1)), list(words(k, bounds.max_z))


def _color_props(r, ctx, bounds, color, relevant_only, tag=""):
    """The finite-color properties, for either the plain or the clamped
    color function."""
    us, vs, zs = _ctx_words(ctx, bounds)
    k = len(ctx.alphabet)

    def rel(u, v):
        return is_relevant(ctx, u, v)

    def reliable(u, v):
        return is_reliable(ctx, u, v)

    def min_u(u):
        return ctx.min_color(u)

    for u in us:
        for v in vs:
            if relevant_only and not rel(u, v):
                continue
            c = color(u, v)
            # classes agree
            for u2 in us:
                if u2 != u and ctx.class_of(u2) == ctx.class_of(u) and color(u2, v) != c:
                    r.fail("classes agree on colors" + tag, u=u, u2=u2, v=v)
            # monotonically non-increasing
            for z in words(k, 2, 1):
                if relevant_only and not rel(u, v + z):
                    continue
                if color(u, v + z) > c:
                    r.fail("non-increasing" + tag, u=u, v=v, z=z)
            # step by step
            if c != float("-inf") and c > max(1, min_u(u)):
                if not any(is_invariant(ctx, u, v + z) and color(u, v + z) == c - 1 for z in zs):
                    r.fail("step by step" + tag, u=u, v=v, detail=f"color {c}")
            # eventually stable
            if not any(all(color(u, v * i * j) == color(u, v * i) for j in range(1, 7)) for i in range(1, 7)):
                r.fail("eventually stable" + tag, u=u, v=v)
            # reliable periods determine membership
            if reliable(u, v) and (c % 2 == 0) != accepts_up(ctx.automaton, UPWord(u, v)):
                r.fail("reliable determines membership" + tag, u=u, v=v, detail=f"color {_fmt(c)}")
            # monotonically decreasing across alternation
            if reliable(u, v):
                inside = accepts_up(ctx.automaton, UPWord(u, v))
                for z in words(k, bounds.max_v - len(v), 1):
                    if reliable(u, v + z) and accepts_up(ctx.automaton, UPWord(u, v + z)) != inside:
                        if not color(u, v) > color(u, v + z):
                            r.fail("strictly decreasing" + tag, u=u, v=v, z=z)
            # extension to a reliable period of the same color
            if rel(u, v):
                if not any(reliable(u, v + z) and color(u, v + z) == c for z in zs):
                    r.fail("reliable extension" + tag, u=u, v=v)
    # less is more
    for u in us:
        for x in us:
            for y in us:
                if ctx.class_of(x + y) != ctx.class_of(u):
                    continue
                for v in vs:
                    if relevant_only and not (rel(u, v) and rel(x, y + v)):
                        continue
                    if color(u, v) < color(x, y + v):
                        r.fail("less is more" + tag, u=u, x=x, y=y, v=v)


def colors_suite(ctx: ColorContext, bounds: Bounds = Bounds()) -> list:
    r = _Report("colors", ctx.alphabet.render)
    k = len(ctx.alphabet)
    m = ctx.automaton

    def plain(u, v):
        return finite_color(ctx, u, v)

    def clamped(u, v):
        return finite_color_clamped(ctx, u, v)

    _color_props(r, ctx, bounds, plain, False)
    _color_props(r, ctx, bounds, clamped, True, " (clamped)")

    # reliable normalizations of one ω-word agree
    seen = {}
    for w in upwords(k, bounds.max_u, bounds.max_v):
        if not is_reliable(ctx, w.u, w.v):
            continue
        key = canonical_up(w)
        c = finite_color(ctx, w.u, w.v)
        if key in seen and seen[key][1] != c:
            r.fail("reliable normalizations agree", w1=seen[key][0], w2=w)
        seen.setdefault(key, (w, c))

    # the chain characterization against the bounded inductive definition
    oracle = _ProfileOracle(ctx, bounds.brute_z, bounds.brute_rep)
    for u in words(k, bounds.max_u):
        q = m.structure.run(u)
        for v in words(k, bounds.max_v, 1):
            p = oracle.of_word(v)
            expect = oracle.color_below(q, p, 32) if oracle.relevant(q, p) else float("-inf")
            got = finite_color(ctx, u, v)
            if expect != got:
                r.fail("colors match the inductive definition", u=u, v=v,
                       detail=f"chains give {_fmt(got)}, definition gives {_fmt(expect)}")

    # infinite colors decide membership
    for w in upwords(k, bounds.max_u, bounds.max_v):
        if (infinite_color(ctx, w) % 2 == 0) != accepts_up(m, w):
            r.fail("infinite color parity", w=w)

    # the colorful FDFA
    cf = ctx.colorful
    if color_states_procedure(cf) != cf.colors:
        r.fail("MSCC coloring procedure", detail=f"{color_states_procedure(cf)} vs {cf.colors}")
    for q, p in enumerate(cf.progress):
        s = p.structure
        dec = condense(s.reachable(), s.successors)
        for comp in dec.components:
            if len({x in p.accepting for x in comp if x != 0}) > 1:
                r.fail("colorful MSCC purity", detail=f"class {q}")
    lead = cf.leading
    for u in words(k, bounds.max_u):
        q = lead.run(u)
        p = cf.progress[q]
        for v in words(k, bounds.max_v, 1):
            label = cf.colors[q][p.run(v)]
            if label != finite_color_clamped(ctx, u, v):
                r.fail("colorful labels are clamped colors", u=u, v=v,
                       detail=f"label {label}, color {finite_color_clamped(ctx, u, v)}")
            if is_normalized(cf.fdfa, u, v, NormalizationKind.DUO) and not is_reliable(ctx, u, v):
                r.fail("duo-normalized implies reliable", u=u, v=v)
            if is_relevant(ctx, u, v):
                alt = _alternations(p, p.run(v))
                pd = ctx.persistent[ctx.class_of(u)]
                if alt != pd.longest_chain_from(pd.node_of(v)) - 1:
                    r.fail("alternations equal chain length minus one", u=u, v=v)
    for q, p in enumerate(cf.progress):
        s = p.structure
        states = [x for x in s.reachable() if x != 0]
        for a, b in cartesian(states, repeat=2):
            if a < b and not _distinguishable(s, cf.colors[q], a, b, bounds.max_z):
                r.fail("colorful minimality", detail=f"class {q}: states {a} and {b}")

    # c-lectors
    for c in range(4):
        lector = build_c_lector(ctx, c)
        for w in upwords(k, bounds.max_u, bounds.max_v, canonical_only=True):
            if visits_f_infinitely(lector, w) != (infinite_color(ctx, w) <= c):
                r.fail("c-lector visits F infinitely iff color <= c", w=w, detail=f"c = {c}")
    return r.items


def _alternations(p, start) -> int:
    """Most acceptance changes along a path from ``start``, counting each
    strongly connected component once."""
    s = p.structure
    nodes = s.reachable(start)
    dec = condense(nodes, s.successors)
    acc = [next(iter(c)) in p.accepting for c in dec.components]
    best = [0] * len(dec)
    for c in reversed(range(len(dec))):
        for d in dec.condensation[c]:
            best[c] = max(best[c], best[d] + (acc[c] != acc[d]))
    return best[dec.component_of[start]]


def _distinguishable(s, labels, a, b, depth) -> bool:
    frontier = {(a, b)}
    seen = set()
    for _ in range(depth + 1):
        nxt = set()
        for x, y in frontier:
            if labels[x] != labels[y]:
                return True
            seen.add((x, y))
            for t in range(len(s.alphabet)):
                pair = (s.delta[x][t], s.delta[y][t])
                if pair not in seen:
                    nxt.add(pair)
        frontier = nxt
    return False


# ---------------------------------------------------------------------------
# measures


def measures_suite(m: OmegaAutomaton, ctx: ColorContext | None = None) -> list:
    r = _Report("measures", m.alphabet.render)
    ctx = ctx or ColorContext(m)
    wm = inclusion_measures(m)
    if abs(wm.m_plus - wm.m_minus) > 1:
        r.fail("inclusion measures differ by at most one", detail=str(wm))
    for name, f in (("periodic", ctx.fdfa), ("colorful", ctx.colorful.fdfa)):
        d = diameter(f)
        if (d.d_plus, d.d_minus) != (wm.m_plus, wm.m_minus):
            r.fail("diameter equals inclusion measures", detail=f"{name}: {d} vs {wm}")
    return r.items


def persistent_suite(ctx: ColorContext, bounds: Bounds = Bounds()) -> list:
    r = _Report("persistent", ctx.alphabet.render)
    f = ctx.fdfa
    k = len(ctx.alphabet)
    for u in words(k, bounds.max_u):
        pd = ctx.persistent[ctx.class_of(u)]
        for v in words(k, min(bounds.max_v, 4), 1):
            pers = is_persistent(f, u, v, pd)
            if pers != is_normalized(f, u, v, NormalizationKind.PERSISTENT):
                r.fail("persistent DFA agrees with weak normalization", u=u, v=v)
            if pers:
                a = accepts_up(ctx.automaton, UPWord(u, v))
                c = finite_color(ctx, u, v)
                for i in range(2, 5):
                    if f.progress_of(u).accepts(v * i) != a or finite_color(ctx, u, v * i) != c:
                        r.fail("persistent implies reliable", u=u, v=v, detail=f"power {i}")
    return r.items


# ---------------------------------------------------------------------------
# FDFAs


def fdfa_suite(f: Fdfa, bounds: Bounds = Bounds(), reference: OmegaAutomaton | None = None) -> list:
    r = _Report("fdfa", f.alphabet.render)
    k = len(f.alphabet)
    m, n = f.size
    sample = list(upwords(k, min(bounds.max_u, 2), min(bounds.max_v, 4), canonical_only=True))
    sat = check_saturation_bounded(f, min(bounds.max_u, 3), min(bounds.max_v, 4))
    if sat is not None:
        r.fail("saturation", detail="decompositions disagree", accepted=sat[0], rejected=sat[1])
        return r.items
    comp = complement(f)
    both = intersect(f, comp)
    either = union(f, comp)
    for w in sample:
        a = accepts(f, w)
        for kind in NormalizationKind:
            nw = normalize(f, w, kind)
            if not is_normalized(f, nw.u, nw.v, kind) or canonical_up(nw) != canonical_up(w):
                r.fail("normalize", w=w, detail=kind.name)
        if accepts(comp, w) == a:
            r.fail("complement flips acceptance", w=w)
        if accepts(both, w) or not accepts(either, w):
            r.fail("De Morgan", w=w)
        if accepts_persistent_mode(f, w) != accepts(f.with_mode(Mode.DUO), w):
            r.fail("persistent acceptance equals duo acceptance", w=w)
        if f.mode != Mode.DUO and accepts(f.with_mode(Mode.DUO), w) != a:
            r.fail("stronger modes agree", w=w, detail=f.mode.value)
        if reference is not None and accepts_up(reference, w) != a:
            r.fail("agrees with the source automaton", w=w)
    witness = emptiness_witness(f)
    if witness is not None and not accepts(f, witness):
        r.fail("emptiness witness replays", w=witness)
    if witness is None:
        for w in upwords(k, m, min(m * n * n, 5)):
            if accepts(f, w):
                r.fail("emptiness misses an accepted word", w=w)
                break
    if emptiness_witness(both) is not None:
        r.fail("F and its complement intersect", w=emptiness_witness(both))
    return r.items


def language_suites(m: OmegaAutomaton, bounds: Bounds = Bounds()) -> list:
    """Every suite that takes a language."""
    ctx = ColorContext(m)
    out = []
    out += omega_suite(m, bounds)
    out += colors_suite(ctx, bounds)
    out += measures_suite(m, ctx)
    out += persistent_suite(ctx, bounds)
    pf = periodic_fdfa(m)
    for mode in Mode:
        out += fdfa_suite(pf.with_mode(mode), bounds, reference=m)
    out += fdfa_suite(ctx.colorful.fdfa, bounds, reference=m)
    return out
