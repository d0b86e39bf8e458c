"""c-lectors and the Black & White DBA / DCA.

A c-lector runs the colorful FDFA along the input: it tracks the class of
the prefix read so far, the class ``u`` where tracking started and the
colorful progress state of the period read since then.  When the color
drops to ``c`` or below, or to the least color of ``u``, it resets and
starts tracking again from the current class.  It visits ``F`` infinitely
often exactly on the words whose natural color is at most ``c``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .colors import ColorContext
from .core import Structure
from .errors import DomainError, InputError
from .omega import Buchi, CoBuchi, OmegaAutomaton, lasso_inf
from .words import UPWord


@dataclass(frozen=True)
class CLector:
    c: int
    structure: Structure
    states: tuple  # state -> (x class, u class, colorful progress state of u)
    kappa: tuple  # state -> color of its progress state
    reset: tuple
    F: frozenset

    def as_buchi(self) -> OmegaAutomaton:
        return OmegaAutomaton(self.structure, Buchi(self.F))

    def as_cobuchi(self) -> OmegaAutomaton:
        return OmegaAutomaton(self.structure, CoBuchi(self.F))


def build_c_lector(ctx: ColorContext, c: int) -> CLector:
    if c < 0:
        raise InputError("c must be nonnegative")
    cf = ctx.colorful
    lead = cf.leading
    k = len(lead.alphabet)

    def is_reset(state):
        _, u, p = state
        kappa = cf.colors[u][p]
        return kappa <= c or kappa == cf.min_colors[u]

    start = (lead.initial, lead.initial, 0)
    ids = {start: 0}
    states = [start]
    rows = []
    queue = deque([start])
    while queue:
        state = queue.popleft()
        x, u, p = state
        resetting = is_reset(state)
        row = []
        for a in range(k):
            x2 = lead.delta[x][a]
            nxt = (x2, x2, 0) if resetting else (x2, u, cf.progress[u].structure.delta[p][a])
            if nxt not in ids:
                ids[nxt] = len(states)
                states.append(nxt)
                queue.append(nxt)
            row.append(ids[nxt])
        rows.append(tuple(row))
    kappa = tuple(cf.colors[u][p] for _, u, p in states)
    reset = tuple(is_reset(s) for s in states)
    final = frozenset(i for i in range(len(states)) if reset[i] and kappa[i] <= c)
    return CLector(c, Structure(lead.alphabet, tuple(rows), 0), tuple(states), kappa, reset, final)


def visits_f_infinitely(lector: CLector, w: UPWord) -> bool:
    return not lector.F.isdisjoint(lasso_inf(lector.structure, w))


def _language_colors(ctx: ColorContext) -> set:
    cf = ctx.colorful
    out = set()
    for q, labels in enumerate(cf.colors):
        for p in cf.progress[q].structure.reachable():
            out.add(labels[p])
    return out


def black_white_dba(ctx: ColorContext) -> OmegaAutomaton:
    colors = _language_colors(ctx)
    if max(colors) > 1:
        raise DomainError(f"not DBA-recognizable: color {max(colors)}")
    return build_c_lector(ctx, 0).as_buchi()


def black_white_dca(ctx: ColorContext) -> OmegaAutomaton:
    colors = _language_colors(ctx)
    if max(colors) > 2:
        raise DomainError(f"not DCA-recognizable: color {max(colors)}")
    if min(colors) < 1:
        raise DomainError(
            f"the DCA construction needs colors in {{1, 2}}: color {min(colors)}"
        )
    return build_c_lector(ctx, 1).as_cobuchi()
