"""Graphviz export."""

from __future__ import annotations

from .core import Structure
from .fdfa import Fdfa
from .omega import OmegaAutomaton


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _edges(s: Structure, prefix: str, lines: list):
    """Transitions grouped by (source, target), labels joined by commas."""
    for q in range(s.state_count):
        grouped = {}
        for a, t in enumerate(s.delta[q]):
            grouped.setdefault(t, []).append(s.alphabet.symbols[a])
        for t, syms in grouped.items():
            lines.append(f"  {prefix}{q} -> {prefix}{t} [label={_quote(','.join(syms))}];")


def automaton_dot(m: OmegaAutomaton, name: str = "automaton") -> str:
    s = m.structure
    a = m.acceptance
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", "  init [shape=point];"]
    for q in range(s.state_count):
        label = f"q{q}"
        shape = "circle"
        if a.kind == "parity":
            label += f" / {a.kappa[q]}"
        elif q in getattr(a, "F", ()):
            shape = "doublecircle"
        lines.append(f"  q{q} [label={_quote(label)}, shape={shape}];")
    lines.append(f"  init -> q{s.initial};")
    _edges(s, "q", lines)
    if a.kind == "muller":
        sets = "; ".join("{" + ",".join(f"q{q}" for q in sorted(x)) + "}" for x in a.alpha)
        lines.append(f"  label={_quote('Muller: ' + sets)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def fdfa_dot(f: Fdfa, colors=None, name: str = "fdfa") -> str:
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", "  compound=true;"]
    lines.append("  subgraph cluster_leading {")
    lines.append(f"    label={_quote('leading (' + f.mode.value + ')')};")
    lines.append("    linit [shape=point];")
    for q in range(f.leading.state_count):
        lines.append(f"    l{q} [label={_quote(f'u{q}')}, shape=circle];")
    lines.append(f"    linit -> l{f.leading.initial};")
    inner = []
    _edges(f.leading, "l", inner)
    lines.extend("  " + x for x in inner)
    lines.append("  }")
    for q, p in enumerate(f.progress):
        pre = f"p{q}_"
        lines.append(f"  subgraph cluster_p{q} {{")
        lines.append(f"    label={_quote(f'progress of u{q}')};")
        lines.append(f"    {pre}init [shape=point];")
        for x in range(p.state_count):
            label = f"{x}" if colors is None else f"{x} / {colors[q][x]}"
            shape = "doublecircle" if x in p.accepting else "circle"
            lines.append(f"    {pre}{x} [label={_quote(label)}, shape={shape}];")
        lines.append(f"    {pre}init -> {pre}{p.initial};")
        inner = []
        _edges(p.structure, pre, inner)
        lines.extend("  " + x for x in inner)
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
