"""Deterministic DOT export for automata diagrams."""

from __future__ import annotations

from .core import Dfa


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(dfa: Dfa) -> str:
    """Render the transition graph as DOT text.

    One node per state, numbered.  Parallel transitions are merged into
    a single edge whose label joins the letter names with commas in
    letter order.  Node and edge order is fixed by state index, so the
    output is bit-identical across runs.
    """
    lines = ["digraph automaton {", "  rankdir=LR;", "  node [shape=circle];"]
    for q in range(dfa.n):
        lines.append(f"  {q} [label={_quote(str(q))}];")
    for q in range(dfa.n):
        by_target: dict[int, list[str]] = {}
        for name, row in zip(dfa.letters, dfa.delta):
            by_target.setdefault(row[q], []).append(name)
        for target in sorted(by_target):
            label = ",".join(by_target[target])
            lines.append(f"  {q} -> {target} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
