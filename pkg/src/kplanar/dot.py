"""Graphviz DOT emission for multigraphs, with optional role labels."""

from __future__ import annotations

from .mgraph import Multigraph


def to_dot(g: Multigraph, labels: dict | None = None, name: str = "G") -> str:
    """Render g as an undirected DOT graph, one line per vertex and edge.

    labels maps vertex ids to display tags; unlabeled vertices show their
    id.  Multiplicities above 1 appear as edge labels.  Output is sorted,
    so identical graphs produce identical bytes.
    """
    labels = labels or {}
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        tag = labels.get(v)
        if tag is None:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [label="{tag}"];')
    for u, v, w in g.edges:
        if w == 1:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f'  {u} -- {v} [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
