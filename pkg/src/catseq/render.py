"""Text renderers: mountain-range silhouettes and DOT graph descriptions."""

from __future__ import annotations

from .core import CatalanSequence, altitude_profile
from .trees import BinaryTree


def render_mountain(s: CatalanSequence) -> list[str]:
    """Character rows of the mountain range, highest altitude band first.

    Bit 0 paints '/' in the band above the altitude it starts from, bit 1
    paints '\\' in the band above the altitude it lands on; trailing
    blanks are trimmed and the empty sequence renders as zero rows.
    """
    heights = altitude_profile(s).heights
    peak = max(heights)
    rows = [[" "] * len(s.bits) for _ in range(peak)]
    for col, ch in enumerate(s.bits):
        if ch == "0":
            rows[heights[col]][col] = "/"
        else:
            rows[heights[col + 1]][col] = "\\"
    return ["".join(rows[level]).rstrip() for level in range(peak - 1, -1, -1)]


def render_dot(t: BinaryTree) -> str:
    """Deterministic DOT text: nodes v0, v1, ... in preorder, edges tagged L/R."""
    declarations = []
    edges = []
    stack = [(t, None, "")]
    counter = 0
    while stack:
        node, parent, label = stack.pop()
        if node is None:
            continue
        name = f"v{counter}"
        counter += 1
        declarations.append(f"  {name};")
        if parent is not None:
            edges.append(f"  {parent} -> {name} [label={label}];")
        stack.append((node.right, name, "R"))
        stack.append((node.left, name, "L"))
    return "\n".join(["digraph tree {", *declarations, *edges, "}"])
