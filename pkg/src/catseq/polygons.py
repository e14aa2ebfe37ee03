"""Triangulations of a convex polygon and their dual binary trees.

The polygon has m = n + 2 sides, vertices 0..m-1 labeled clockwise, and
a marked root side (0, m-1).  Each triangle becomes a tree node; the
node on the root side is the root, and a node's left / right children
are the triangles across its (a, c) / (c, b) edges, apex c on base
(a, b).  The degenerate two-sided polygon stands in for n = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CatalanError, CatalanSequence, ParseError
from .trees import BinaryTree, Node, decode_tree, encode_tree, node_count


class MalformedTriangulationError(CatalanError):
    """Some base edge has no unique apex; the diagonal set is inconsistent."""


class SizeMismatchError(CatalanError):
    """The tree's node count does not fit the requested polygon."""


@dataclass(frozen=True)
class Triangulation:
    """A convex m-gon cut into m - 2 triangles by m - 3 non-crossing diagonals.

    Diagonals are stored as (a, b) with a < b, sorted ascending; the root
    side (0, m-1) is never a diagonal.  m = 2 is the degenerate polygon
    with no triangles at all.
    """

    m: int
    diagonals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.m < 2:
            raise CatalanError("a polygon needs at least 2 sides")
        normalized = tuple(sorted((min(a, b), max(a, b)) for a, b in self.diagonals))
        object.__setattr__(self, "diagonals", normalized)
        expected = max(0, self.m - 3)
        if len(normalized) != expected:
            raise CatalanError(
                f"a {self.m}-gon triangulation needs {expected} diagonals, got {len(normalized)}"
            )
        if len(set(normalized)) != len(normalized):
            raise CatalanError("duplicate diagonal")
        for a, b in normalized:
            if not (0 <= a < b <= self.m - 1):
                raise CatalanError(f"diagonal {a}-{b} is outside the vertex range")
            if b - a < 2 or (a, b) == (0, self.m - 1):
                raise CatalanError(f"{a}-{b} is a polygon side, not a diagonal")
        for idx, (a, b) in enumerate(normalized):
            for c, d in normalized[idx + 1 :]:
                if a < c < b < d:
                    raise CatalanError(f"diagonals {a}-{b} and {c}-{d} cross")


def dual_tree(tri: Triangulation) -> BinaryTree:
    """Dual binary tree rooted at the triangle on the marked side (0, m-1).

    region(a, b) is empty when (a, b) is a polygon side; otherwise the
    unique apex c with edges (a, c) and (c, b) splits it into a left
    region (a, c) and a right region (c, b).
    """
    m = tri.m
    if m == 2:
        return None
    edges = {(i, i + 1) for i in range(m - 1)} | set(tri.diagonals)
    apexes: dict[tuple[int, int], int] = {}
    regions: dict[tuple[int, int], BinaryTree] = {}
    stack: list[tuple[tuple[int, int], bool]] = [((0, m - 1), False)]
    while stack:
        (a, b), expanded = stack.pop()
        if b == a + 1:
            regions[(a, b)] = None
            continue
        if expanded:
            c = apexes[(a, b)]
            regions[(a, b)] = Node(regions[(a, c)], regions[(c, b)])
            continue
        candidates = [c for c in range(a + 1, b) if (a, c) in edges and (c, b) in edges]
        if len(candidates) != 1:
            raise MalformedTriangulationError(f"base {a}-{b} has {len(candidates)} apexes")
        apexes[(a, b)] = candidates[0]
        stack.append(((a, b), True))
        stack.append(((candidates[0], b), False))
        stack.append(((a, candidates[0]), False))
    return regions[(0, m - 1)]


def _subtree_counts(t: BinaryTree) -> dict[int, int]:
    counts: dict[int, int] = {}
    stack: list[tuple[Node | None, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if node is None:
            continue
        if expanded:
            left = counts[id(node.left)] if node.left is not None else 0
            right = counts[id(node.right)] if node.right is not None else 0
            counts[id(node)] = 1 + left + right
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    return counts


def rebuild_triangulation(t: BinaryTree, m: int) -> Triangulation:
    """Inverse of dual_tree for a tree of m - 2 nodes.

    A node on base (a, b) whose left subtree holds k nodes puts its apex
    at c = a + k + 1; the base edges to the children are diagonals unless
    they are polygon sides.
    """
    if node_count(t) != m - 2:
        raise SizeMismatchError(f"tree has {node_count(t)} nodes, a {m}-gon dual needs {m - 2}")
    counts = _subtree_counts(t)
    diagonals: list[tuple[int, int]] = []
    stack: list[tuple[Node, int, int]] = [] if t is None else [(t, 0, m - 1)]
    while stack:
        node, a, b = stack.pop()
        k_left = counts[id(node.left)] if node.left is not None else 0
        c = a + k_left + 1
        if c > a + 1:
            diagonals.append((a, c))
        if c < b - 1:
            diagonals.append((c, b))
        if node.left is not None:
            stack.append((node.left, a, c))
        if node.right is not None:
            stack.append((node.right, c, b))
    return Triangulation(m, tuple(diagonals))


def encode_polygon(tri: Triangulation) -> CatalanSequence:
    """Encode the dual tree; a triangulated m-gon yields semilength m - 2."""
    return encode_tree(dual_tree(tri))


def decode_polygon(s: CatalanSequence) -> Triangulation:
    """Rebuild the (semilength + 2)-gon triangulation behind the sequence."""
    return rebuild_triangulation(decode_tree(s), s.semilength + 2)


def parse_polygon(text: str) -> Triangulation:
    """Parse "m;a-b,c-d,..." with diagonals optional, e.g. "5;0-2,0-3" or "3;"."""
    head, sep, tail = text.partition(";")
    if not sep or not head.isdigit():
        raise ParseError("expected 'm;diagonals' with a numeric side count")
    diagonals = []
    if tail:
        for part in tail.split(","):
            a, dash, b = part.partition("-")
            if not dash or not a.isdigit() or not b.isdigit():
                raise ParseError(f"bad diagonal {part!r}, expected the form 'a-b'")
            diagonals.append((int(a), int(b)))
    try:
        return Triangulation(int(head), tuple(diagonals))
    except CatalanError as exc:
        raise ParseError(f"bad triangulation: {exc}") from exc


def render_polygon(tri: Triangulation) -> str:
    return f"{tri.m};" + ",".join(f"{a}-{b}" for a, b in tri.diagonals)
