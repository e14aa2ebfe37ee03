"""Binary-tree codec and the expression syntaxes built on top of it.

The tree codec walks the tree in preorder and emits a digit pair per
edge: 01 for a lone left edge, 10 for a lone right edge, and 00 / 11
for the left / right edges of a node with two children, the whole body
wrapped in a leading 0 and a trailing 1.  Decoding replays the pairs
with a stack of suspended vertices.

Extended binary trees (every internal node has exactly two children)
double as multiplication expressions: leaves are factors, internal
nodes multiplications.  They carry two text syntaxes, parenthesized
("(a*(a*a))") and postfix ("aaa**"), plus two sequence codecs: the
total one that strips leaves and encodes the remaining tree, and the
append-a-1 postfix wire format whose decode is partial.

Every traversal here uses an explicit stack; degenerate chains of 10^4
nodes and more are fine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CatalanSequence, DomainError, ParseError

_RPN_TO_BITS = str.maketrans("a*", "01")
_BITS_TO_RPN = str.maketrans("01", "a*")


def _shape_key(root) -> str:
    """Canonical preorder shape string: '1' per node, '0' per empty slot."""
    out = []
    stack = [root]
    while stack:
        node = stack.pop()
        if node is None:
            out.append("0")
        else:
            out.append("1")
            stack.append(node.right)
            stack.append(node.left)
    return "".join(out)


def _tree_eq(a, b, node_type) -> bool:
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        if not (isinstance(x, node_type) and isinstance(y, node_type)):
            return False
        stack.append((x.left, y.left))
        stack.append((x.right, y.right))
    return True


@dataclass(frozen=True, eq=False, repr=False)
class Node:
    """A binary-tree node; ``None`` in either slot is the empty subtree.

    The empty binary tree as a whole is plain ``None``.  Equality and
    hashing are structural and stack-based, safe for deep chains.
    """

    left: Node | None = None
    right: Node | None = None

    def __eq__(self, other):
        if not isinstance(other, Node):
            return NotImplemented
        return _tree_eq(self, other, Node)

    def __hash__(self):
        return hash((Node, _shape_key(self)))

    def __repr__(self):
        return f"Node[{render_tree(self)}]"


@dataclass(frozen=True, eq=False, repr=False)
class Internal:
    """An internal node of an extended binary tree (one multiplication).

    ``None`` in either slot is a leaf operand; a bare leaf expression is
    plain ``None``.  Both children always exist, counting leaves, so
    leaf_count = internal_count + 1 holds by construction.
    """

    left: Internal | None = None
    right: Internal | None = None

    def __eq__(self, other):
        if not isinstance(other, Internal):
            return NotImplemented
        return _tree_eq(self, other, Internal)

    def __hash__(self):
        return hash((Internal, _shape_key(self)))

    def __repr__(self):
        return f"Internal[{render_mult(self)}]"


BinaryTree = Node | None
ExtendedBinaryTree = Internal | None


class StackUnderflowError(ParseError):
    """A postfix operator arrived with fewer than two values on the stack."""

    def __init__(self, position: int):
        super().__init__("operator lacks two operands", position)


class ExcessOperandsError(ParseError):
    """A postfix word left more than one value on the stack."""

    def __init__(self, leftover: int):
        super().__init__(f"{leftover} values remain after the last token")


class NotInImageError(DomainError):
    """A valid sequence that no rpn-paper encoding produces."""


def node_count(t: BinaryTree) -> int:
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if node is not None:
            count += 1
            stack.append(node.left)
            stack.append(node.right)
    return count


def internal_count(e: ExtendedBinaryTree) -> int:
    """Number of Internal nodes, i.e. multiplications; a bare leaf has 0."""
    count = 0
    stack = [e]
    while stack:
        node = stack.pop()
        if node is not None:
            count += 1
            stack.append(node.left)
            stack.append(node.right)
    return count


def leaf_count(e: ExtendedBinaryTree) -> int:
    return internal_count(e) + 1


def encode_tree(t: BinaryTree) -> CatalanSequence:
    """Preorder edge-pair encoding; the empty tree maps to the empty sequence.

    The wrapper 0...1 is applied only to nonempty trees, so semilength
    always equals node_count and the single-node tree alone claims "01".
    """
    if t is None:
        return CatalanSequence("")
    out = ["0"]
    stack: list[Node | str] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        left, right = item.left, item.right
        if left is not None and right is None:
            out.append("01")
            stack.append(left)
        elif left is None and right is not None:
            out.append("10")
            stack.append(right)
        elif left is not None and right is not None:
            out.append("00")
            stack.append(right)
            stack.append("11")
            stack.append(left)
    out.append("1")
    return CatalanSequence("".join(out))


class _Shell:
    """Mutable node used while decoding; frozen into Node at the end."""

    __slots__ = ("left", "right")

    def __init__(self):
        self.left = None
        self.right = None


def _freeze(root: _Shell) -> Node:
    frozen: dict[int, Node] = {}
    stack: list[tuple[_Shell | None, bool]] = [(root, False)]
    while stack:
        shell, expanded = stack.pop()
        if shell is None:
            continue
        if expanded:
            frozen[id(shell)] = Node(frozen.get(id(shell.left)), frozen.get(id(shell.right)))
        else:
            stack.append((shell, True))
            stack.append((shell.right, False))
            stack.append((shell.left, False))
    return frozen[id(root)]


def decode_tree(s: CatalanSequence) -> BinaryTree:
    """Exact inverse of encode_tree, replaying digit pairs with a vertex stack.

    01 hangs a left child and descends; 10 a right child; 00 suspends the
    current vertex before descending left; 11 resumes the suspended vertex
    and descends right.  Valid input never underflows the stack.
    """
    if not s.bits:
        return None
    interior = s.bits[1:-1]
    root = _Shell()
    current = root
    suspended: list[_Shell] = []
    for i in range(0, len(interior), 2):
        pair = interior[i : i + 2]
        child = _Shell()
        if pair == "01":
            current.left = child
        elif pair == "10":
            current.right = child
        elif pair == "00":
            suspended.append(current)
            current.left = child
        else:
            assert suspended, "pair stream of a valid sequence underflowed the stack"
            current = suspended.pop()
            current.right = child
        current = child
    assert not suspended, "pair stream of a valid sequence left suspended vertices"
    return _freeze(root)


def extend_tree(t: BinaryTree) -> ExtendedBinaryTree:
    """Complete every node to two children: Empty becomes a leaf, each Node
    an Internal.  internal_count of the result equals node_count(t)."""
    if t is None:
        return None
    done: dict[int, Internal] = {}
    stack: list[tuple[Node | None, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if node is None:
            continue
        if expanded:
            done[id(node)] = Internal(done.get(id(node.left)), done.get(id(node.right)))
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    return done[id(t)]


def strip_leaves(e: ExtendedBinaryTree) -> BinaryTree:
    """Inverse of extend_tree: drop all leaves, keep the internal shape."""
    if e is None:
        return None
    done: dict[int, Node] = {}
    stack: list[tuple[Internal | None, bool]] = [(e, False)]
    while stack:
        node, expanded = stack.pop()
        if node is None:
            continue
        if expanded:
            done[id(node)] = Node(done.get(id(node.left)), done.get(id(node.right)))
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    return done[id(e)]


def encode_expression(e: ExtendedBinaryTree) -> CatalanSequence:
    """Total expression codec: strip leaves, then encode the binary tree.
    An expression with n multiplications yields semilength n."""
    return encode_tree(strip_leaves(e))


def decode_expression(s: CatalanSequence) -> ExtendedBinaryTree:
    """Inverse of encode_expression: decode the tree, then re-grow leaves."""
    return extend_tree(decode_tree(s))


def parse_mult(text: str) -> ExtendedBinaryTree:
    """Parse the grammar  Expr := "a" | "(" Expr "*" Expr ")".

    Raises ParseError with the 1-based offending position.
    """
    pos = 0
    length = len(text)
    frames: list[list[ExtendedBinaryTree]] = []
    while True:
        if pos >= length:
            raise ParseError("unexpected end of expression", pos + 1)
        ch = text[pos]
        if ch == "(":
            frames.append([])
            pos += 1
            continue
        if ch != "a":
            raise ParseError(f"expected '(' or 'a', found {ch!r}", pos + 1)
        node: ExtendedBinaryTree = None
        pos += 1
        while True:  # attach the finished subexpression upward
            if not frames:
                if pos != length:
                    raise ParseError("trailing characters after expression", pos + 1)
                return node
            frame = frames[-1]
            if not frame:
                frame.append(node)
                if pos >= length or text[pos] != "*":
                    raise ParseError("expected '*'", pos + 1)
                pos += 1
                break
            if pos >= length or text[pos] != ")":
                raise ParseError("expected ')'", pos + 1)
            pos += 1
            node = Internal(frame[0], node)
            frames.pop()


def render_mult(e: ExtendedBinaryTree) -> str:
    """Canonical parenthesized text; every factor is the letter 'a'."""
    out = []
    stack: list[Internal | str | None] = [e]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif item is None:
            out.append("a")
        else:
            stack.extend((")", item.right, "*", item.left, "("))
    return "".join(out)


def parse_rpn(text: str) -> ExtendedBinaryTree:
    """Build an expression from a postfix word over {'a', '*'}.

    Raises StackUnderflowError when an operator lacks two operands and
    ExcessOperandsError when more than one value remains at the end.
    """
    stack: list[ExtendedBinaryTree] = []
    for i, ch in enumerate(text):
        if ch == "a":
            stack.append(None)
        elif ch == "*":
            if len(stack) < 2:
                raise StackUnderflowError(i + 1)
            right = stack.pop()
            left = stack.pop()
            stack.append(Internal(left, right))
        else:
            raise ParseError(f"expected 'a' or '*', found {ch!r}", i + 1)
    if not stack:
        raise ParseError("empty postfix word", 1)
    if len(stack) > 1:
        raise ExcessOperandsError(len(stack))
    return stack[0]


def render_rpn(e: ExtendedBinaryTree) -> str:
    """Postorder text: left body, right body, '*' per multiplication."""
    out = []
    stack: list[Internal | str | None] = [e]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif item is None:
            out.append("a")
        else:
            stack.extend(("*", item.right, item.left))
    return "".join(out)


def rpn_paper_encode(e: ExtendedBinaryTree) -> CatalanSequence:
    """Postfix wire format: operand -> 0, operator -> 1, then one extra 1.

    An expression with k factors encodes to semilength k, always a valid
    sequence (operands strictly dominate operators in every proper prefix).
    """
    bits = render_rpn(e).translate(_RPN_TO_BITS) + "1"
    return CatalanSequence(bits)


def rpn_paper_decode(s: CatalanSequence) -> ExtendedBinaryTree:
    """Partial inverse of rpn_paper_encode.

    Drops the final 1 and reads the rest as a postfix word; raises
    NotInImageError when that word is not well formed, which happens for
    every valid sequence outside the wire format's image.
    """
    if not s.bits:
        raise NotInImageError("the empty sequence is outside the rpn-paper image")
    word = s.bits[:-1].translate(_BITS_TO_RPN)
    try:
        return parse_rpn(word)
    except ParseError as exc:
        raise NotInImageError(f"sequence {s.bits} is outside the rpn-paper image") from exc


def parse_tree(text: str) -> BinaryTree:
    """Parse the tree text form  Tree := "." | "(" Tree " " Tree ")"."""
    pos = 0
    length = len(text)
    frames: list[list[BinaryTree]] = []
    while True:
        if pos >= length:
            raise ParseError("unexpected end of tree text", pos + 1)
        ch = text[pos]
        if ch == "(":
            frames.append([])
            pos += 1
            continue
        if ch != ".":
            raise ParseError(f"expected '(' or '.', found {ch!r}", pos + 1)
        node: BinaryTree = None
        pos += 1
        while True:
            if not frames:
                if pos != length:
                    raise ParseError("trailing characters after tree", pos + 1)
                return node
            frame = frames[-1]
            if not frame:
                frame.append(node)
                if pos >= length or text[pos] != " ":
                    raise ParseError("expected ' ' between subtrees", pos + 1)
                pos += 1
                break
            if pos >= length or text[pos] != ")":
                raise ParseError("expected ')'", pos + 1)
            pos += 1
            node = Node(frame[0], node)
            frames.pop()


def render_tree(t: BinaryTree) -> str:
    """Canonical tree text: "." for empty, "(left right)" otherwise."""
    out = []
    stack: list[Node | str | None] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif item is None:
            out.append(".")
        else:
            stack.extend((")", item.right, " ", item.left, "("))
    return "".join(out)
