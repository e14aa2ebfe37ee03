"""Independent oracles the tests check the library against.

Nothing here calls into catseq: predicates and reference constructions
are written directly from the defining conditions, mostly by brute
force, so they stay independent of the code paths under test.
"""

from __future__ import annotations

from itertools import product


def is_catalan_word(word: str) -> bool:
    """Equal 0/1 totals and no prefix with more 1s than 0s."""
    balance = 0
    for ch in word:
        balance += 1 if ch == "0" else -1
        if balance < 0:
            return False
    return balance == 0


def brute_sequences(n: int) -> list[str]:
    """All valid words of length 2n by filtering every binary word."""
    return ["".join(w) for w in product("01", repeat=2 * n) if is_catalan_word("".join(w))]


def brute_count(n: int) -> int:
    """Number of valid words of length 2n, scanning all 2^(2n) candidates."""
    length = 2 * n
    total = 0
    for word in range(1 << length):
        balance = 0
        for i in range(length - 1, -1, -1):
            if (word >> i) & 1:
                balance -= 1
                if balance < 0:
                    break
            else:
                balance += 1
        else:
            if balance == 0:
                total += 1
    return total


def matched_pairs(bits: str) -> set[tuple[int, int]]:
    """Parenthesis matching with 0 open and 1 close; 1-based positions."""
    stack: list[int] = []
    pairs = set()
    for pos, ch in enumerate(bits, start=1):
        if ch == "0":
            stack.append(pos)
        else:
            pairs.add((stack.pop(), pos))
    assert not stack
    return pairs


def ref_encode_tree(t) -> str:
    """Recursive reference encoder straight from the edge-pair rules.

    Accepts any tree value with .left/.right attributes and None for the
    empty tree; only usable for small trees (it recurses).
    """
    if t is None:
        return ""

    def body(node) -> str:
        left, right = node.left, node.right
        if left is not None and right is None:
            return "01" + body(left)
        if left is None and right is not None:
            return "10" + body(right)
        if left is not None and right is not None:
            return "00" + body(left) + "11" + body(right)
        return ""

    return "0" + body(t) + "1"
