"""Immutable rose trees and the direct (cursor-free) traversals over them."""

from __future__ import annotations

import re
from typing import Any, Iterable, Iterator

from .plist import NIL, PList, cons, plist

__all__ = [
    "Tree",
    "make_node",
    "leaf",
    "datum",
    "children",
    "rebuild",
    "build_uniform",
    "uniform_size",
    "size",
    "labels",
    "preorder_stream",
    "map_tree",
    "parse_notation",
    "to_notation",
]


class Tree:
    """A datum plus an ordered, shared sequence of child trees."""

    __slots__ = ("datum", "children")

    def __init__(self, datum: Any, children: PList = NIL):
        self.datum = datum
        self.children = children

    def __setattr__(self, name, value):
        if hasattr(self, "children"):
            raise AttributeError("Tree is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return _tree_equal(self, other)

    def __hash__(self):
        return hash((self.datum, len(self.children)))

    def __repr__(self):
        kids = ",".join(repr(c) for c in self.children)
        return f"node({self.datum!r},[{kids}])"


def _tree_equal(a: Tree, b: Tree) -> bool:
    # explicit stack: trees may be deeper than the interpreter recursion limit
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        if x.datum != y.datum:
            return False
        xs, ys = x.children, y.children
        while xs is not ys:
            if xs is NIL or ys is NIL:
                return False
            stack.append((xs.head, ys.head))
            xs, ys = xs.tail, ys.tail
    return True


def make_node(datum: Any, kids: Iterable[Tree] = NIL) -> Tree:
    """Build a node. A ``PList`` of children is stored as is, anything else is copied into one."""
    return Tree(datum, plist(kids))


def leaf(d: Any) -> Tree:
    return Tree(d, NIL)


def datum(t: Tree) -> Any:
    return t.datum


def children(t: Tree) -> PList:
    return t.children


def rebuild(new_children: Iterable[Tree], t: Tree) -> Tree:
    """A copy of ``t`` with its datum and ``new_children``."""
    return Tree(t.datum, plist(new_children))


def build_uniform(depth: int, branch: int) -> Tree:
    """Complete ``branch``-ary tree of the given depth, one shared subtree per level.

    Data count down from ``depth`` at the root to 0 at the leaves. Physical
    size is O(depth) while the logical node count is
    ``(branch**(depth+1) - 1) // (branch - 1)``.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if branch < 1:
        raise ValueError(f"branch must be >= 1, got {branch}")
    t = Tree(0, NIL)
    for d in range(1, depth + 1):
        kids = NIL
        for _ in range(branch):
            kids = cons(t, kids)
        t = Tree(d, kids)
    return t


def uniform_size(depth: int, branch: int) -> int:
    if branch == 1:
        return depth + 1
    return (branch ** (depth + 1) - 1) // (branch - 1)


def preorder_stream(t: Tree) -> Iterator[Tree]:
    """Lazily yield every subtree of ``t`` in preorder, ``t`` first."""
    yield t
    stack = [t.children]
    while stack:
        rest = stack[-1]
        if rest is NIL:
            stack.pop()
            continue
        stack[-1] = rest.tail
        node = rest.head
        yield node
        stack.append(node.children)


def size(t: Tree) -> int:
    n = 0
    for _ in preorder_stream(t):
        n += 1
    return n


def labels(t: Tree) -> list:
    return [node.datum for node in preorder_stream(t)]


def map_tree(fn, t: Tree) -> Tree:
    """Same shape as ``t`` with ``fn`` applied to every datum (post-order, no recursion)."""
    # each frame: (node, remaining children, mapped children so far)
    stack = [(t, t.children, [])]
    while True:
        node, rest, done = stack[-1]
        if rest is not NIL:
            stack[-1] = (node, rest.tail, done)
            child = rest.head
            stack.append((child, child.children, []))
            continue
        stack.pop()
        built = Tree(fn(node.datum), plist(done))
        if not stack:
            return built
        stack[-1][2].append(built)


_TOKEN = re.compile(r"\s*(?:([A-Za-z0-9_]+)|([(),]))")


def _notation_datum(word: str):
    return int(word) if word.isdigit() else word


def parse_notation(text: str) -> Tree:
    """Parse the fixture notation ``a(b(d,e),c)``; whitespace is ignored.

    Words made only of digits become ``int`` data, other words stay strings.
    """
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad tree notation at offset {pos}: {text[pos:pos + 10]!r}")
        tokens.append((m.group(1), m.group(2), m.start(1) if m.group(1) else m.start(2)))
        pos = m.end()

    # frames: [datum, collected children]
    stack: list = []
    i = 0
    result = None

    def expect_word(j):
        if j >= len(tokens) or tokens[j][0] is None:
            where = tokens[j][2] if j < len(tokens) else len(text)
            raise ValueError(f"expected datum at offset {where}")
        return tokens[j][0]

    word = expect_word(i)
    i += 1
    while True:
        if i < len(tokens) and tokens[i][1] == "(":
            stack.append([_notation_datum(word), []])
            word = expect_word(i + 1)
            i += 2
            continue
        node = Tree(_notation_datum(word), NIL)
        # close as many frames as ")" tokens allow, then expect "," or end
        while True:
            if not stack:
                result = node
                break
            stack[-1][1].append(node)
            if i < len(tokens) and tokens[i][1] == ",":
                break
            if i < len(tokens) and tokens[i][1] == ")":
                d, kids = stack.pop()
                node = Tree(d, plist(kids))
                i += 1
                continue
            where = tokens[i][2] if i < len(tokens) else len(text)
            raise ValueError(f"expected ',' or ')' at offset {where}")
        if result is not None:
            if i != len(tokens):
                raise ValueError(f"trailing input at offset {tokens[i][2]}")
            return result
        word = expect_word(i + 1)
        i += 2


def to_notation(t: Tree) -> str:
    parts = []
    stack: list = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        parts.append(str(item.datum))
        if item.children is NIL:
            continue
        stack.append(")")
        kids = list(item.children)
        for k, child in enumerate(reversed(kids)):
            stack.append(child)
            if k != len(kids) - 1:
                stack.append(",")
        stack.append("(")
    return "".join(parts)
