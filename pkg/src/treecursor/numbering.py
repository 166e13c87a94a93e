"""Preorder numbering for O(1) node identity and document-order comparison.

Cursors cannot be compared cheaply, since two cursors carry the whole tree.
Numbering the tree first puts a preorder index into every datum; identity and
ordering of cursors then reduce to comparing two integers.
"""

from __future__ import annotations

import bisect
from typing import Any, Iterable, NamedTuple, Optional

from .errors import SourceMismatch
from .nav import NavCursor
from .plist import NIL, plist
from .tree import Tree, map_tree

__all__ = [
    "Numbered",
    "SourceToken",
    "number_tree",
    "strip_numbers",
    "node_id",
    "same_node",
    "compare_nodes",
    "NodeSet",
    "EMPTY",
    "set_insert",
    "set_union",
    "set_members",
    "node_set",
]

LT, EQ, GT = -1, 0, 1


class SourceToken:
    """Opaque marker minted once per ``number_tree`` call."""

    __slots__ = ()

    def __repr__(self):
        return f"<source {id(self):#x}>"


class Numbered(NamedTuple):
    id: int
    datum: Any
    source: SourceToken


def number_tree(t: Tree) -> Tree:
    """Copy of ``t`` whose data are ``Numbered(preorder index, datum, token)``.

    Shared subtrees are expanded, so numbering a ``build_uniform`` tree costs
    memory proportional to its logical size.
    """
    token = SourceToken()
    # same frame layout as tree.map_tree, but ids must be handed out on entry
    root = Numbered(0, t.datum, token)
    stack = [(root, t.children, [])]
    counter = 1
    while True:
        num, rest, done = stack[-1]
        if rest is not NIL:
            stack[-1] = (num, rest.tail, done)
            child = rest.head
            stack.append((Numbered(counter, child.datum, token), child.children, []))
            counter += 1
            continue
        stack.pop()
        built = Tree(num, plist(done))
        if not stack:
            return built
        stack[-1][2].append(built)


def strip_numbers(t: Tree) -> Tree:
    return map_tree(lambda n: n.datum, t)


def node_id(c: NavCursor) -> int:
    return c.focus.datum.id


def same_node(c1: NavCursor, c2: NavCursor) -> bool:
    """True when both cursors focus the same node. Assumes one numbered source tree."""
    return c1.focus.datum.id == c2.focus.datum.id


def compare_nodes(c1: NavCursor, c2: NavCursor) -> int:
    """Document order of two cursors: -1, 0 or 1."""
    a, b = c1.focus.datum.id, c2.focus.datum.id
    return (a > b) - (a < b)


class NodeSet:
    """Immutable set of node ids kept in document order, tied to one numbered tree."""

    __slots__ = ("ids", "source")

    def __init__(self, ids: tuple = (), source: Optional[SourceToken] = None):
        self.ids = ids
        self.source = source

    def __len__(self):
        return len(self.ids)

    def __iter__(self):
        return iter(self.ids)

    def __contains__(self, node: int):
        i = bisect.bisect_left(self.ids, node)
        return i < len(self.ids) and self.ids[i] == node

    def __eq__(self, other):
        if not isinstance(other, NodeSet):
            return NotImplemented
        return self.ids == other.ids and (
            self.source is None or other.source is None or self.source is other.source
        )

    def __hash__(self):
        return hash(self.ids)

    def __repr__(self):
        return f"NodeSet({list(self.ids)})"

    def _check(self, source: Optional[SourceToken]) -> Optional[SourceToken]:
        if self.source is None:
            return source
        if source is not None and source is not self.source:
            raise SourceMismatch("node sets come from different numbered trees")
        return self.source


EMPTY = NodeSet()


def set_insert(s: NodeSet, c: NavCursor) -> NodeSet:
    num: Numbered = c.focus.datum
    source = s._check(num.source)
    i = bisect.bisect_left(s.ids, num.id)
    if i < len(s.ids) and s.ids[i] == num.id:
        return s if s.source is source else NodeSet(s.ids, source)
    return NodeSet(s.ids[:i] + (num.id,) + s.ids[i:], source)


def set_union(s1: NodeSet, s2: NodeSet) -> NodeSet:
    source = s1._check(s2.source)
    a, b = s1.ids, s2.ids
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        elif b[j] < a[i]:
            out.append(b[j])
            j += 1
        else:
            out.append(a[i])
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return NodeSet(tuple(out), source)


def set_members(s: NodeSet) -> list[int]:
    return list(s.ids)


def node_set(cursors: Iterable[NavCursor]) -> NodeSet:
    s = EMPTY
    for c in cursors:
        s = set_insert(s, c)
    return s
