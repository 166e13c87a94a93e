"""Between-nodes edit cursors with O(1) amortised editing.

The cursor sits between two sibling sequences, like a text editor's point
sits between characters. Moves, inserts, deletes and replaces are O(1).
Rebuilding of the enclosing node is deferred until ``up``; a per-level
``changed`` flag lets ``up`` hand back the stored parent untouched when only
movement happened, so browsing never allocates new tree structure.

``up`` from a level with ``n`` trees to its left costs O(n), but those ``n``
trees got there through ``n`` earlier moves or inserts, so over any
single-threaded script every operation is O(1) amortised. Branching a cursor
and continuing from both copies can pay that debt twice.

>>> from treecursor.tree import parse_notation, to_notation
>>> c = EditCursor.start(parse_notation("a(b,c)"))
>>> c = c.down(RIGHT).insert(RIGHT, parse_notation("x"))
>>> to_notation(c.extract())
'a(x,b,c)'
"""

from __future__ import annotations

import enum
from typing import Any, NamedTuple, Optional

from .errors import AtBoundary, EmptyDocument, MultipleRoots
from .plist import NIL, PList, append, cons, reverse_append
from .tree import Tree, rebuild

__all__ = ["Side", "LEFT", "RIGHT", "ParentLink", "EditFlags", "EditCursor", "start"]


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


LEFT = Side.LEFT
RIGHT = Side.RIGHT


class ParentLink(NamedTuple):
    """Which side of the parent cursor we went down on, and the parent itself."""

    side: Side
    cursor: "EditCursor"


class EditFlags(NamedTuple):
    at_top: bool
    at_left: bool
    at_right: bool


def _side(side) -> Side:
    return side if isinstance(side, Side) else Side(side)


class EditCursor:
    __slots__ = ("left", "right", "changed", "parent")

    def __init__(self, left: PList, right: PList, changed: bool, parent: Optional[ParentLink]):
        self.left = left
        self.right = right
        self.changed = changed
        self.parent = parent

    @classmethod
    def start(cls, t: Tree) -> EditCursor:
        return cls(NIL, cons(t, NIL), False, None)

    @property
    def at_top(self) -> bool:
        return self.parent is None

    @property
    def at_left(self) -> bool:
        return self.left is NIL

    @property
    def at_right(self) -> bool:
        return self.right is NIL

    def flags(self) -> EditFlags:
        return EditFlags(self.at_top, self.at_left, self.at_right)

    def _near(self, side: Side, op: str) -> PList:
        seq = self.left if side is LEFT else self.right
        if seq is NIL:
            raise AtBoundary(op, side.value)
        return seq

    def peek(self, side) -> Tree:
        """The nearest tree on ``side``."""
        side = _side(side)
        return self._near(side, "peek").head

    def peek_datum(self, side) -> Any:
        side = _side(side)
        return self._near(side, "peek_datum").head.datum

    def move(self, side) -> EditCursor:
        """Carry one whole tree across the position. Leaves ``changed`` alone."""
        side = _side(side)
        seq = self._near(side, "move")
        if side is LEFT:
            return EditCursor(seq.tail, cons(seq.head, self.right), self.changed, self.parent)
        return EditCursor(cons(seq.head, self.left), seq.tail, self.changed, self.parent)

    def insert(self, side, t: Tree) -> EditCursor:
        side = _side(side)
        if side is LEFT:
            return EditCursor(cons(t, self.left), self.right, True, self.parent)
        return EditCursor(self.left, cons(t, self.right), True, self.parent)

    def delete(self, side) -> tuple[Tree, EditCursor]:
        """Remove the nearest tree on ``side``; returns it with the new cursor."""
        side = _side(side)
        seq = self._near(side, "delete")
        if side is LEFT:
            return seq.head, EditCursor(seq.tail, self.right, True, self.parent)
        return seq.head, EditCursor(self.left, seq.tail, True, self.parent)

    def replace(self, side, t: Tree) -> EditCursor:
        # no equality check against the old tree: that would not be O(1)
        side = _side(side)
        seq = self._near(side, "replace")
        if side is LEFT:
            return EditCursor(cons(t, seq.tail), self.right, True, self.parent)
        return EditCursor(self.left, cons(t, seq.tail), True, self.parent)

    def down(self, side) -> EditCursor:
        """Enter the nearest tree on ``side``, positioned before its first child."""
        side = _side(side)
        seq = self._near(side, "down")
        return EditCursor(NIL, seq.head.children, False, ParentLink(side, self))

    def promote_children(self, side) -> EditCursor:
        """Replace the nearest tree on ``side`` by its children, in document order. O(#children)."""
        side = _side(side)
        seq = self._near(side, "promote_children")
        kids = seq.head.children
        if side is LEFT:
            return EditCursor(reverse_append(kids, seq.tail), self.right, True, self.parent)
        return EditCursor(self.left, append(kids, seq.tail), True, self.parent)

    def up(self) -> EditCursor:
        link = self.parent
        if link is None:
            raise AtBoundary("up", "top")
        p = link.cursor
        if not self.changed:
            return p
        kids = reverse_append(self.left, self.right)
        if link.side is LEFT:
            node = rebuild(kids, p.left.head)
            return EditCursor(cons(node, p.left.tail), p.right, True, p.parent)
        node = rebuild(kids, p.right.head)
        return EditCursor(p.left, cons(node, p.right.tail), True, p.parent)

    def top(self) -> EditCursor:
        c = self
        while c.parent is not None:
            c = c.up()
        return c

    def extract(self) -> Tree:
        """The edited tree. Climbs to the top and rewinds; this cursor stays usable."""
        c = self.top()
        seq = reverse_append(c.left, c.right) if c.left is not NIL else c.right
        if seq is NIL:
            raise EmptyDocument("no tree left at the top level")
        if seq.tail is not NIL:
            raise MultipleRoots(len(seq))
        return seq.head

    def __repr__(self):
        side = self.parent.side.value if self.parent else None
        return (
            f"EditCursor(left={[t.datum for t in self.left]!r}, "
            f"right={[t.datum for t in self.right]!r}, changed={self.changed}, parent={side})"
        )


def start(t: Tree) -> EditCursor:
    return EditCursor.start(t)
