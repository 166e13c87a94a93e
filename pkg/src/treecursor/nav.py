"""Read-only navigation cursors over an unchanging tree.

A cursor is a focus subtree together with its left siblings, its right
siblings (both nearest first) and the cursor of its parent. Every step in any
of the four directions is O(1) and allocates at most one list cell; the tree
itself is never touched.

>>> from treecursor.tree import parse_notation
>>> c = NavCursor.from_tree(parse_notation("a(b,c(d))"))
>>> c.down_first().next_sibling().down_first().focus_datum()
'd'
"""

from __future__ import annotations

from typing import Any, Iterator, NamedTuple, Optional

from .errors import AtBoundary, IndexOutOfRange, NotAtTop
from .plist import NIL, PList, cons
from .tree import Tree

__all__ = ["NavCursor", "PositionFlags", "from_tree", "collect", "root_path"]


class PositionFlags(NamedTuple):
    at_left: bool
    at_right: bool
    at_top: bool
    at_bottom: bool


class NavCursor:
    # No __eq__ on purpose: structural comparison would walk the whole source
    # tree. Compare positions with root_path() or numbered data instead.
    __slots__ = ("focus", "left", "right", "parent")

    def __init__(self, focus: Tree, left: PList, right: PList, parent: Optional[NavCursor]):
        self.focus = focus
        self.left = left
        self.right = right
        self.parent = parent

    @classmethod
    def from_tree(cls, t: Tree) -> NavCursor:
        return cls(t, NIL, NIL, None)

    def to_tree(self) -> Tree:
        if self.parent is not None or self.left is not NIL or self.right is not NIL:
            raise NotAtTop("cursor is not at the root")
        return self.focus

    def focus_datum(self) -> Any:
        return self.focus.datum

    @property
    def at_left(self) -> bool:
        return self.left is NIL

    @property
    def at_right(self) -> bool:
        return self.right is NIL

    @property
    def at_top(self) -> bool:
        return self.parent is None

    @property
    def at_bottom(self) -> bool:
        return self.focus.children is NIL

    def position_flags(self) -> PositionFlags:
        return PositionFlags(self.at_left, self.at_right, self.at_top, self.at_bottom)

    def next_sibling(self) -> NavCursor:
        r = self.right
        if r is NIL:
            raise AtBoundary("next_sibling", "right")
        return NavCursor(r.head, cons(self.focus, self.left), r.tail, self.parent)

    def prev_sibling(self) -> NavCursor:
        l = self.left
        if l is NIL:
            raise AtBoundary("prev_sibling", "left")
        return NavCursor(l.head, l.tail, cons(self.focus, self.right), self.parent)

    def down_first(self) -> NavCursor:
        kids = self.focus.children
        if kids is NIL:
            raise AtBoundary("down_first", "bottom")
        return NavCursor(kids.head, NIL, kids.tail, self)

    def down_to(self, index: int) -> NavCursor:
        """Cursor at the ``index``-th child. Costs O(index)."""
        if index < 0:
            raise IndexOutOfRange(f"child index {index} is negative")
        rest = self.focus.children
        before = NIL
        for _ in range(index):
            if rest is NIL:
                break
            before = cons(rest.head, before)
            rest = rest.tail
        if rest is NIL:
            raise IndexOutOfRange(f"focus has no child {index}")
        return NavCursor(rest.head, before, rest.tail, self)

    def up(self) -> NavCursor:
        if self.parent is None:
            raise AtBoundary("up", "top")
        return self.parent

    def root(self) -> NavCursor:
        c = self
        while c.parent is not None:
            c = c.parent
        return c

    def following_siblings(self) -> Iterator[NavCursor]:
        c = self
        while c.right is not NIL:
            c = c.next_sibling()
            yield c

    def preceding_siblings(self) -> Iterator[NavCursor]:
        # walks the stored left context directly, so each step is O(1)
        c = self
        while c.left is not NIL:
            c = c.prev_sibling()
            yield c

    def ancestors(self) -> Iterator[NavCursor]:
        c = self.parent
        while c is not None:
            yield c
            c = c.parent

    def descendants_or_self(self) -> Iterator[NavCursor]:
        """Preorder stream of cursors over the subtree at this cursor, itself first."""
        c = self
        depth = 0
        yield c
        while True:
            if c.focus.children is not NIL:
                c = c.down_first()
                depth += 1
                yield c
                continue
            while depth > 0 and c.right is NIL:
                c = c.parent
                depth -= 1
            if depth == 0:
                return
            c = c.next_sibling()
            yield c

    def __repr__(self):
        return f"NavCursor(focus={self.focus.datum!r}, path={root_path(self)})"


def from_tree(t: Tree) -> NavCursor:
    return NavCursor.from_tree(t)


def root_path(c: NavCursor) -> tuple:
    """Child indexes leading from the root to ``c``; O(sum of left-context lengths)."""
    path = []
    while c.parent is not None:
        path.append(len(c.left))
        c = c.parent
    path.reverse()
    return tuple(path)


def collect(c: NavCursor) -> list:
    """Preorder data of the subtree at ``c`` using cursor moves only."""
    out = [c.focus_datum()]
    if c.at_bottom:
        return out
    pending = [c.down_first()]
    while pending:
        p = pending.pop()
        out.append(p.focus.datum)
        if not p.at_right:
            pending.append(p.next_sibling())
        if not p.at_bottom:
            pending.append(p.down_first())
    return out
