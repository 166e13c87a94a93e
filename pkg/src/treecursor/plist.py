"""Persistent singly linked lists.

Cursor contexts need O(1) prepend and O(1) head/tail with full sharing, which
Python's tuple and list types do not give. Every cell allocation goes through
``cons`` so that benchmarks and tests can count them.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterable, Iterator

__all__ = [
    "PList",
    "NIL",
    "cons",
    "plist",
    "reverse_append",
    "append",
    "cell_count",
    "count_cells",
]

_cells = 0


class PList:
    """An immutable cons cell, or the empty list ``NIL``."""

    __slots__ = ("head", "tail")

    def __init__(self, head, tail):
        self.head = head
        self.tail = tail

    def __bool__(self):
        return self is not NIL

    def __iter__(self) -> Iterator:
        node = self
        while node is not NIL:
            yield node.head
            node = node.tail

    def __len__(self):
        n = 0
        node = self
        while node is not NIL:
            n += 1
            node = node.tail
        return n

    def __eq__(self, other):
        if not isinstance(other, PList):
            return NotImplemented
        a, b = self, other
        while a is not b:
            if a is NIL or b is NIL:
                return False
            if a.head is not b.head and a.head != b.head:
                return False
            a, b = a.tail, b.tail
        return True

    def __hash__(self):
        return hash(tuple(self))

    def __repr__(self):
        return "plist([%s])" % ", ".join(map(repr, self))


NIL = PList(None, None)


def cons(head, tail: PList) -> PList:
    global _cells
    _cells += 1
    return PList(head, tail)


def plist(items: Iterable = ()) -> PList:
    """Build a list holding ``items`` in order."""
    if isinstance(items, PList):
        return items
    out = NIL
    for x in reversed(list(items)):
        out = cons(x, out)
    return out


def reverse_append(xs: PList, tail: PList) -> PList:
    """Prepend the elements of ``xs`` onto ``tail`` one at a time (reversing them)."""
    while xs is not NIL:
        tail = cons(xs.head, tail)
        xs = xs.tail
    return tail


def append(xs: PList, ys: PList) -> PList:
    if ys is NIL:
        return xs
    for x in reversed(list(xs)):
        ys = cons(x, ys)
    return ys


def cell_count() -> int:
    """Total cells allocated by ``cons`` since import."""
    return _cells


class CellTally:
    __slots__ = ("_start", "_stop")

    def __init__(self):
        self._start = _cells
        self._stop = None

    @property
    def total(self) -> int:
        end = _cells if self._stop is None else self._stop
        return end - self._start


@contextmanager
def count_cells():
    """Count cells allocated inside the ``with`` block.

    >>> with count_cells() as tally:
    ...     _ = cons(1, cons(2, NIL))
    >>> tally.total
    2
    """
    tally = CellTally()
    try:
        yield tally
    finally:
        tally._stop = _cells
