"""Traversal benchmark: direct vs cursor-based, search vs list building.

Builds a complete shared tree and walks it four ways, reporting the node
count, wall time and the number of list cells allocated during the walk.
"""

from __future__ import annotations

import enum
import time
from dataclasses import asdict, dataclass

from .errors import ConsistencyError
from .nav import NavCursor, collect
from .plist import count_cells
from .tree import build_uniform, labels, preorder_stream, uniform_size

__all__ = ["Method", "BenchReport", "run_bench", "verify_lists"]


class Method(str, enum.Enum):
    SEARCH_DIRECT = "search_direct"
    SEARCH_CURSOR = "search_cursor"
    LIST_DIRECT = "list_direct"
    LIST_CURSOR = "list_cursor"


@dataclass(frozen=True)
class BenchReport:
    method: str
    depth: int
    branch: int
    node_count: int
    wall_time: float
    cell_ops: int

    def to_dict(self) -> dict:
        return asdict(self)


def _search_direct(t) -> int:
    n = 0
    for node in preorder_stream(t):
        node.datum
        n += 1
    return n


def _search_cursor(t) -> int:
    n = 0
    for c in NavCursor.from_tree(t).descendants_or_self():
        c.focus_datum()
        n += 1
    return n


def _list_direct(t) -> int:
    return len(labels(t))


def _list_cursor(t) -> int:
    return len(collect(NavCursor.from_tree(t)))


_RUNNERS = {
    Method.SEARCH_DIRECT: _search_direct,
    Method.SEARCH_CURSOR: _search_cursor,
    Method.LIST_DIRECT: _list_direct,
    Method.LIST_CURSOR: _list_cursor,
}


def run_bench(depth: int, branch: int, method) -> BenchReport:
    method = Method(method)
    tree = build_uniform(depth, branch)
    expected = uniform_size(depth, branch)
    with count_cells() as cells:
        t0 = time.perf_counter()
        seen = _RUNNERS[method](tree)
        elapsed = time.perf_counter() - t0
    if seen != expected:
        raise ConsistencyError(f"{method.value} visited {seen} nodes, expected {expected}")
    return BenchReport(method.value, depth, branch, seen, elapsed, cells.total)


def verify_lists(depth: int, branch: int) -> None:
    """Check that the direct and cursor list builders agree element by element."""
    tree = build_uniform(depth, branch)
    direct = labels(tree)
    via_cursor = collect(NavCursor.from_tree(tree))
    if len(direct) != len(via_cursor):
        raise ConsistencyError(f"list lengths differ: {len(direct)} vs {len(via_cursor)}")
    for i, (a, b) in enumerate(zip(direct, via_cursor)):
        if a != b:
            raise ConsistencyError(f"labels differ at position {i}: {a!r} vs {b!r}")
