"""Persistent rose trees with O(1) navigation cursors and O(1) amortised edit cursors."""

from .edit import LEFT, RIGHT, EditCursor, Side
from .errors import (
    AtBoundary,
    ConsistencyError,
    EmptyDocument,
    IndexOutOfRange,
    InvalidDocument,
    MultipleRoots,
    NotAtTop,
    ParseError,
    SourceMismatch,
    TreeCursorError,
)
from .nav import NavCursor, collect, root_path
from .tree import (
    Tree,
    build_uniform,
    children,
    datum,
    labels,
    leaf,
    make_node,
    parse_notation,
    preorder_stream,
    rebuild,
    size,
    to_notation,
)

__version__ = "0.1.0"
