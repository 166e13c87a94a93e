"""Exception types shared across the package."""


class TreeCursorError(Exception):
    pass


class AtBoundary(TreeCursorError):
    """A move or peek was attempted past the edge of a sibling sequence or the tree."""

    def __init__(self, op: str, boundary: str):
        super().__init__(f"{op}: cursor is at {boundary}")
        self.op = op
        self.boundary = boundary


class NotAtTop(TreeCursorError):
    pass


class IndexOutOfRange(TreeCursorError, IndexError):
    pass


class EmptyDocument(TreeCursorError):
    pass


class MultipleRoots(TreeCursorError):
    def __init__(self, count: int):
        super().__init__(f"top level holds {count} trees, expected exactly one")
        self.count = count


class SourceMismatch(TreeCursorError):
    pass


class ParseError(TreeCursorError):
    def __init__(self, offset: int, message: str):
        super().__init__(f"byte {offset}: {message}")
        self.offset = offset
        self.message = message


class InvalidDocument(TreeCursorError):
    pass


class ConsistencyError(TreeCursorError):
    pass
