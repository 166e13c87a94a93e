"""Element/text document trees, a small XML-subset parser and serializer, and unfont.

The accepted subset has elements, double-quoted attributes, text and the five
predefined entities. No comments, processing instructions, DOCTYPE, CDATA or
entity declarations. Element and attribute names are folded to lowercase.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .edit import RIGHT, EditCursor
from .errors import InvalidDocument, ParseError
from .plist import NIL, plist
from .tree import Tree

__all__ = ["Element", "PCData", "DocDatum", "parse", "serialize", "unfont", "is_font"]


@dataclass(frozen=True)
class Element:
    name: str
    attributes: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class PCData:
    text: str


DocDatum = Union[Element, PCData]

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9-]*")
_WS = re.compile(r"[ \t\r\n]*")
_TEXT = re.compile(r"[^<]+")
_ATTVALUE = re.compile(r'[^<"]*')
_ENTITY = re.compile(r"&(amp|lt|gt|quot|apos);")
_ENTITIES = {"amp": "&", "lt": "<", "gt": ">", "quot": '"', "apos": "'"}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        pos = self.pos if pos is None else pos
        return ParseError(len(self.text[:pos].encode("utf-8")), message)

    def skip_ws(self) -> bool:
        m = _WS.match(self.text, self.pos)
        self.pos = m.end()
        return m.end() > m.start()

    def name(self, what: str) -> str:
        m = _NAME.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what} name")
        self.pos = m.end()
        return m.group().lower()

    def decode(self, raw: str, base: int) -> str:
        if "&" not in raw:
            return raw
        out = []
        i = 0
        while True:
            j = raw.find("&", i)
            if j < 0:
                out.append(raw[i:])
                return "".join(out)
            out.append(raw[i:j])
            m = _ENTITY.match(raw, j)
            if not m:
                raise self.error("bad entity reference", base + j)
            out.append(_ENTITIES[m.group(1)])
            i = m.end()

    def start_tag(self):
        """Parse after '<'. Returns (name, attributes, self_closing)."""
        name = self.name("element")
        attrs = []
        seen = set()
        while True:
            had_ws = self.skip_ws()
            if self.text.startswith("/>", self.pos):
                self.pos += 2
                return name, tuple(attrs), True
            if self.text.startswith(">", self.pos):
                self.pos += 1
                return name, tuple(attrs), False
            if self.pos >= len(self.text):
                raise self.error(f"unclosed start tag <{name}>")
            if not had_ws:
                raise self.error("expected whitespace, '>' or '/>' in start tag")
            attr_at = self.pos
            attr = self.name("attribute")
            if attr in seen:
                raise self.error(f"duplicate attribute {attr!r}", attr_at)
            seen.add(attr)
            self.skip_ws()
            if not self.text.startswith("=", self.pos):
                raise self.error("expected '=' after attribute name")
            self.pos += 1
            self.skip_ws()
            if not self.text.startswith('"', self.pos):
                raise self.error("expected '\"' to open attribute value")
            self.pos += 1
            m = _ATTVALUE.match(self.text, self.pos)
            self.pos = m.end()
            if not self.text.startswith('"', self.pos):
                raise self.error("unterminated attribute value")
            attrs.append((attr, self.decode(m.group(), m.start())))
            self.pos += 1

    def document(self) -> Tree:
        text = self.text
        self.skip_ws()
        if self.pos >= len(text):
            raise self.error("empty document")
        if text[self.pos] != "<":
            raise self.error("stray text at top level")
        # frames: [name, attributes, children, start offset]
        stack: list = []
        root = None
        while root is None:
            if self.pos >= len(text):
                name = stack[-1][0]
                raise self.error(f"unclosed tag <{name}>", stack[-1][3])
            if text[self.pos] != "<":
                m = _TEXT.match(text, self.pos)
                self.pos = m.end()
                stack[-1][2].append(Tree(PCData(self.decode(m.group(), m.start())), NIL))
                continue
            tag_at = self.pos
            self.pos += 1
            if text.startswith("/", self.pos):
                self.pos += 1
                name = self.name("end tag")
                self.skip_ws()
                if not text.startswith(">", self.pos):
                    raise self.error(f"expected '>' to close </{name}")
                self.pos += 1
                open_name, attrs, kids, _ = stack.pop()
                if name != open_name:
                    raise self.error(f"mismatched end tag </{name}>, expected </{open_name}>", tag_at)
                node = Tree(Element(open_name, attrs), plist(kids))
            else:
                if self.pos < len(text) and text[self.pos] in "!?":
                    raise self.error("comments, declarations and processing instructions are not supported")
                name, attrs, closed = self.start_tag()
                if not closed:
                    stack.append([name, attrs, [], tag_at])
                    continue
                node = Tree(Element(name, attrs), NIL)
            if stack:
                stack[-1][2].append(node)
            else:
                root = node
        self.skip_ws()
        if self.pos < len(text):
            if text[self.pos] == "<":
                raise self.error("multiple root elements")
            raise self.error("stray text at top level")
        return root


def parse(text: str) -> Tree:
    """Parse a document into a tree of ``Element`` and ``PCData`` data.

    Whitespace around the root element is ignored; inside it all text is
    kept verbatim.
    """
    return _Parser(text).document()


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


def serialize(t: Tree) -> str:
    parts = []
    stack: list = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        d = item.datum
        if isinstance(d, PCData):
            if item.children is not NIL:
                raise InvalidDocument("text node has children")
            parts.append(_escape(d.text))
            continue
        if not isinstance(d, Element):
            raise InvalidDocument(f"not a document datum: {d!r}")
        attrs = "".join(f' {k}="{_escape(v)}"' for k, v in d.attributes)
        if item.children is NIL:
            parts.append(f"<{d.name}{attrs}/>")
            continue
        parts.append(f"<{d.name}{attrs}>")
        stack.append(f"</{d.name}>")
        stack.extend(reversed(list(item.children)))
    return "".join(parts)


def is_font(d) -> bool:
    return isinstance(d, Element) and d.name == "font"


def unfont(doc: Tree) -> Tree:
    """Replace every ``font`` element, at any depth, by its children.

    Runs on an edit cursor: after a promotion the loop stays put, so fonts
    exposed by the promotion are examined next. A font at the root can leave
    zero or several top-level trees, which ``extract`` reports as an error.
    """
    c = EditCursor.start(doc)
    depth = 0
    while True:
        if c.at_right:
            if depth == 0:
                break
            c = c.up().move(RIGHT)
            depth -= 1
        elif is_font(c.peek_datum(RIGHT)):
            c = c.promote_children(RIGHT)
        else:
            c = c.down(RIGHT)
            depth += 1
    return c.extract()
