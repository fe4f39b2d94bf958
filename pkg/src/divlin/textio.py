"""The matrix file format.

A block is a header followed by the stored matrix, one row per line::

    [P]
    scalar gf 2
    right
    2 2
    1 0
    1 0

The optional ``[LABEL]`` line names the block. ``#`` starts a comment that
runs to the end of the line; blank lines are ignored. The matrix is the one
held by :class:`LinMap`: ``cod x dom`` for right maps, ``dom x cod`` for left
maps. Printing always produces the canonical form, so that
``format_matrix(parse_matrix(text))`` is a fixed point.
"""

from __future__ import annotations

import re

from .errors import DivlinError, ParseError
from .linmap import LinMap
from .scalar import ScalarDomain, parse_domain
from .space import LEFT, RIGHT, Chirality, Space, Subspace, Vec

_TOKEN = re.compile(r"\S+")
_LABEL = re.compile(r"\[([A-Za-z0-9_.-]+)\]$")


class _Lines:
    """Non-blank, comment-stripped lines with their 1-based line numbers."""

    def __init__(self, text: str):
        self.items = []
        for n, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            if line.strip():
                self.items.append((n, line))
        self.pos = 0
        self.last = len(text.splitlines()) + 1

    def done(self) -> bool:
        return self.pos >= len(self.items)

    def peek(self):
        return self.items[self.pos]

    def next(self, what: str):
        if self.done():
            raise ParseError(f"unexpected end of input, expected {what}", self.last, 1)
        item = self.items[self.pos]
        self.pos += 1
        return item

    @staticmethod
    def tokens(line: str):
        return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _parse_int(tok: str, n: int, col: int, what: str) -> int:
    if not re.fullmatch(r"\d+", tok):
        raise ParseError(f"expected a nonnegative integer for {what}, got {tok!r}", n, col)
    return int(tok)


def _parse_block(lines: _Lines) -> LinMap:
    n, line = lines.next("'scalar' header")
    toks = lines.tokens(line)
    if toks[0][0] != "scalar":
        raise ParseError(f"expected 'scalar', got {toks[0][0]!r}", n, toks[0][1])
    if len(toks) < 2:
        raise ParseError("missing scalar domain after 'scalar'", n, len(line) + 1)
    try:
        domain = parse_domain(" ".join(t for t, _ in toks[1:]))
    except (ValueError, DivlinError) as exc:
        raise ParseError(str(exc), n, toks[1][1]) from None

    n, line = lines.next("chirality")
    toks = lines.tokens(line)
    if len(toks) != 1 or toks[0][0] not in ("right", "left"):
        raise ParseError(f"expected 'right' or 'left', got {line.strip()!r}", n, toks[0][1])
    chirality = RIGHT if toks[0][0] == "right" else LEFT

    n, line = lines.next("matrix dimensions")
    toks = lines.tokens(line)
    if len(toks) != 2:
        raise ParseError("expected two dimensions 'rows cols'", n, toks[0][1])
    nrows = _parse_int(*toks[0], n, "rows")
    ncols = _parse_int(*toks[1], n, "cols")

    rows = []
    if ncols > 0:
        for _ in range(nrows):
            n, line = lines.next("a matrix row")
            toks = lines.tokens(line)
            if len(toks) != ncols:
                col = toks[min(len(toks), ncols)][1] if len(toks) > ncols else len(line) + 1
                raise ParseError(f"expected {ncols} entries, got {len(toks)}", n, col)
            row = []
            for tok, col in toks:
                try:
                    row.append(domain.parse(tok))
                except (ValueError, DivlinError) as exc:
                    raise ParseError(str(exc), n, col) from None
            rows.append(tuple(row))
    else:
        rows = [()] * nrows
    return _build(domain, chirality, nrows, ncols, rows)


def _build(domain: ScalarDomain, chirality: Chirality, nrows: int, ncols: int, rows) -> LinMap:
    if chirality is RIGHT:
        dom, cod = Space(domain, ncols, RIGHT), Space(domain, nrows, RIGHT)
    else:
        dom, cod = Space(domain, nrows, LEFT), Space(domain, ncols, LEFT)
    return LinMap(dom, cod, tuple(rows))


def parse_document(text: str) -> list[tuple[str | None, LinMap]]:
    """Every block of ``text`` as ``(label, map)``; ``label`` is ``None`` when absent."""
    lines = _Lines(text)
    out = []
    while not lines.done():
        _, line = lines.peek()
        label = None
        m = _LABEL.fullmatch(line.strip())
        if m:
            label = m.group(1)
            lines.next("label")
        out.append((label, _parse_block(lines)))
    return out


def parse_matrix(text: str) -> LinMap:
    """The single block in ``text`` (a label line is allowed and ignored)."""
    blocks = parse_document(text)
    if len(blocks) != 1:
        raise ParseError(f"expected exactly one matrix block, found {len(blocks)}", 1, 1)
    return blocks[0][1]


def format_matrix(t: LinMap, label: str | None = None) -> str:
    dom = t.scalars
    nrows, ncols = t.shape
    out = []
    if label is not None:
        out.append(f"[{label}]")
    out.append(f"scalar {dom.header()}")
    out.append(str(t.chirality))
    out.append(f"{nrows} {ncols}")
    if ncols:
        out.extend(" ".join(dom.format(x) for x in row) for row in t.matrix)
    return "\n".join(out) + "\n"


def format_document(blocks) -> str:
    return "\n".join(format_matrix(t, label) for label, t in blocks)


def basis_map(s: Subspace) -> LinMap:
    """``D^k -> ambient`` sending the standard basis to the canonical basis of ``s``."""
    V = s.ambient
    return LinMap.from_images(Space(V.domain, s.dim, V.chirality), V, s.vectors())


def vector_map(v: Vec) -> LinMap:
    """``D^1 -> V`` sending the unit vector to ``v``."""
    V = v.space
    return LinMap.from_images(Space(V.domain, 1, V.chirality), V, [v])


def read_matrix_file(path) -> LinMap:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_matrix(text)
    except ParseError as exc:
        raise ParseError(exc.message, exc.line, exc.column, path=str(path)) from None
