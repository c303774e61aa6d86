"""Plain-text loop files.

Format: ``#`` starts a comment; the first non-comment line holds the order
``n``; the next ``n`` lines hold the rows of the Cayley table as
whitespace-separated integers.
"""
from __future__ import annotations

from pathlib import Path

from .core import LoopTable, make_loop
from .errors import ParseError

__all__ = ["parse_loop", "format_loop", "load_loop", "save_loop"]


def parse_loop(text: str) -> LoopTable:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ParseError(1, "empty file")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(lineno, f"expected the order, got {head!r}") from None
    if n < 1:
        raise ParseError(lineno, "order must be positive")
    rows = []
    for lineno, body in lines[1:]:
        try:
            row = [int(tok) for tok in body.split()]
        except ValueError:
            raise ParseError(lineno, "non-integer entry") from None
        if len(row) != n:
            raise ParseError(lineno, f"row has {len(row)} entries, expected {n}")
        rows.append(row)
    if len(rows) != n:
        last = lines[-1][0]
        raise ParseError(last, f"found {len(rows)} rows, expected {n}")
    return make_loop(rows)


def format_loop(L: LoopTable, comment: str | None = None) -> str:
    width = len(str(L.order - 1))
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(str(L.order))
    out.extend(" ".join(str(v).rjust(width) for v in row) for row in L.rows())
    return "\n".join(out) + "\n"


def load_loop(path) -> LoopTable:
    return parse_loop(Path(path).read_text(encoding="utf-8"))


def save_loop(L: LoopTable, path, comment: str | None = None) -> None:
    Path(path).write_text(format_loop(L, comment), encoding="utf-8")
