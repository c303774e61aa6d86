"""Boolean filter expressions over identity tags, e.g. ``c & !moufang``.

Grammar (``!`` binds tightest, then ``&``, then ``|``)::

    expr   := term ('|' term)*
    term   := factor ('&' factor)*
    factor := '!' factor | '(' expr ')' | TAG
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .identities import IdentityId, satisfies

__all__ = ["Filter", "parse_filter"]

_TOKEN = re.compile(r"\s*(?:(?P<op>[&|!()])|(?P<tag>[A-Za-z][A-Za-z0-9_-]*))")


@dataclass(frozen=True)
class Filter:
    source: str
    tree: tuple

    def __call__(self, L) -> bool:
        return _eval(self.tree, L)

    def required_tags(self):
        """Tags that must hold for the expression to be true."""
        return frozenset(_required(self.tree))

    def tags(self):
        return frozenset(_tags(self.tree))

    def __str__(self):
        return self.source


def _eval(node, L):
    kind = node[0]
    if kind == "tag":
        return satisfies(L, node[1])
    if kind == "not":
        return not _eval(node[1], L)
    if kind == "and":
        return _eval(node[1], L) and _eval(node[2], L)
    return _eval(node[1], L) or _eval(node[2], L)


def _required(node):
    if node[0] == "tag":
        return {node[1]}
    if node[0] == "and":
        return _required(node[1]) | _required(node[2])
    return set()


def _tags(node):
    if node[0] == "tag":
        return {node[1]}
    return set().union(*(_tags(c) for c in node[1:]))


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad filter expression at {text[pos:]!r}")
        out.append(m.group("op") or ("tag", m.group("tag")))
        pos = m.end()
    return out


def parse_filter(text) -> Filter:
    if isinstance(text, Filter):
        return text
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"bad filter expression {text!r}: expected {expected or 'a term'}")
        pos += 1
        return tok

    def expr():
        node = term()
        while peek() == "|":
            take("|")
            node = ("or", node, term())
        return node

    def term():
        node = factor()
        while peek() == "&":
            take("&")
            node = ("and", node, factor())
        return node

    def factor():
        tok = take()
        if tok == "!":
            return ("not", factor())
        if tok == "(":
            node = expr()
            take(")")
            return node
        if isinstance(tok, tuple):
            return ("tag", IdentityId.parse(tok[1]))
        raise ValueError(f"bad filter expression {text!r}: unexpected {tok!r}")

    tree = expr()
    if peek() is not None:
        raise ValueError(f"bad filter expression {text!r}: trailing {peek()!r}")
    return Filter(text, tree)
