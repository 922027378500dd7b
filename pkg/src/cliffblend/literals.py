"""Text literals for rationals, quaternions, lines, partitions and parallelisms.

Grammar::

    rational   := ["+"|"-"] digits ["/" digits]
    quaternion := "(" rational "," rational "," rational "," rational ")"
    line       := "[" quaternion ";" quaternion "]"
    partition  := "{" "{" ints "}" { "," "{" ints "}" } "}"     (1-based)
    indexset   := "{" [ ints ] "}"                               (1-based)
    algebra    := "a=" rational " b=" rational
    parallelism:= "left" | "right" | "blend:" [ int { "," int } ]

Every ``str()`` of a library value re-parses to an equal value.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .blendcore import FinitePartition
from .cliffordlike import Kind, ParallelismDescriptor
from .projgeom import Line, Point, RankError, line_from_span
from .quat import AlgebraSpec, Quaternion

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")
_INT = re.compile(r"[+-]?\d+")

Literal = Union[Fraction, Quaternion, Line, FinitePartition, frozenset]


class LiteralSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.message = message
        self.position = position


class _Cursor:
    def __init__(self, text: str, pos: int = 0):
        self.text = text
        self.pos = pos

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos:self.pos + 1]

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise LiteralSyntaxError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def match(self, pattern: re.Pattern, what: str) -> str:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise LiteralSyntaxError(f"expected {what}", self.pos)
        self.pos = m.end()
        return m.group(0)

    def rational(self) -> Fraction:
        start = self.pos
        token = self.match(_RATIONAL, "a rational number")
        num, _, den = token.partition("/")
        if den and int(den) == 0:
            raise LiteralSyntaxError("zero denominator", start)
        return Fraction(int(num), int(den) if den else 1)

    def quaternion_coords(self) -> tuple[Fraction, ...]:
        self.expect("(")
        coords = [self.rational()]
        for _ in range(3):
            self.expect(",")
            coords.append(self.rational())
        self.expect(")")
        return tuple(coords)

    def int_list(self) -> list[int]:
        self.expect("{")
        items: list[int] = []
        if self.peek() != "}":
            items.append(int(self.match(_INT, "an integer")))
            while self.peek() == ",":
                self.pos += 1
                items.append(int(self.match(_INT, "an integer")))
        self.expect("}")
        return items

    def end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise LiteralSyntaxError("unexpected trailing input", self.pos)


def _one_based(items: list[int], position: int) -> list[int]:
    if any(x < 1 for x in items):
        raise LiteralSyntaxError("indices are 1-based positive integers", position)
    return [x - 1 for x in items]


def parse_value(text: str, algebra: AlgebraSpec) -> Literal:
    """Parse any literal; the leading character decides its type.

    Rank and partition-validity problems surface as ``ValueError``.
    """
    cur = _Cursor(text)
    head = cur.peek()
    if head == "(":
        value: Literal = Quaternion(cur.quaternion_coords(), algebra)
    elif head == "[":
        cur.expect("[")
        q1 = cur.quaternion_coords()
        cur.expect(";")
        q2 = cur.quaternion_coords()
        cur.expect("]")
        value = line_from_span(Quaternion(q1, algebra), Quaternion(q2, algebra))
    elif head == "{":
        start = cur.pos
        cur.expect("{")
        if cur.peek() == "{":
            blocks = [cur.int_list()]
            while cur.peek() == ",":
                cur.pos += 1
                blocks.append(cur.int_list())
            cur.expect("}")
            blocks = [_one_based(b, start) for b in blocks]
            n = sum(len(b) for b in blocks)
            value = FinitePartition(n, tuple(tuple(b) for b in blocks))
        else:
            cur.pos = start
            value = frozenset(_one_based(cur.int_list(), start))
    else:
        value = cur.rational()
    cur.end()
    return value


def parse_rational(text: str) -> Fraction:
    cur = _Cursor(text)
    value = cur.rational()
    cur.end()
    return value


def parse_quaternion(text: str, algebra: AlgebraSpec) -> Quaternion:
    value = parse_value(text, algebra)
    if not isinstance(value, Quaternion):
        raise LiteralSyntaxError("expected a quaternion literal", 0)
    return value


def parse_point(text: str, algebra: AlgebraSpec) -> Point:
    q = parse_quaternion(text, algebra)
    if q.is_zero():
        raise ValueError("the zero quaternion does not represent a point")
    return Point(q)


def parse_line(text: str, algebra: AlgebraSpec) -> Line:
    value = parse_value(text, algebra)
    if not isinstance(value, Line):
        raise LiteralSyntaxError("expected a line literal", 0)
    return value


def parse_partition(text: str) -> FinitePartition:
    value = parse_value(text, _DUMMY)
    if not isinstance(value, FinitePartition):
        raise LiteralSyntaxError("expected a partition literal", 0)
    return value


def parse_index_set(text: str) -> frozenset[int]:
    value = parse_value(text, _DUMMY)
    if not isinstance(value, frozenset):
        raise LiteralSyntaxError("expected an index set literal", 0)
    return value


def parse_algebra(text: str, check_division: bool = True) -> AlgebraSpec:
    """``a=<rational> b=<rational>``; also accepts the option form ``<a>,<b>``."""
    m = re.fullmatch(r"\s*a\s*=\s*(\S+)\s+b\s*=\s*(\S+)\s*", text) or re.fullmatch(
        r"\s*([^,\s]+)\s*,\s*([^,\s]+)\s*", text
    )
    if not m:
        raise LiteralSyntaxError("expected 'a=<rational> b=<rational>'", 0)
    return AlgebraSpec(parse_rational(m.group(1)), parse_rational(m.group(2)), check_division)


def parse_parallelism(text: str) -> ParallelismDescriptor:
    t = text.strip().lower()
    if t == "left":
        return ParallelismDescriptor(Kind.LEFT)
    if t == "right":
        return ParallelismDescriptor(Kind.RIGHT)
    if t.startswith("blend:"):
        body = t[len("blend:"):]
        items = [s for s in body.split(",") if s.strip()]
        if not all(_INT.fullmatch(s.strip()) for s in items):
            raise LiteralSyntaxError("blend chooser must list integers", len("blend:"))
        return ParallelismDescriptor.blend(int(s) for s in items)
    raise LiteralSyntaxError("expected 'left', 'right' or 'blend:<classes>'", 0)


def format_index_set(items) -> str:
    return "{" + ",".join(str(x + 1) for x in sorted(items)) + "}"


_DUMMY = AlgebraSpec(-1, -1)

__all__ = [
    "LiteralSyntaxError",
    "RankError",
    "format_index_set",
    "parse_algebra",
    "parse_index_set",
    "parse_line",
    "parse_parallelism",
    "parse_partition",
    "parse_point",
    "parse_quaternion",
    "parse_rational",
    "parse_value",
]
