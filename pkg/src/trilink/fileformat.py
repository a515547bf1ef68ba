"""Plain-text linking files and move lists.

A linking file::

    # comments run to end of line
    linking v1
    1 0 0
    -447213/500000 158113/500000 0
    -447213/500000 -158113/500000 0

    0 1 0
    ...

One point per line as three exact rational literals (``p/q`` or integers),
triangles separated by blank lines. Serialization writes every scalar in
lowest terms, so ``serialize(parse(text))`` is a fixed point.
"""
from __future__ import annotations

from .errors import DegenerateTriangle, DisjointnessViolated, ParseError, ValidationError
from .invariants import Linking
from .kernel import Triangle, point, scalar
from .moves import MoveSpec

HEADER = "linking v1"


def _literal(tok, lineno):
    try:
        return scalar(tok)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {tok!r}", lineno) from None
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        yield lineno, raw.split("#", 1)[0].strip()


def parse_linking(text: str) -> Linking:
    header_seen = False
    blocks = []  # [(first line number, [points])]
    current = None
    for lineno, line in _content_lines(text):
        if not line:
            current = None
            continue
        if not header_seen:
            if line.split() != HEADER.split():
                raise ParseError(f"expected header {HEADER!r}, got {line!r}", lineno)
            header_seen = True
            continue
        toks = line.split()
        if len(toks) != 3:
            raise ParseError(f"expected 3 coordinates, got {len(toks)}", lineno)
        p = point(*(_literal(t, lineno) for t in toks))
        if current is None:
            current = (lineno, [])
            blocks.append(current)
        current[1].append(p)
        if len(current[1]) > 3:
            raise ParseError("a triangle has exactly 3 points", lineno)
    if not header_seen:
        raise ParseError(f"missing header {HEADER!r}", 1)
    tris = []
    for start, pts in blocks:
        if len(pts) != 3:
            raise ParseError(f"a triangle has exactly 3 points, got {len(pts)}", start)
        try:
            tris.append(Triangle.of(*pts))
        except DegenerateTriangle as exc:
            raise ValidationError(f"degenerate triangle: {exc}", start) from None
    if len(tris) not in (2, 3):
        raise ValidationError(f"a linking has 2 or 3 triangles, got {len(tris)}",
                              blocks[-1][0] if blocks else 1)
    try:
        return Linking(tuple(tris))
    except DisjointnessViolated as exc:
        i, j = exc.pair
        raise ValidationError(f"outlines not disjoint: {exc}", blocks[j][0]) from None


def serialize_linking(L) -> str:
    out = [HEADER]
    for k, t in enumerate(L):
        if k:
            out.append("")
        out.extend(f"{v.x} {v.y} {v.z}" for v in t)
    return "\n".join(out) + "\n"


def serialize_moves(moves) -> str:
    return "".join(f"{m}\n" for m in moves)


def parse_moves(text: str):
    moves = []
    for lineno, line in _content_lines(text):
        if not line:
            continue
        toks = line.split()
        if len(toks) != 6 or toks[0] != "move":
            raise ParseError("expected 'move <target> <pivot> <x> <y> <z>'", lineno)
        try:
            target, pivot = int(toks[1]), int(toks[2])
        except ValueError:
            raise ParseError("target and pivot must be integers", lineno) from None
        moves.append(MoveSpec(target, pivot, point(*(_literal(t, lineno) for t in toks[3:]))))
    return moves


def export_obj(L, name="linking") -> str:
    """Outlines as closed polylines in Wavefront OBJ. Lossy: for viewing only."""
    out = [
        "# trilink OBJ export: VISUALIZATION ONLY",
        "# coordinates rounded to floating point; exact data lives in the linking file",
    ]
    for k, t in enumerate(L):
        out.append(f"o {name}_{k}")
        out.extend(f"v {float(v.x):.9g} {float(v.y):.9g} {float(v.z):.9g}" for v in t)
        a = 3 * k + 1
        out.append(f"l {a} {a + 1} {a + 2} {a}")
    return "\n".join(out) + "\n"
