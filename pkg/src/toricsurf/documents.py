"""Input documents and output rendering.

The interchange format is a small JSON object holding either a ray list
("rays") or a polygon vertex list ("vertices"), plus an optional name.
All numbers must be plain integers; floats are rejected outright since
every computation downstream is exact. A whitespace-separated plain text
ray list is accepted as an alternative input mode.

Rendering helpers turn exact rationals and matrices into canonical "p/q"
strings, aligned text tables, LaTeX pmatrix bodies, and JSON values.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import NamedTuple, Sequence, Union

from .errors import AmbiguousDocumentError, ParseError
from .fan import Fan, Polygon, normal_fan, validate_fan
from .matrix import RationalMatrix


class FanDocument(NamedTuple):
    rays: tuple[tuple[int, int], ...]
    name: str | None = None


class PolygonDocument(NamedTuple):
    vertices: tuple[tuple[int, int], ...]
    name: str | None = None


Document = Union[FanDocument, PolygonDocument]


def _reject_float(literal: str):
    raise ParseError(f"non-integer number {literal!r}; all coordinates must be integers")


def _reject_constant(literal: str):
    raise ParseError(f"number literal {literal!r} is not an integer")


def _pair_list(value, key: str) -> tuple[tuple[int, int], ...]:
    if not isinstance(value, list) or not value:
        raise ParseError(f"{key!r} must be a nonempty list of [x, y] pairs")
    pairs = []
    for pos, item in enumerate(value, start=1):
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"{key!r} entry {pos} is not an [x, y] pair")
        x, y = item
        for c in (x, y):
            if isinstance(c, bool) or not isinstance(c, int):
                raise ParseError(f"{key!r} entry {pos} has non-integer coordinate {c!r}")
        pairs.append((x, y))
    return tuple(pairs)


def parse_document(text: str) -> Document:
    """Parse a JSON fan or polygon document.

    Exactly one of the keys "rays" and "vertices" must be present; the
    only other key allowed is "name". Integer coordinates only.

    Raises:
        ParseError: malformed JSON (with line and column), floats,
            unknown keys, or bad structure.
        AmbiguousDocumentError: both "rays" and "vertices" present.
    """
    try:
        obj = json.loads(text, parse_float=_reject_float, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    unknown = sorted(set(obj) - {"rays", "vertices", "name"})
    if unknown:
        raise ParseError(f"unknown key {unknown[0]!r}")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError(f"'name' must be a string, got {name!r}")
    has_rays = "rays" in obj
    has_vertices = "vertices" in obj
    if has_rays and has_vertices:
        raise AmbiguousDocumentError("document has both 'rays' and 'vertices'")
    if has_rays:
        return FanDocument(_pair_list(obj["rays"], "rays"), name)
    if has_vertices:
        return PolygonDocument(_pair_list(obj["vertices"], "vertices"), name)
    raise ParseError("document needs a 'rays' or 'vertices' key")


def parse_plain(text: str) -> FanDocument:
    """Parse a whitespace-separated list of ray coordinates.

    Tokens are read in pairs, e.g. "-2 1  -2 -1  1 -2  1 0  0 1".
    """
    tokens = text.split()
    if not tokens:
        raise ParseError("empty input")
    if len(tokens) % 2:
        raise ParseError(f"odd number of coordinates ({len(tokens)})")
    values = []
    for tok in tokens:
        try:
            values.append(int(tok, 10))
        except ValueError:
            raise ParseError(f"invalid integer {tok!r}") from None
    rays = tuple((values[i], values[i + 1]) for i in range(0, len(values), 2))
    return FanDocument(rays)


def load_document(source: str, plain: bool = False) -> Document:
    """Read a document from a file path or stdin ("-")."""
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror or exc}") from None
    return parse_plain(text) if plain else parse_document(text)


def document_to_fan(doc: Document) -> Fan:
    """Build the fan a document denotes: directly for ray lists, via the
    normal fan for polygons."""
    if isinstance(doc, FanDocument):
        return validate_fan(doc.rays)
    return normal_fan(Polygon(doc.vertices))


def document_to_json(doc: Document) -> dict:
    """JSON-ready dict for a document; parsing it back gives the same
    document (round-trip)."""
    if isinstance(doc, FanDocument):
        out: dict = {"rays": [list(r) for r in doc.rays]}
    else:
        out = {"vertices": [list(v) for v in doc.vertices]}
    if doc.name is not None:
        out["name"] = doc.name
    return out


def fraction_str(q: Fraction) -> str:
    """Canonical rational rendering: "p/q", or just "p" for integers."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def matrix_strings(m: RationalMatrix) -> list[list[str]]:
    return [[fraction_str(x) for x in row] for row in m.rows]


def matrix_json(m: RationalMatrix) -> list[list[str]]:
    return matrix_strings(m)


def matrix_table(m: RationalMatrix, indent: str = "  ") -> str:
    """Aligned text block, one matrix row per line, columns right-justified."""
    cells = matrix_strings(m)
    widths = [max(len(cells[i][j]) for i in range(len(cells)))
              for j in range(len(cells[0]))]
    lines = [indent + "  ".join(cell.rjust(w) for cell, w in zip(row, widths))
             for row in cells]
    return "\n".join(lines)


def matrix_latex(m: RationalMatrix) -> str:
    """pmatrix body for LaTeX output."""
    body = " \\\\\n".join("  " + " & ".join(row) for row in matrix_strings(m))
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def linear_form_str(coeffs: Sequence, variable: str = "x") -> str:
    """Human-readable sum like "-2x1 - 2x2 + x3 + x4" (zero terms dropped)."""
    parts: list[str] = []
    for idx, c in enumerate(coeffs, start=1):
        c = Fraction(c)
        if not c:
            continue
        magnitude = abs(c)
        coeff = "" if magnitude == 1 else fraction_str(magnitude)
        term = f"{coeff}{variable}{idx}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


def rays_table(rays: Sequence[Sequence[int]], indent: str = "  ") -> str:
    """Aligned listing of ray coordinates, one per line, 1-based labels."""
    labels = [str(i) for i in range(1, len(rays) + 1)]
    width = max(len(s) for s in labels)
    xs = [str(r[0]) for r in rays]
    ys = [str(r[1]) for r in rays]
    wx = max(len(s) for s in xs)
    wy = max(len(s) for s in ys)
    return "\n".join(
        f"{indent}{lab.rjust(width)}: ({x.rjust(wx)}, {y.rjust(wy)})"
        for lab, x, y in zip(labels, xs, ys))
