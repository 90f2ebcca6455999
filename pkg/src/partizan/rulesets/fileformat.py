"""Line-based position files.

::

    ruleset: turning-tiles | turning-tiles-green | go-on-lattice | beyond-the-door
    variant: standard | delta
    width: W
    height: H

followed by the ruleset's board sections (``grid:``; ``hedges:``/``vedges:``/
``dead:``; ``hdoors:``/``vdoors:``/``blocked:``) and finally ``pieces:``.
Rows are indexed from 0 at the top, columns from 0 at the left.
"""

from __future__ import annotations

from typing import Union

from .base import InvalidPosition, Variant
from .doors import DoorPosition, Side
from .lattice import Edge, LatticePosition
from .turning_tiles import Tile, TTPosition

Position = Union[TTPosition, LatticePosition, DoorPosition]

RULESETS = ("turning-tiles", "turning-tiles-green", "go-on-lattice", "beyond-the-door")


class PositionSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def ruleset_tag(pos: Position) -> str:
    if isinstance(pos, TTPosition):
        return "turning-tiles-green" if pos.allow_green else "turning-tiles"
    if isinstance(pos, LatticePosition):
        return "go-on-lattice"
    if isinstance(pos, DoorPosition):
        return "beyond-the-door"
    raise TypeError(f"not a position: {pos!r}")


# -- rendering ---------------------------------------------------------------


def _cells(cells) -> list[str]:
    return [f"{r} {c}" for r, c in sorted(cells)]


def render_position(pos: Position) -> str:
    """Canonical text form; ``parse_position(render_position(p)) == p``."""
    lines = [
        f"ruleset: {ruleset_tag(pos)}",
        f"variant: {pos.variant.value}",
        f"width: {pos.width}",
        f"height: {pos.height}",
    ]
    if isinstance(pos, TTPosition):
        lines.append("grid:")
        lines += ["".join(t.value for t in row) for row in pos.tiles]
    elif isinstance(pos, LatticePosition):
        lines.append("hedges:")
        lines += ["".join(e.value for e in row) for row in pos.h_edges]
        lines.append("vedges:")
        lines += ["".join(e.value for e in row) for row in pos.v_edges]
        lines.append("dead:")
        lines += _cells(pos.dead)
    else:
        lines.append("hdoors:")
        lines += [" ".join(a.value + b.value for a, b in row) for row in pos.h_doors]
        lines.append("vdoors:")
        lines += [" ".join(a.value + b.value for a, b in row) for row in pos.v_doors]
        lines.append("blocked:")
        lines += _cells(pos.blocked)
    lines.append("pieces:")
    lines += _cells(pos.pieces)
    return "\n".join(lines) + "\n"


# -- parsing -----------------------------------------------------------------


class _Reader:
    def __init__(self, text: str):
        self.lines = [ln.rstrip() for ln in text.splitlines()]
        while self.lines and not self.lines[-1]:
            self.lines.pop()
        self.i = 0

    @property
    def lineno(self) -> int:
        return self.i + 1

    def error(self, message: str, column: int = 1, line: int | None = None):
        raise PositionSyntaxError(message, self.lineno if line is None else line, column)

    def next(self, what: str) -> str:
        if self.i >= len(self.lines):
            self.error(f"unexpected end of file, expected {what}")
        line = self.lines[self.i]
        self.i += 1
        return line

    def field(self, key: str) -> str:
        line = self.next(f"'{key}:'")
        prefix = f"{key}:"
        if not line.startswith(prefix):
            self.error(f"expected '{prefix}', found {line!r}", line=self.i)
        return line[len(prefix):].strip()

    def integer(self, key: str) -> int:
        value = self.field(key)
        try:
            n = int(value)
        except ValueError:
            self.error(f"{key} must be an integer, got {value!r}", len(key) + 3, line=self.i)
        if n < 1:
            self.error(f"{key} must be positive", len(key) + 3, line=self.i)
        return n

    def header(self, key: str):
        line = self.next(f"'{key}:'")
        if line.strip() != f"{key}:":
            self.error(f"expected '{key}:', found {line!r}", line=self.i)

    def rows(self, count: int, what: str) -> list[tuple[int, str]]:
        out = []
        for _ in range(count):
            line = self.next(f"a row of {what}")
            out.append((self.i, line))
        return out

    def cells(self, stop: str | None, ok=None, why: str = "") -> list[tuple[int, int]]:
        """Read ``r c`` lines up to the ``stop`` header; ``ok(cell)`` validates each."""
        cells = []
        while self.i < len(self.lines):
            line = self.lines[self.i]
            if stop is not None and line.strip() == f"{stop}:":
                break
            self.i += 1
            parts = line.split()
            if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
                self.error(f"expected 'row col', found {line!r}", line=self.i)
            cell = (int(parts[0]), int(parts[1]))
            if cell in cells:
                self.error(f"duplicate cell {parts[0]} {parts[1]}", line=self.i)
            if ok is not None and not ok(cell):
                self.error(f"cell {parts[0]} {parts[1]} {why}", line=self.i)
            cells.append(cell)
        return cells


def _symbols(reader: _Reader, lineno: int, line: str, width: int, enum_cls, what: str):
    if len(line) != width:
        reader.error(f"{what} row has {len(line)} entries, expected {width}", min(len(line), width) + 1, line=lineno)
    out = []
    for col, ch in enumerate(line):
        try:
            out.append(enum_cls(ch))
        except ValueError:
            reader.error(f"invalid {what} symbol {ch!r}", col + 1, line=lineno)
    return out


def _door_row(reader: _Reader, lineno: int, line: str, width: int):
    groups = line.split(" ") if line else []
    if len(groups) != width:
        reader.error(f"door row has {len(groups)} entries, expected {width}", line=lineno)
    out = []
    col = 1
    for group in groups:
        if len(group) != 2:
            reader.error(f"door entry {group!r} must be two characters", col, line=lineno)
        try:
            out.append((Side(group[0]), Side(group[1])))
        except ValueError:
            reader.error(f"invalid door colours {group!r}", col, line=lineno)
        col += len(group) + 1
    return out


def parse_position(text: str) -> Position:
    """Parse a position file, raising :class:`PositionSyntaxError` on bad input."""
    rd = _Reader(text)
    tag = rd.field("ruleset")
    if tag not in RULESETS:
        rd.error(f"unknown ruleset {tag!r}", 10, line=rd.i)
    variant_text = rd.field("variant")
    try:
        variant = Variant(variant_text)
    except ValueError:
        rd.error(f"unknown variant {variant_text!r}", 10, line=rd.i)
    width = rd.integer("width")
    height = rd.integer("height")

    def on_board(rc):
        return 0 <= rc[0] < height and 0 <= rc[1] < width

    try:
        if tag.startswith("turning-tiles"):
            green = tag == "turning-tiles-green"
            rd.header("grid")
            tiles = []
            for lineno, line in rd.rows(height, "tiles"):
                row = _symbols(rd, lineno, line, width, Tile, "tile")
                if not green and Tile.GREEN in row:
                    rd.error("green tile in a turning-tiles board", row.index(Tile.GREEN) + 1, line=lineno)
                tiles.append(row)
            rd.header("pieces")
            pieces = rd.cells(
                None,
                lambda rc: 0 <= rc[0] < height and 0 <= rc[1] < width and tiles[rc[0]][rc[1]] is not Tile.NONE,
                "is off the board or not on a tile",
            )
            return TTPosition(tiles, frozenset(pieces), green, variant)
        if tag == "go-on-lattice":
            rd.header("hedges")
            h = [_symbols(rd, n, ln, width - 1, Edge, "edge") for n, ln in rd.rows(height, "edges")]
            rd.header("vedges")
            v = [_symbols(rd, n, ln, width, Edge, "edge") for n, ln in rd.rows(height - 1, "edges")]
            rd.header("dead")
            dead = rd.cells("pieces", on_board, "is off the board")
            rd.header("pieces")
            pieces = rd.cells(None, lambda rc: on_board(rc) and rc not in dead, "is off the board or dead")
            return LatticePosition(width, height, h, v, frozenset(dead), frozenset(pieces), variant)
        rd.header("hdoors")
        h = [_door_row(rd, n, ln, width - 1) for n, ln in rd.rows(height, "doors")]
        rd.header("vdoors")
        v = [_door_row(rd, n, ln, width) for n, ln in rd.rows(height - 1, "doors")]
        rd.header("blocked")
        blocked = rd.cells("pieces", on_board, "is off the board")
        rd.header("pieces")
        pieces = rd.cells(None, lambda rc: on_board(rc) and rc not in blocked, "is off the board or blocked")
        return DoorPosition(width, height, h, v, frozenset(blocked), frozenset(pieces), variant)
    except InvalidPosition as exc:
        raise PositionSyntaxError(str(exc), rd.lineno) from exc


# -- diagrams ----------------------------------------------------------------


def render_diagram(pos: Position) -> str:
    """Human-readable board picture (informative, not a file format)."""
    if isinstance(pos, TTPosition):
        out = []
        for r, row in enumerate(pos.tiles):
            cells = []
            for c, t in enumerate(row):
                mark = t.value
                cells.append(f"[{mark}]" if (r, c) in pos.pieces else f" {mark} ")
            out.append("".join(cells).rstrip())
        return "\n".join(out) + "\n"

    def node(r, c, gone):
        if (r, c) in pos.pieces:
            return "@"
        return "#" if (r, c) in gone else "o"

    out = []
    if isinstance(pos, LatticePosition):
        hsym = {Edge.BLUE: "---", Edge.RED: "===", Edge.DOTTED: "...", Edge.ABSENT: "   "}
        vsym = {Edge.BLUE: "|", Edge.RED: "H", Edge.DOTTED: ":", Edge.ABSENT: " "}
        for r in range(pos.height):
            line = node(r, 0, pos.dead)
            for c in range(1, pos.width):
                line += hsym[pos.h_edges[r][c - 1]] + node(r, c, pos.dead)
            out.append(line.rstrip())
            if r < pos.height - 1:
                out.append("   ".join(vsym[e] for e in pos.v_edges[r]).rstrip())
        return "\n".join(out) + "\n"
    for r in range(pos.height):
        line = node(r, 0, pos.blocked)
        for c in range(1, pos.width):
            a, b = pos.h_doors[r][c - 1]
            line += f" {a.value}{b.value} " + node(r, c, pos.blocked)
        out.append(line.rstrip())
        if r < pos.height - 1:
            out.append("    ".join(f"{a.value}{b.value}" for a, b in pos.v_doors[r]).rstrip())
    return "\n".join(out) + "\n"
