"""Borel reductions of GL(3)-bundles: classification of types (d1, d2, d3).

A type ``d`` of topological type ``delta`` satisfies ``d1 + d2 + d3 = delta``.
The locus ``M(d)`` of stable bundles admitting a B-reduction of type ``d`` is
nonempty exactly when ``d1 < delta/3 < d3``; then its bundles have Segre value
at most ``s = 2(d3 - d1)`` and ``dim M(d) <= 6g - 5 + s``.

Colors:

* ``green(generically-finite)``: every gap ``d_j - d_i`` (i <= j) is at most
  ``g - 1``; the dimension bound is attained and a general bundle has Segre
  value exactly ``s``.
* ``green(dense)``: the two types whose locus is dense when ``g = 1 mod 6``
  and ``delta = 0 mod 3``; Segre value exactly ``3(g - 1)``.
* ``red``: a consecutive gap is at least ``g + 1``; a smaller subbundle forces
  Segre value at most ``s - 2``.
* ``blue``: stable but not decided by the above.
* ``orange``: outside the stable range.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from segrestrat.errors import ConsistencyError, DomainError
from segrestrat.strata import CurveContext

Triple = tuple[int, int, int]


class Color(str, Enum):
    GREEN_FINITE = "green(generically-finite)"
    GREEN_DENSE = "green(dense)"
    RED = "red"
    BLUE = "blue"
    ORANGE = "orange"

    @property
    def hex(self) -> str:
        return _HEX[self]

    @property
    def is_green(self) -> bool:
        return self in (Color.GREEN_FINITE, Color.GREEN_DENSE)


_HEX = {
    Color.GREEN_FINITE: "#2ca02c",
    Color.GREEN_DENSE: "#2ca02c",
    Color.RED: "#d62728",
    Color.BLUE: "#1f77b4",
    Color.ORANGE: "#ff7f0e",
}


@dataclass(frozen=True)
class StratumValue:
    """Segre value of a general bundle in M(d): ``exact``, ``at-most`` or ``unknown``."""

    kind: str
    value: int | None = None

    def __str__(self) -> str:
        if self.kind == "exact":
            return f"={self.value}"
        if self.kind == "at-most":
            return f"<={self.value}"
        return "?"


UNKNOWN = StratumValue("unknown")


@dataclass(frozen=True)
class BorelPoint:
    d: Triple
    delta: int
    genus: int
    color: Color
    s_bound: int
    dim_upper: int | None = None
    dim_exact: int | None = None
    stratum_s: StratumValue = UNKNOWN
    closure_parents: tuple[Triple, ...] = ()
    red_gaps: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "d": list(self.d),
            "delta": self.delta,
            "genus": self.genus,
            "color": self.color.value,
            "s_bound": self.s_bound,
            "dim_upper": self.dim_upper,
            "dim_exact": self.dim_exact,
            "stratum_s": str(self.stratum_s),
            "closure_parents": [list(t) for t in self.closure_parents],
            "red_gaps": list(self.red_gaps),
        }


def _check_sum(d: Triple, delta: int) -> Triple:
    d = tuple(d)
    if len(d) != 3:
        raise DomainError(f"a GL(3) Borel type has three entries, got {d}")
    if sum(d) != delta:
        raise DomainError(f"type {d} sums to {sum(d)}, not to the topological type {delta}")
    return d  # type: ignore[return-value]


def stable_region(d: Triple, delta: int) -> bool:
    """``d1 < delta/3 < d3``, compared exactly as ``3*d1 < delta < 3*d3``."""
    d1, _, d3 = _check_sum(d, delta)
    return 3 * d1 < delta < 3 * d3


def closure_parents(d: Triple) -> tuple[Triple, Triple]:
    d1, d2, d3 = d
    return (d1 - 1, d2 + 1, d3), (d1, d2 - 1, d3 + 1)


def dense_types(delta: int, ctx: CurveContext) -> tuple[Triple, ...]:
    """Types whose locus is dense in the moduli space, when known.

    With ``g = 6u + 1`` and ``delta = 3k`` these are ``(-5u+k, u+k, 4u+k)``
    and its dual ``(-4u+k, -u+k, 5u+k)``.
    """
    g = ctx.genus
    if g % 6 != 1 or delta % 3:
        return ()
    u, k = (g - 1) // 6, delta // 3
    return (-5 * u + k, u + k, 4 * u + k), (-4 * u + k, -u + k, 5 * u + k)


@dataclass(frozen=True)
class Ceiling:
    value: int
    sharp: bool

    def to_json(self) -> dict:
        return {"value": self.value, "sharp": self.sharp}


def hirschowitz_ceiling(delta: int, ctx: CurveContext) -> Ceiling:
    if delta % 3 == 0 and ctx.genus % 6 == 1:
        return Ceiling(3 * (ctx.genus - 1), True)
    return Ceiling(3 * ctx.genus, False)


def classify(d: Triple, delta: int, ctx: CurveContext) -> BorelPoint:
    d = _check_sum(d, delta)
    g = ctx.genus
    d1, d2, d3 = d
    s = 2 * (d3 - d1)
    if not stable_region(d, delta):
        return BorelPoint(d, delta, g, Color.ORANGE, s)

    parents = closure_parents(d)
    gaps = {(i, j): d[j] - d[i] for i in range(3) for j in range(i, 3)}
    finite = all(v <= g - 1 for v in gaps.values())
    dense = d in dense_types(delta, ctx)
    red_gaps = tuple(
        name for name, gap in (("d2-d1", d2 - d1), ("d3-d2", d3 - d2)) if gap >= g + 1
    )
    if (finite or dense) and red_gaps:
        raise ConsistencyError(f"type {d} at genus {g} classified both green and red")

    generic = 6 * g - 5 + s
    if finite:
        return BorelPoint(d, delta, g, Color.GREEN_FINITE, s, generic, generic,
                          StratumValue("exact", s), parents)
    if dense:
        return BorelPoint(d, delta, g, Color.GREEN_DENSE, s, generic, 9 * g - 8,
                          StratumValue("exact", 3 * (g - 1)), parents)
    if red_gaps:
        cap = min(s - 2, hirschowitz_ceiling(delta, ctx).value)
        return BorelPoint(d, delta, g, Color.RED, s, 6 * g - 7 + s, None,
                          StratumValue("at-most", cap), parents, red_gaps)
    return BorelPoint(d, delta, g, Color.BLUE, s, generic, None, UNKNOWN, parents)


# windows, closure graph, figure

@dataclass(frozen=True)
class Window:
    """Inclusive rectangle of (d1, d3) values."""

    d1_min: int
    d1_max: int
    d3_min: int
    d3_max: int

    def __post_init__(self) -> None:
        if self.d1_min > self.d1_max or self.d3_min > self.d3_max:
            raise DomainError(f"empty window {self.label}")

    @classmethod
    def parse(cls, text: str) -> Window:
        """``d1min:d1max,d3min:d3max``."""
        try:
            a, b = text.split(",")
            d1lo, d1hi = (int(x) for x in a.split(":"))
            d3lo, d3hi = (int(x) for x in b.split(":"))
        except ValueError as exc:
            raise DomainError(f"window must look like d1min:d1max,d3min:d3max, got {text!r}") from exc
        return cls(d1lo, d1hi, d3lo, d3hi)

    @property
    def label(self) -> str:
        return f"{self.d1_min}:{self.d1_max},{self.d3_min}:{self.d3_max}"

    def contains(self, d1: int, d3: int) -> bool:
        return self.d1_min <= d1 <= self.d1_max and self.d3_min <= d3 <= self.d3_max

    def points(self, delta: int) -> Iterator[Triple]:
        """Row-major: rows of constant d3 from the top, d1 increasing along a row."""
        for d3 in range(self.d3_max, self.d3_min - 1, -1):
            for d1 in range(self.d1_min, self.d1_max + 1):
                yield (d1, delta - d1 - d3, d3)


@dataclass(frozen=True)
class ClosureEdge:
    """``child`` lies in the closure of the locus of ``parent``."""

    child: Triple
    parent: Triple
    move: str
    parent_in_window: bool

    def to_json(self) -> dict:
        return {
            "child": list(self.child),
            "parent": list(self.parent),
            "move": self.move,
            "parent_in_window": self.parent_in_window,
        }


def closure_dag(delta: int, ctx: CurveContext, window: Window) -> list[ClosureEdge]:
    edges = []
    for d in window.points(delta):
        if not stable_region(d, delta):
            continue
        p1, p2 = closure_parents(d)
        for parent, move in ((p1, "d1-1,d2+1"), (p2, "d2-1,d3+1")):
            edges.append(ClosureEdge(d, parent, move, window.contains(parent[0], parent[2])))
    return edges


@dataclass(frozen=True)
class FigureModel:
    delta: int
    genus: int
    window: Window
    points: tuple[BorelPoint, ...]
    level_lines: tuple[int, ...]
    ceiling: Ceiling
    x_label: str = "d1"
    y_label: str = "d3"

    def to_json(self) -> dict:
        return {
            "delta": self.delta,
            "genus": self.genus,
            "window": self.window.label,
            "axes": {"horizontal": self.x_label, "vertical": self.y_label},
            "ceiling": self.ceiling.to_json(),
            "level_lines": [{"d3_minus_d1": c, "s": 2 * c} for c in self.level_lines],
            "dots": [
                {"d1": p.d[0], "d3": p.d[2], "d2": p.d[1], "color": p.color.value}
                for p in self.points
            ],
        }


def figure_data(delta: int, ctx: CurveContext, window: Window) -> FigureModel:
    ceiling = hirschowitz_ceiling(delta, ctx)
    points = tuple(classify(d, delta, ctx) for d in window.points(delta))
    lines = tuple(range(1, ceiling.value // 2 + 1))
    return FigureModel(delta, ctx.genus, window, points, lines, ceiling)


# serialisers

CSV_COLUMNS = ("d1", "d2", "d3", "s_bound", "color", "dim_upper", "dim_exact",
               "stratum_s", "parent1", "parent2")


def _triple(t: Triple) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def _blank(x: int | None) -> str:
    return "" if x is None else str(x)


def to_csv(fig: FigureModel) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for p in fig.points:
        parents = [_triple(t) for t in p.closure_parents] or ["", ""]
        w.writerow([p.d[0], p.d[1], p.d[2], p.s_bound, p.color.value,
                    _blank(p.dim_upper), _blank(p.dim_exact),
                    str(p.stratum_s),
                    *parents])
    return buf.getvalue()


def to_json_text(fig: FigureModel) -> str:
    return json.dumps(fig.to_json(), sort_keys=True, indent=2) + "\n"


SPACING = 24
MARGIN = 48
RADIUS = 5


def to_svg(fig: FigureModel) -> str:
    w = fig.window
    width = (w.d1_max - w.d1_min) * SPACING + 2 * MARGIN
    height = (w.d3_max - w.d3_min) * SPACING + 2 * MARGIN

    def x(d1: int) -> int:
        return MARGIN + (d1 - w.d1_min) * SPACING

    def y(d3: int) -> int:
        return MARGIN + (w.d3_max - d3) * SPACING

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<title>GL(3) Borel types, genus {fig.genus}, delta {fig.delta}</title>',
        '<rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>',
    ]
    if w.d3_min <= 0 <= w.d3_max:
        out.append(f'<line class="axis" x1="{x(w.d1_min)}" y1="{y(0)}" x2="{x(w.d1_max)}" '
                   f'y2="{y(0)}" stroke="#000000" stroke-width="1"/>')
    if w.d1_min <= 0 <= w.d1_max:
        out.append(f'<line class="axis" x1="{x(0)}" y1="{y(w.d3_min)}" x2="{x(0)}" '
                   f'y2="{y(w.d3_max)}" stroke="#000000" stroke-width="1"/>')
    for c in fig.level_lines:
        lo = max(w.d1_min, w.d3_min - c)
        hi = min(w.d1_max, w.d3_max - c)
        if lo > hi:
            continue
        out.append(f'<line class="level" data-c="{c}" x1="{x(lo)}" y1="{y(lo + c)}" '
                   f'x2="{x(hi)}" y2="{y(hi + c)}" stroke="#808080" stroke-width="1" '
                   f'stroke-dasharray="4,3"/>')
    for p in fig.points:
        d1, d2, d3 = p.d
        cls = p.color.value.replace("(", "-").replace(")", "")
        out.append(f'<circle class="{cls}" cx="{x(d1)}" cy="{y(d3)}" r="{RADIUS}" '
                   f'fill="{p.color.hex}"><title>({d1},{d2},{d3}) {p.color.value}</title></circle>')
    out.append(f'<text x="{width - MARGIN // 2}" y="{y(0) if w.d3_min <= 0 <= w.d3_max else height - 8}" '
               f'font-family="sans-serif" font-size="12" text-anchor="middle">d1</text>')
    out.append(f'<text x="{x(0) if w.d1_min <= 0 <= w.d1_max else 12}" y="{MARGIN // 2}" '
               f'font-family="sans-serif" font-size="12" text-anchor="middle">d3</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(fig: FigureModel, fmt: str) -> str:
    if fmt == "csv":
        return to_csv(fig)
    if fmt == "svg":
        return to_svg(fig)
    if fmt == "json":
        return to_json_text(fig)
    raise DomainError(f"unknown figure format {fmt!r}; expected csv, svg or json")
