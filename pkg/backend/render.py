"""
SVG and plain-text renderers for atlases.

Fields with d ≡ 0 (mod 4) are drawn on a square grid: (x, y) sits at (x, y).
Odd discriminants use the staggered grid: (x, y) sits at (x + y/2, y·√3/2),
so neighbouring points form roughly equilateral triangles. Rational integers
lie on the horizontal axis, multiples of √r on the vertical one.
"""
import logging
from math import sqrt
from typing import Dict, List, Optional, Tuple

from jinja2 import Environment
from pydantic import BaseModel, ConfigDict, Field

from .atlas import AtlasEntry, PointClass, atlas_bounds
from .character import build_character
from .field import FieldParams, field_name
from .ideals import IdealSpec

logger = logging.getLogger(__name__)

STAGGER_HEIGHT = sqrt(3) / 2

TEXT_SYMBOLS: Dict[PointClass, str] = {
    PointClass.UNIT: "U",
    PointClass.PRIME: "P",
    PointClass.IDEAL_I: "I",
    PointClass.IDEAL_CONJ_I: "J",
    PointClass.OTHER: ".",
}

CSS_CLASSES: Dict[PointClass, str] = {
    PointClass.UNIT: "unit",
    PointClass.PRIME: "prime",
    PointClass.IDEAL_I: "ideal-i",
    PointClass.IDEAL_CONJ_I: "ideal-j",
    PointClass.OTHER: "lattice",
}


class RenderConfig(BaseModel):
    """Styling for SVG atlases."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    cell_size: float = Field(default=12.0, gt=0)
    color_unit: str = "#1f77b4"
    color_prime: str = "#000000"
    color_ideal_i: str = "#d62728"
    color_ideal_j: str = "#2ca02c"
    color_other: str = "#d0d0d0"
    color_axes: str = "#999999"
    background: str = "#ffffff"
    show_character_row: bool = True
    character_row_width: int = Field(default=64, gt=0)

    def color_for(self, point_class: PointClass) -> str:
        return {
            PointClass.UNIT: self.color_unit,
            PointClass.PRIME: self.color_prime,
            PointClass.IDEAL_I: self.color_ideal_i,
            PointClass.IDEAL_CONJ_I: self.color_ideal_j,
            PointClass.OTHER: self.color_other,
        }[point_class]


SVG_TEMPLATE = """\
<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg version="1.1" xmlns="http://www.w3.org/2000/svg" width="{{ width }}" height="{{ height }}" viewBox="0 0 {{ width }} {{ height }}">
<rect x="0" y="0" width="{{ width }}" height="{{ height }}" fill="{{ background }}"/>
<g class="header" font-family="monospace" font-size="{{ font_size }}" fill="#000000">
{% for line in header %}
<text x="{{ margin }}" y="{{ line.y }}" xml:space="preserve">{{ line.text }}</text>
{% endfor %}
</g>
<g class="axes" stroke="{{ axes_color }}" stroke-width="1">
<line x1="{{ axes.x1 }}" y1="{{ axes.y0 }}" x2="{{ axes.x2 }}" y2="{{ axes.y0 }}"/>
<line x1="{{ axes.x0 }}" y1="{{ axes.y1 }}" x2="{{ axes.x0 }}" y2="{{ axes.y2 }}"/>
<text x="{{ axes.x2 }}" y="{{ axes.label_y }}" font-family="monospace" font-size="{{ font_size }}" stroke="none" fill="{{ axes_color }}">1</text>
<text x="{{ axes.label_x }}" y="{{ axes.y1 }}" font-family="monospace" font-size="{{ font_size }}" stroke="none" fill="{{ axes_color }}">√{{ r }}</text>
</g>
<g class="points">
{% for marker in markers %}
<circle class="{{ marker.css }}" cx="{{ marker.cx }}" cy="{{ marker.cy }}" r="{{ marker.radius }}" fill="{{ marker.fill }}"/>
{% endfor %}
</g>
</svg>
"""

_environment = Environment(autoescape=True, trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True)
_svg_template = _environment.from_string(SVG_TEMPLATE)


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def plane_position(f: FieldParams, x: int, y: int) -> Tuple[float, float]:
    if f.half_basis:
        return x + y / 2, y * STAGGER_HEIGHT
    return float(x), float(y)


def header_lines(f: FieldParams, config: RenderConfig, ideal: Optional[IdealSpec] = None) -> List[str]:
    lines = [f"{field_name(f)}   d = {f.d}"]
    if ideal is not None:
        lines[0] += f"   I = {ideal}   norm {ideal.m}, shift {ideal.shift}"
    if config.show_character_row:
        table = build_character(f)
        lines.append(f"χ: {table.symbols(config.character_row_width)}")
    return lines


def render_svg(
    atlas: List[AtlasEntry],
    f: FieldParams,
    config: Optional[RenderConfig] = None,
    ideal: Optional[IdealSpec] = None,
) -> str:
    """Render an atlas as an SVG 1.1 document; identical inputs give identical bytes."""
    config = config or RenderConfig()
    cell = config.cell_size
    font_size = max(cell, 10.0)
    margin = 2 * cell

    positions = [plane_position(f, zeta.x, zeta.y) for zeta, _ in atlas]
    plane_x = [p[0] for p in positions] or [0.0]
    plane_y = [p[1] for p in positions] or [0.0]
    min_x, max_x = min(plane_x + [0.0]), max(plane_x + [0.0])
    min_y, max_y = min(plane_y + [0.0]), max(plane_y + [0.0])

    lines = header_lines(f, config, ideal)
    header_height = (len(lines) + 1) * font_size * 1.4
    longest = max(len(line) for line in lines)
    plot_width = (max_x - min_x) * cell + 2 * margin
    width = max(plot_width, margin + longest * font_size * 0.62)
    height = header_height + (max_y - min_y) * cell + 2 * margin

    def to_canvas(px: float, py: float) -> Tuple[float, float]:
        return margin + (px - min_x) * cell, header_height + margin + (max_y - py) * cell

    origin_x, origin_y = to_canvas(0.0, 0.0)
    left, top = to_canvas(min_x, max_y)
    right, bottom = to_canvas(max_x, min_y)
    axes = {
        "x0": _fmt(origin_x),
        "y0": _fmt(origin_y),
        "x1": _fmt(left - cell),
        "x2": _fmt(right + cell),
        "y1": _fmt(top - cell),
        "y2": _fmt(bottom + cell),
        "label_x": _fmt(origin_x + cell / 2),
        "label_y": _fmt(origin_y - cell / 2),
    }

    markers = []
    for (zeta, point_class), (px, py) in zip(atlas, positions):
        cx, cy = to_canvas(px, py)
        radius = cell / 3 if point_class != PointClass.OTHER else cell / 10
        markers.append(
            {
                "css": CSS_CLASSES[point_class],
                "cx": _fmt(cx),
                "cy": _fmt(cy),
                "radius": _fmt(radius),
                "fill": config.color_for(point_class),
            }
        )

    document = _svg_template.render(
        width=_fmt(width),
        height=_fmt(height),
        background=config.background,
        font_size=_fmt(font_size),
        margin=_fmt(margin),
        header=[{"y": _fmt((i + 1) * font_size * 1.4), "text": text} for i, text in enumerate(lines)],
        axes=axes,
        axes_color=config.color_axes,
        r=f.r,
        markers=markers,
    )
    logger.info(f"Rendered SVG atlas with {len(markers)} points for d={f.d}")
    return document


def render_text(atlas: List[AtlasEntry], f: FieldParams) -> str:
    """One symbol per point, rows from y_max down to y_min.

    Odd discriminants separate symbols by a space and indent row y by
    (y - y_min) columns, half a cell per row.
    """
    bounds = atlas_bounds(atlas)
    if bounds is None:
        return ""
    symbols = {(zeta.x, zeta.y): TEXT_SYMBOLS[point_class] for zeta, point_class in atlas}

    rows = []
    for y in range(bounds.y_max, bounds.y_min - 1, -1):
        cells = [symbols.get((x, y), " ") for x in range(bounds.x_min, bounds.x_max + 1)]
        if f.half_basis:
            rows.append(" " * (y - bounds.y_min) + " ".join(cells))
        else:
            rows.append("".join(cells))
    return "\n".join(rows)
