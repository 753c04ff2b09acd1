"""SVG rendering of terrains and guard solutions.

Pure string construction over integer arithmetic: identical inputs yield
byte-identical output.  World y points up, SVG y points down, so emitted
coordinates are flipped against the bounding box.  Convex vertices render
as hollow squares, reflex ones as filled squares; chosen guards get a
highlight square and each assignment an explicit sightline segment.
"""

from __future__ import annotations

from .geometry import Terrain
from .solver import GuardSolution


def emit_svg(t: Terrain, solution: GuardSolution | None = None) -> str:
    xs, ys = t.xs, t.ys
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y, 1)
    margin = max(span // 12, 2)
    width = (max_x - min_x) + 2 * margin
    height = (max_y - min_y) + 2 * margin
    mark = max(span // 80, 1)
    stroke = max(span // 200, 1)

    def sx(x: int) -> int:
        return x - min_x + margin

    def sy(y: int) -> int:
        return max_y - y + margin

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    # implicit horizontal rays, drawn as short dashed stubs
    ray = margin
    parts.append(
        f'<line class="ray" x1="{sx(min_x) - ray}" y1="{sy(ys[0])}" x2="{sx(xs[0])}" y2="{sy(ys[0])}" '
        f'stroke="gray" stroke-width="{stroke}" stroke-dasharray="{2 * stroke}"/>'
    )
    parts.append(
        f'<line class="ray" x1="{sx(xs[-1])}" y1="{sy(ys[-1])}" x2="{sx(max_x) + ray}" y2="{sy(ys[-1])}" '
        f'stroke="gray" stroke-width="{stroke}" stroke-dasharray="{2 * stroke}"/>'
    )
    chain = " ".join(f"{sx(x)},{sy(y)}" for x, y in zip(xs, ys))
    parts.append(
        f'<polyline class="terrain" points="{chain}" fill="none" stroke="black" stroke-width="{stroke}"/>'
    )
    if solution is not None:
        for target, guard in solution.assignment.items():
            parts.append(
                f'<line class="assign" x1="{sx(xs[guard])}" y1="{sy(ys[guard])}" '
                f'x2="{sx(xs[target])}" y2="{sy(ys[target])}" '
                f'stroke="steelblue" stroke-width="{stroke}" opacity="0.7"/>'
            )
    guard_set = set(solution.guards) if solution is not None else set()
    for i, cls in enumerate(t.classes):
        cx, cy = sx(xs[i]), sy(ys[i])
        if i in guard_set:
            r = 2 * mark
            parts.append(
                f'<rect class="guard" x="{cx - r}" y="{cy - r}" width="{2 * r}" height="{2 * r}" '
                f'fill="orange" stroke="black" stroke-width="{stroke}"/>'
            )
        elif cls.is_reflex:
            parts.append(
                f'<rect class="reflex" x="{cx - mark}" y="{cy - mark}" width="{2 * mark}" height="{2 * mark}" '
                f'fill="black"/>'
            )
        else:
            parts.append(
                f'<rect class="convex" x="{cx - mark}" y="{cy - mark}" width="{2 * mark}" height="{2 * mark}" '
                f'fill="white" stroke="black" stroke-width="{stroke}"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
