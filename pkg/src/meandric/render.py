"""Text renderings of meanders and graphs: SVG and ASCII arc diagrams, DOT graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .gaussdiag import InterlacementGraph, meandric_graph_of
from .meander import arc_system_of, oracle_is_meandric
from .permcore import Permutation

TARGETS = ("svg", "ascii", "dot")


@dataclass(frozen=True)
class RenderSpec:
    target: str = "svg"
    width: int | None = None
    height: int | None = None
    spacing: int | None = None

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValidationError(f"unknown render target {self.target!r}; expected one of {TARGETS}")
        for name in ("width", "height"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValidationError(f"{name} must be positive, got {value}")
        if self.spacing is not None and self.spacing < 1:
            raise ValidationError(f"spacing must be at least 1, got {self.spacing}")


def emit_dot(g: InterlacementGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    lines += [f'  "{v}";' for v in g.vertices]
    lines += [f'  "{u}" -- "{v}";' for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _depths(arcs) -> dict[tuple[int, int], int]:
    """Nesting height of each arc: 1 plus the tallest arc nested inside it."""
    depth = {}
    for a, b in sorted(arcs, key=lambda ab: ab[1] - ab[0]):
        inner = [depth[c] for c in depth if a < c[0] and c[1] < b]
        depth[(a, b)] = 1 + max(inner, default=0)
    return depth


def render_svg(mu: Permutation, spec: RenderSpec) -> str:
    arcs = arc_system_of(mu)
    m = mu.n
    s = spec.spacing or 40
    maxr = (m - 1) * s / 2
    w_nat = (m + 1) * s
    h_nat = 2 * (maxr + s)
    y = maxr + s
    width = spec.width or int(w_nat)
    height = spec.height or int(h_nat)

    def num(v: float) -> str:
        return f"{v:.1f}".rstrip("0").rstrip(".")

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {num(w_nat)} {num(h_nat)}">',
        f'<line x1="{num(s / 4)}" y1="{num(y)}" x2="{num(w_nat - s / 4)}" y2="{num(y)}" '
        'stroke="black" stroke-width="1.5"/>',
        f'<polygon points="{num(w_nat - s / 4)},{num(y)} {num(w_nat - s / 2)},{num(y - s / 8)} '
        f'{num(w_nat - s / 2)},{num(y + s / 8)}" fill="black"/>',
    ]
    for side, sweep in (("lower", 0), ("upper", 1)):
        for a, b in sorted(getattr(arcs, side)):
            r = (b - a) * s / 2
            out.append(
                f'<path class="{side}" d="M {num(a * s)} {num(y)} A {num(r)} {num(r)} 0 0 {sweep} '
                f'{num(b * s)} {num(y)}" fill="none" stroke="black" stroke-width="2"/>'
            )
    for p in range(1, m + 1):
        out.append(f'<circle cx="{num(p * s)}" cy="{num(y)}" r="{num(s / 10)}" fill="black"/>')
        out.append(
            f'<text x="{num(p * s + s / 8)}" y="{num(y + s / 3)}" font-size="{num(s / 3)}">{p}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ascii(mu: Permutation, spec: RenderSpec) -> str:
    arcs = arc_system_of(mu)
    m = mu.n
    s = spec.spacing or 4
    width = (m - 1) * s + len(str(m)) + 2

    def x(p: int) -> int:
        return (p - 1) * s

    def half(side_arcs, upward: bool) -> list[str]:
        depth = _depths(side_arcs)
        top = max(depth.values(), default=0)
        grid = [[" "] * width for _ in range(top)]
        for (a, b), d in depth.items():
            # row index 0 is the arc level farthest from the line
            level = top - d if upward else d - 1
            row = grid[level]
            for c in range(x(a), x(b) + 1):
                row[c] = "-"
            row[x(a)] = row[x(b)] = "+"
            near = range(level + 1, top) if upward else range(0, level)
            for k in near:
                grid[k][x(a)] = grid[k][x(b)] = "|"
        return ["".join(r).rstrip() for r in grid]

    line = ["="] * (width - 1) + [">"]
    fits = s > len(str(m))
    for p in range(1, m + 1):
        label = str(p) if fits else "o"
        for k, ch in enumerate(label):
            line[x(p) + k] = ch
    rows = half(arcs.upper, True) + ["".join(line)] + half(arcs.lower, False)
    return "\n".join(rows) + "\n"


def render_meander(mu: Permutation, spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec()
    if not oracle_is_meandric(mu):
        raise ValidationError(f"{mu} is not a meandric permutation; run `check {mu}` for details")
    if spec.target == "svg":
        return render_svg(mu, spec)
    if spec.target == "ascii":
        return render_ascii(mu, spec)
    return emit_dot(meandric_graph_of(mu))
