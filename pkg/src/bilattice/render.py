"""State diagrams: deterministic text grids and matplotlib SVG figures.

Colors are drawn as solid polylines running down and to the right, dolors as
dashed polylines running down and to the left, on an r x N grid with column
labels N-1..0.  SVG output is byte-stable: a fixed hash salt and empty date
metadata make repeated renders identical.
"""

from __future__ import annotations

import io

from .lattice import State, SystemSpec
from .weights import boson_at_rank, spin_str

_COLOR_HUES = ["#56b4e9", "#e69f00", "#cc79a7", "#009e73", "#f0e442", "#d55e00"]
_DOLOR_HUES = ["#0072b2", "#8c510a", "#882255", "#117733", "#999933", "#994f00"]


def _cell(content, s, r) -> str:
    parts = []
    for k, n in enumerate(content, start=1):
        if n:
            c, d = boson_at_rank(k, s, r)
            parts.append(f"c{c}.d{d}" if n == 1 else f"{n}*c{c}.d{d}")
    return "+".join(parts) if parts else "."


def render_text(state: State, spec: SystemSpec) -> str:
    """Character grid: one cell per vertical edge, one glyph per horizontal edge."""
    r, N = spec.r, spec.N
    cells = [[_cell(state.vcontent[k][j], r, r) for j in range(N - 1, -1, -1)] for k in range(r + 1)]
    spin_rows = [
        [spin_str(state.hspin[i][b]) for b in range(N, -1, -1)] for i in range(r)
    ]
    width = max(
        2,
        max(len(x) for row in cells for x in row),
        max(len(x) for row in spin_rows for x in row),
    )

    def pad(x):
        return x.center(width)

    lines = ["col  " + " ".join(pad(str(j)) for j in range(N - 1, -1, -1))]
    for k in range(r + 1):
        lines.append(f"v{k}   " + " ".join(pad(x) for x in cells[k]))
        if k < r:
            lines.append(f"h{k+1}  " + " ".join(pad(x) for x in spin_rows[k]))
    return "\n".join(lines) + "\n"


def trace_color(state: State, spec: SystemSpec, c: int) -> list:
    """Vertices (x, y) of the polyline of color c; x grows rightward, y upward."""
    r, N = spec.r, spec.N

    def col_with_color(layer):
        for j in range(N):
            for k, n in enumerate(layer[j], start=1):
                if n and boson_at_rank(k, r, r)[0] == c:
                    return j
        return None

    cur = col_with_color(state.vcontent[0])
    if cur is None:
        raise ValueError(f"color {c} not on the top boundary")
    x = lambda j: N - 1 - j
    verts = [(x(cur), r - 0.5)]
    for i in range(1, r + 1):
        y = r - i
        nxt = col_with_color(state.vcontent[i])
        if nxt == cur:
            continue
        verts.append((x(cur), y))
        if nxt is None:
            verts.append((N - 0.5, y))
            return verts
        verts.append((x(nxt), y))
        cur = nxt
    raise ValueError(f"color {c} never exits the grid")


def trace_dolor(state: State, spec: SystemSpec, d: int) -> list:
    r, N = spec.r, spec.N

    def col_with_dolor(layer):
        for j in range(N):
            for k, n in enumerate(layer[j], start=1):
                if n and boson_at_rank(k, r, r)[1] == d:
                    return j
        return None

    cur = col_with_dolor(state.vcontent[0])
    if cur is None:
        raise ValueError(f"dolor {d} not on the top boundary")
    x = lambda j: N - 1 - j
    verts = [(x(cur), r - 0.5)]
    for i in range(1, r + 1):
        y = r - i
        nxt = col_with_dolor(state.vcontent[i])
        if nxt == cur:
            continue
        verts.append((x(cur), y))
        if nxt is None:
            verts.append((-0.5, y))
            return verts
        verts.append((x(nxt), y))
        cur = nxt
    raise ValueError(f"dolor {d} never exits the grid")


def render_svg(state: State, spec: SystemSpec) -> str:
    """Matplotlib SVG with one solid path per color and one dashed path per dolor."""
    import matplotlib

    from matplotlib.backends.backend_svg import FigureCanvasSVG
    from matplotlib.figure import Figure

    r, N = spec.r, spec.N
    with matplotlib.rc_context({"svg.hashsalt": "bilattice", "svg.fonttype": "path"}):
        fig = Figure(figsize=(1.2 * N + 1, 1.2 * r + 1))
        FigureCanvasSVG(fig)
        ax = fig.add_subplot(111)
        for i in range(r):
            ax.plot([-0.5, N - 0.5], [i, i], color="#bbbbbb", lw=1, zorder=0)
        for jx in range(N):
            ax.plot([jx, jx], [-0.5, r - 0.5], color="#bbbbbb", lw=1, zorder=0)
        for c in range(1, r + 1):
            verts = trace_color(state, spec, c)
            xs = [v[0] + 0.045 for v in verts]
            ys = [v[1] + 0.045 for v in verts]
            ax.plot(xs, ys, color=_COLOR_HUES[(c - 1) % len(_COLOR_HUES)], lw=4,
                    solid_capstyle="round", zorder=2, label=f"c{c}")
        for d in range(1, r + 1):
            verts = trace_dolor(state, spec, d)
            xs = [v[0] - 0.045 for v in verts]
            ys = [v[1] - 0.045 for v in verts]
            ax.plot(xs, ys, color=_DOLOR_HUES[(d - 1) % len(_DOLOR_HUES)], lw=4,
                    dashes=(3, 1.6), zorder=1, label=f"d{d}")
        for jx in range(N):
            ax.text(jx, r - 0.3, str(N - 1 - jx), ha="center", va="bottom", fontsize=11)
        for i in range(1, r + 1):
            ax.text(-0.8, r - i, str(i), ha="right", va="center", fontsize=11)
        ax.set_xlim(-1.0, N - 0.3)
        ax.set_ylim(-0.7, r - 0.1)
        ax.set_aspect("equal")
        ax.axis("off")
        buf = io.StringIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def render_state(state: State, spec: SystemSpec, fmt: str = "text") -> str:
    if fmt == "text":
        return render_text(state, spec)
    if fmt == "svg":
        return render_svg(state, spec)
    raise ValueError(f"unknown render format {fmt!r}")
