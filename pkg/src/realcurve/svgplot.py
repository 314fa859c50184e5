"""Static SVG rendering of a curve's real locus.

The zero set is traced by exact sign scanning: the defining polynomial
is evaluated with rational arithmetic at every grid corner, cells with a
sign change contribute linearly interpolated crossing segments, and the
segments are chained into polylines (marching squares with the saddle
ambiguity resolved by the exact sign at the cell center).  Grid values
that are exactly zero count as positive, so point-shaped components do
not produce contours; isolated points are drawn as explicit markers from
the classification instead.

Output is plain SVG 1.1 with no scripting, byte-identical for identical
inputs.
"""

from fractions import Fraction

from .curve import Curve

_SIZE = 640
_MARGIN = 40


def _corner_values(f, xs, ys):
    cols = []
    for xv in xs:
        sl = f.eval_x(xv)
        cols.append([sl.eval(yv) for yv in ys])
    return cols


def _cell_segments(vals, pts, center_val):
    """Contour segments of one grid cell; corners and their values are
    ordered (bottom-left, bottom-right, top-right, top-left)."""
    pos = [v >= 0 for v in vals]
    cross = {}
    for edge, (a, b) in enumerate(((0, 1), (1, 2), (2, 3), (3, 0))):
        if pos[a] != pos[b]:
            t = vals[a] / (vals[a] - vals[b])
            (ax, ay), (bx, by) = pts[a], pts[b]
            cross[edge] = (ax + t * (bx - ax), ay + t * (by - ay))
    if not cross:
        return []
    if len(cross) == 2:
        e1, e2 = sorted(cross)
        return [(cross[e1], cross[e2])]
    # saddle: the center sign decides which corners the contour separates
    if (center_val >= 0) == pos[0]:
        return [(cross[0], cross[1]), (cross[2], cross[3])]
    return [(cross[0], cross[3]), (cross[1], cross[2])]


def trace_segments(f, xmin, xmax, ymin, ymax, resolution):
    """All contour segments on the grid, with exact rational endpoints."""
    n = resolution
    xs = [xmin + (xmax - xmin) * i / n for i in range(n + 1)]
    ys = [ymin + (ymax - ymin) * j / n for j in range(n + 1)]
    cols = _corner_values(f, xs, ys)
    segments = []
    for i in range(n):
        for j in range(n):
            vals = (cols[i][j], cols[i + 1][j], cols[i + 1][j + 1], cols[i][j + 1])
            if all(v >= 0 for v in vals) or all(v < 0 for v in vals):
                continue
            pts = (
                (xs[i], ys[j]),
                (xs[i + 1], ys[j]),
                (xs[i + 1], ys[j + 1]),
                (xs[i], ys[j + 1]),
            )
            center = None
            pos = [v >= 0 for v in vals]
            if pos in ([True, False, True, False], [False, True, False, True]):
                cx = (xs[i] + xs[i + 1]) / 2
                cy = (ys[j] + ys[j + 1]) / 2
                center = f.eval(cx, cy)
            segments.extend(_cell_segments(vals, pts, center))
    return segments


def chain_polylines(segments):
    """Join segments sharing exact endpoints into polylines; open chains
    are walked from their loose ends, the rest close into loops."""
    touching = {}
    for k, (a, b) in enumerate(segments):
        touching.setdefault(a, []).append(k)
        touching.setdefault(b, []).append(k)
    used = [False] * len(segments)

    def step(pt):
        for k in touching[pt]:
            if not used[k]:
                used[k] = True
                a, b = segments[k]
                return b if a == pt else a
        return None

    def walk(start):
        path = [start]
        cur = start
        while True:
            nxt = step(cur)
            if nxt is None:
                return path
            path.append(nxt)
            cur = nxt

    chains = []
    for start in sorted(p for p, ks in touching.items() if len(ks) % 2 == 1):
        if any(not used[k] for k in touching[start]):
            chains.append(walk(start))
    for k in range(len(segments)):
        if not used[k]:
            used[k] = True
            a, b = segments[k]
            path = walk(b)
            chains.append([a] + path)
    return chains


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


class _Frame:
    def __init__(self, xmin, xmax, ymin, ymax):
        self.xmin, self.xmax = xmin, xmax
        self.ymin, self.ymax = ymin, ymax
        self.span = _SIZE - 2 * _MARGIN

    def sx(self, x) -> float:
        return _MARGIN + float((x - self.xmin) / (self.xmax - self.xmin)) * self.span

    def sy(self, y) -> float:
        return _MARGIN + float((self.ymax - y) / (self.ymax - self.ymin)) * self.span

    def contains(self, x, y) -> bool:
        return (
            self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax
        )


def render_svg(curve: Curve, xmin, xmax, ymin, ymax, resolution, report=None) -> str:
    """SVG document for the real locus on [xmin,xmax] x [ymin,ymax].

    report, when given, is the curve's classification; its singular real
    points get dot markers and its isolated real points an extra ring.
    An empty locus yields just the frame and axes.
    """
    xmin, xmax = Fraction(xmin), Fraction(xmax)
    ymin, ymax = Fraction(ymin), Fraction(ymax)
    if xmin >= xmax or ymin >= ymax:
        raise ValueError("plot window is empty")
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    fr = _Frame(xmin, xmax, ymin, ymax)
    segments = trace_segments(curve.f, xmin, xmax, ymin, ymax, resolution)
    chains = chain_polylines(segments)

    out = []
    out.append(
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_SIZE}" height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">'
    )
    out.append(f"  <title>real locus of {curve.f}</title>")
    out.append(
        '  <rect x="0" y="0" width="%d" height="%d" fill="white"/>' % (_SIZE, _SIZE)
    )
    p0, p1 = _MARGIN, _SIZE - _MARGIN
    out.append(
        f'  <rect x="{p0}" y="{p0}" width="{fr.span}" height="{fr.span}" '
        'fill="none" stroke="#333333" stroke-width="1"/>'
    )
    out.append('  <g id="axes" stroke="#bbbbbb" stroke-width="1">')
    if xmin < 0 < xmax:
        x0 = _fmt(fr.sx(0))
        out.append(f'    <line x1="{x0}" y1="{p0}" x2="{x0}" y2="{p1}"/>')
    if ymin < 0 < ymax:
        y0 = _fmt(fr.sy(0))
        out.append(f'    <line x1="{p0}" y1="{y0}" x2="{p1}" y2="{y0}"/>')
    out.append("  </g>")
    out.append('  <g id="labels" font-family="sans-serif" font-size="12" fill="#333333">')
    out.append(f'    <text x="{p0}" y="{_SIZE - 14}">x: {xmin} .. {xmax}</text>')
    out.append(f'    <text x="{p0}" y="{p0 - 14}">y: {ymin} .. {ymax}</text>')
    out.append("  </g>")
    out.append(
        '  <g id="contours" fill="none" stroke="#1a6baf" stroke-width="1.5" '
        'stroke-linejoin="round">'
    )
    for path in chains:
        coords = []
        last = None
        for x, y in path:
            pt = f"{_fmt(fr.sx(x))},{_fmt(fr.sy(y))}"
            if pt != last:
                coords.append(pt)
                last = pt
        if len(coords) >= 2:
            out.append(f'    <polyline points="{" ".join(coords)}"/>')
    out.append("  </g>")
    if report is not None:
        out.append('  <g id="singular-points" fill="#c0392b">')
        for pt in report.singular_real_points:
            ax, ay = pt.approx()
            if fr.contains(ax, ay):
                out.append(
                    f'    <circle cx="{_fmt(fr.sx(ax))}" cy="{_fmt(fr.sy(ay))}" r="3.5"/>'
                )
        out.append("  </g>")
        out.append(
            '  <g id="isolated-points" fill="none" stroke="#e67e22" stroke-width="2">'
        )
        for pt in report.isolated_real_points:
            ax, ay = pt.approx()
            if fr.contains(ax, ay):
                out.append(
                    f'    <circle cx="{_fmt(fr.sx(ax))}" cy="{_fmt(fr.sy(ay))}" r="6"/>'
                )
        out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
