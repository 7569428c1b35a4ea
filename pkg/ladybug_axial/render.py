# coding=utf-8
"""SVG phase portraits and CSV streamline tables.

Both outputs are deterministic: streamlines are written in the order given,
coordinates are rounded to 6 decimals and no timestamps are added.
"""
from __future__ import division

import csv
import io
import math

from ladybug.color import Color
from ladybug.futil import write_to_file

from .portrait import Streamline
from .umbilic import region_bounds

CSV_COLUMNS = ('curve_id', 'branch', 'field', 'idx', 'u', 'v')
STYLES = {
    'principal': (Color(0, 90, 181), 1.0, None),
    'mean': (Color(220, 50, 32), 1.0, '4 3'),
    'separatrix': (Color(0, 0, 0), 1.8, None)
}
TYPE_COLORS = {
    'E3': Color(26, 133, 255),
    'E4': Color(0, 158, 115),
    'E5': Color(212, 17, 89),
    'unresolved': Color(128, 128, 128)
}
CRITICAL_COLOR = Color(0, 0, 0)
MARGIN = 20


def _hex(color):
    return '#{:02x}{:02x}{:02x}'.format(color.r, color.g, color.b)


def _num(value):
    text = '{:.6f}'.format(value)
    return '0.000000' if text == '-0.000000' else text


class _Frame(object):
    """Map chart coordinates to SVG pixels with v pointing up."""
    __slots__ = ('bounds', 'scale', 'width', 'height')

    def __init__(self, bounds, size):
        self.bounds = bounds
        u_min, u_max, v_min, v_max = bounds
        self.scale = (size - 2 * MARGIN) / max(u_max - u_min, v_max - v_min)
        self.width = (u_max - u_min) * self.scale + 2 * MARGIN
        self.height = (v_max - v_min) * self.scale + 2 * MARGIN

    def __call__(self, u, v):
        u_min, _, _, v_max = self.bounds
        return (MARGIN + (u - u_min) * self.scale, MARGIN + (v_max - v) * self.scale)


def _group_of(line):
    return 'separatrix' if line.branch == 'separatrix' else \
        ('mean' if line.field == 'mean' else 'principal')


def _glyph(record, frame):
    """A marker whose vertex count tells the type: 3, 4 or 5 sides."""
    x, y = frame(*record.position)
    sides = {'E3': 3, 'E4': 4, 'E5': 5}.get(record.type)
    color = _hex(TYPE_COLORS[record.type])
    if sides is None:
        return '<circle class="axiumbilic unresolved" cx="{}" cy="{}" r="4" ' \
            'fill="none" stroke="{}"/>'.format(_num(x), _num(y), color)
    pts = []
    for k in range(sides):
        ang = -math.pi / 2 + 2 * math.pi * k / sides
        pts.append('{},{}'.format(_num(x + 5 * math.cos(ang)),
                                  _num(y + 5 * math.sin(ang))))
    return '<polygon class="axiumbilic {}" points="{}" fill="{}"/>'.format(
        record.type, ' '.join(pts), color)


def render_svg(streamlines, records=(), region=None, critical_points=(), size=600,
               title=None):
    """Get an SVG 1.1 document of a phase portrait.

    Args:
        streamlines: A list of Streamlines.
        records: A list of AxiumbilicRecords, marked by a glyph with as many
            sides as separatrices of their type.
        region: The (u_min, u_max, v_min, v_max) window. By default the box of
            all points (or the unit square when there are none).
        critical_points: A list of (u, v) critical points, marked by a cross.
        size: The size in pixels of the longer side. (Default: 600).
        title: Optional text for the title element.

    Returns:
        The SVG document as text.
    """
    if region is None:
        pts = [p for s in streamlines for p in s.points] + \
            [r.position for r in records] + [tuple(p) for p in critical_points]
        if pts:
            us, vs = [p[0] for p in pts], [p[1] for p in pts]
            region = (min(us), max(us) + 1e-9, min(vs), max(vs) + 1e-9)
        else:
            region = (-1, 1, -1, 1)
    frame = _Frame(region_bounds(region), size)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="{}" height="{}" viewBox="0 0 {} {}">'.format(
            _num(frame.width), _num(frame.height), _num(frame.width),
            _num(frame.height))
    ]
    if title:
        out.append('<title>{}</title>'.format(title))

    # axes through the origin when it is inside the window
    u_min, u_max, v_min, v_max = frame.bounds
    out.append('<g class="axes" stroke="#bbbbbb" stroke-width="0.5">')
    if u_min <= 0 <= u_max:
        x0, y0 = frame(0, v_min)
        x1, y1 = frame(0, v_max)
        out.append('<line x1="{}" y1="{}" x2="{}" y2="{}"/>'.format(
            _num(x0), _num(y0), _num(x1), _num(y1)))
    if v_min <= 0 <= v_max:
        x0, y0 = frame(u_min, 0)
        x1, y1 = frame(u_max, 0)
        out.append('<line x1="{}" y1="{}" x2="{}" y2="{}"/>'.format(
            _num(x0), _num(y0), _num(x1), _num(y1)))
    out.append('</g>')

    for group in ('principal', 'mean', 'separatrix'):
        color, width, dash = STYLES[group]
        attrs = 'class="{}" fill="none" stroke="{}" stroke-width="{}"'.format(
            group, _hex(color), width)
        if dash:
            attrs += ' stroke-dasharray="{}"'.format(dash)
        out.append('<g {}>'.format(attrs))
        for line in streamlines:
            if _group_of(line) != group or len(line.points) < 2:
                continue
            coords = ' '.join('{},{}'.format(*(_num(c) for c in frame(*p)))
                              for p in line.points)
            out.append('<polyline points="{}"/>'.format(coords))
        out.append('</g>')

    out.append('<g class="markers">')
    for point in critical_points:
        x, y = frame(point[0], point[1])
        out.append('<path class="critical" d="M {} {} L {} {} M {} {} L {} {}" '
                   'stroke="{}" stroke-width="1.5"/>'.format(
                       _num(x - 5), _num(y - 5), _num(x + 5), _num(y + 5),
                       _num(x - 5), _num(y + 5), _num(x + 5), _num(y - 5),
                       _hex(CRITICAL_COLOR)))
    for rec in records:
        out.append(_glyph(rec, frame))
    out.append('</g>')
    out.append('</svg>')
    return '\n'.join(out) + '\n'


def write_svg(path, streamlines, records=(), region=None, critical_points=(),
              size=600, title=None):
    """Render a portrait and write it to a file. Returns the file path."""
    document = render_svg(streamlines, records, region, critical_points, size, title)
    return write_to_file(path, document, mkdir=True)


def export_csv(streamlines):
    """Get the CSV text of a list of streamlines.

    The columns are curve_id, branch, field, idx, u, v with one row per point,
    LF line endings and coordinates to 6 decimals.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for curve_id, line in enumerate(streamlines):
        for idx, (u, v) in enumerate(line.points):
            writer.writerow((curve_id, line.branch, line.field, idx, _num(u), _num(v)))
    return buffer.getvalue()


def write_csv(path, streamlines):
    """Write the CSV of a list of streamlines to a file. Returns the file path."""
    return write_to_file(path, export_csv(streamlines), mkdir=True)


def parse_csv(text):
    """Read streamlines back from the text of export_csv.

    The termination reason is not part of the table, so the lines come back
    with the reason 'step-limit'.
    """
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    assert header is not None and tuple(header) == CSV_COLUMNS, \
        'Expected the columns {}. Got {}.'.format(CSV_COLUMNS, header)
    curves = {}
    for row in reader:
        if not row:
            continue
        curve_id, branch, field, idx = int(row[0]), row[1], row[2], int(row[3])
        entry = curves.setdefault(curve_id, (branch, field, []))
        entry[2].append((idx, float(row[4]), float(row[5])))
    lines = []
    for curve_id in sorted(curves):
        branch, field, rows = curves[curve_id]
        points = [(u, v) for _, u, v in sorted(rows)]
        lines.append(Streamline(points, branch, field, 'step-limit'))
    return lines
