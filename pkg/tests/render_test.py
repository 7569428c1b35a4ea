# coding utf-8
import os

import pytest

from ladybug_axial.umbilic import AxiumbilicRecord
from ladybug_axial.portrait import Streamline
from ladybug_axial.render import CSV_COLUMNS, render_svg, write_svg, export_csv, \
    write_csv, parse_csv

LINES = [
    Streamline([(0, 0), (0.5, 0.25), (1, 0.5)], 'principal', 'principal',
               'step-limit'),
    Streamline([(0, 0), (-0.5, 0.5)], 'mean', 'mean', 'boundary'),
    Streamline([(0.2, 0.2), (0.3, -0.1)], 'separatrix', 'mean', 'axiumbilic')
]
RECORDS = [AxiumbilicRecord((0.2, 0.2), type='E4'),
           AxiumbilicRecord((-0.4, 0.1), type='unresolved')]


def test_render_svg():
    """Test the groups and markers of an SVG portrait."""
    svg = render_svg(LINES, RECORDS, (-1, 1, -1, 1), [(0, 0)], title='alpha_a')
    assert svg.startswith('<?xml')
    assert svg.endswith('</svg>\n')
    assert 'width="600.000000" height="600.000000"' in svg
    assert '<title>alpha_a</title>' in svg
    for group in ('principal', 'mean', 'separatrix'):
        assert '<g class="{}"'.format(group) in svg
    assert svg.count('<polyline') == 3
    assert 'class="axiumbilic E4"' in svg
    assert 'class="axiumbilic unresolved"' in svg
    assert 'class="critical"' in svg
    assert render_svg(LINES, RECORDS, (-1, 1, -1, 1), [(0, 0)], title='alpha_a') \
        == svg


def test_render_svg_default_region():
    """Test the window of an SVG portrait without an explicit region."""
    svg = render_svg(LINES)
    assert svg.count('<polyline') == 3
    assert '<title>' not in svg
    empty = render_svg([])
    assert 'width="600.000000"' in empty


def test_write_svg(tmp_path):
    """Test writing an SVG file."""
    path = str(tmp_path / 'portrait' / 'alpha_a.svg')
    assert write_svg(path, LINES, RECORDS) == path
    assert os.path.isfile(path)
    with open(path) as svg_file:
        assert svg_file.read() == render_svg(LINES, RECORDS)


def test_export_csv():
    """Test the rows of the CSV table."""
    text = export_csv(LINES)
    rows = text.split('\n')
    assert rows[0] == ','.join(CSV_COLUMNS)
    assert rows[1] == '0,principal,principal,0,0.000000,0.000000'
    assert rows[2] == '0,principal,principal,1,0.500000,0.250000'
    assert rows[7] == '2,separatrix,mean,1,0.300000,-0.100000'
    assert text.endswith('\n')
    assert len(rows) == 9


def test_parse_csv():
    """Test reading streamlines from a CSV table."""
    lines = parse_csv(export_csv(LINES))
    assert len(lines) == 3
    assert lines[0].points == LINES[0].points
    assert lines[2].branch == 'separatrix'
    assert lines[2].field == 'mean'
    assert all(line.reason == 'step-limit' for line in lines)
    with pytest.raises(AssertionError):
        parse_csv('u,v\n0,0\n')


def test_write_csv(tmp_path):
    """Test writing a CSV file."""
    path = str(tmp_path / 'lines.csv')
    assert write_csv(path, LINES) == path
    with open(path) as csv_file:
        assert csv_file.read() == export_csv(LINES)
