from __future__ import annotations

import pytest

from wooddesargues.render import LAYERS, RenderStyle, render_svg


def test_render_is_deterministic(reference_config):
    first = render_svg(reference_config)
    second = render_svg(reference_config)
    assert first == second
    assert first.startswith('<?xml version="1.0"')
    assert first.endswith("</svg>\n")


def test_pentagon_circle_appears_in_world_coordinates(reference_config):
    svg = render_svg(reference_config)
    assert 'cx="0.500000" cy="1.500000" r="1.581139"' in svg


def test_layer_toggles(reference_config):
    everything = render_svg(reference_config)
    assert "<circle" in everything and "<line" in everything
    assert "<rect" in everything and "<text" in everything

    points_only = render_svg(reference_config, RenderStyle(layers=("points",)))
    assert "<circle" not in points_only
    assert "<line" not in points_only
    assert "<rect" in points_only and "<text" in points_only

    circles_only = render_svg(reference_config, RenderStyle(layers=("circles",)))
    assert circles_only.count("<circle") == 5
    assert "<rect" not in circles_only

    hagge = render_svg(reference_config, RenderStyle(layers=("haggeCentres",)))
    assert hagge.count("<circle") == 10  # ten Hagge circles
    assert hagge.count("<rect") == 10    # ten Hagge centres

    perspectrices = render_svg(reference_config, RenderStyle(layers=("perspectrices",)))
    assert perspectrices.count("<line") == 10


def test_six_decimal_formatting(reference_config):
    svg = render_svg(reference_config)
    import re
    numbers = re.findall(
        r'(?:cx|cy|r|x|y|x1|y1|x2|y2|width|height|stroke-width)="(-?\d+\.\d+)"', svg)
    assert numbers
    for number in numbers:
        assert len(number.split(".")[1]) == 6
    assert "-0.000000" not in svg


def test_style_validation():
    with pytest.raises(ValueError):
        RenderStyle(layers=("nope",))
    with pytest.raises(ValueError):
        RenderStyle(size=0)
    with pytest.raises(ValueError):
        RenderStyle(margin=0.7)
    assert RenderStyle().layers == LAYERS
