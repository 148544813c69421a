from __future__ import annotations

from fractions import Fraction as F

import pytest

from wooddesargues import check_perpendicular_concurrency, check_three_circle_collinearity, check_names, verify_all
from wooddesargues.configuration import CIRCLE_LABELS, PERSPECTIVE_TABLE
from wooddesargues.kernel import (
    DegenerateInputError,
    is_collinear,
    line_through,
    meet,
    perpendicular_at,
    point,
)
from wooddesargues.serialize import dumps, report_to_document
from wooddesargues.verifier import (
    DEGENERATE,
    FAIL,
    PASS,
    check_core_similarity,
    check_five_circles,
    check_hagge,
    check_perspective,
    check_steiner_line,
    float_cross_residuals,
)

from conftest import mutate_configuration


EXPECTED_NAMES = (
    "perspective:K", "perspective:A", "perspective:B", "perspective:C",
    "perspective:1", "perspective:2", "perspective:3",
    "perspective:a", "perspective:b", "perspective:c",
    "five-circles", "core-similarity",
    "orthocentre-quadrangle:ABCK", "orthocentre-quadrangle:abcK",
    "orthocentre-quadrangle:Aa23", "orthocentre-quadrangle:Bb31",
    "orthocentre-quadrangle:Cc12",
    "steiner-line:ABCK", "steiner-line:abcK", "steiner-line:Aa23",
    "steiner-line:Bb31", "steiner-line:Cc12",
    "pentagon-perspectives", "pentagon-quadrangles",
    "tangent-concurrency", "hagge-suite",
    "perpendicular-concurrency", "three-circle-collinearity",
)


def test_check_names_are_frozen():
    assert check_names() == EXPECTED_NAMES


def test_reference_report(reference_config):
    report = verify_all(reference_config)
    assert tuple(r.name for r in report.results) == EXPECTED_NAMES
    by_name = {r.name: r for r in report.results}
    assert report.summary == {"pass": 27, "fail": 0, "degenerate-pass": 1, "total": 28}
    degenerate = [r for r in report.results if r.status == DEGENERATE]
    assert [r.name for r in degenerate] == ["pentagon-perspectives"]
    assert "Z coincides with C" in degenerate[0].notes
    # the Bb31 orthocentre line collapses to two points at this seed: still a pass
    assert by_name["steiner-line:Bb31"].status == PASS
    assert "2 distinct" in by_name["steiner-line:Bb31"].notes
    assert "false" in by_name["three-circle-collinearity"].notes


def test_report_is_deterministic(reference_config):
    r1 = dumps(report_to_document(verify_all(reference_config)))
    r2 = dumps(report_to_document(verify_all(reference_config)))
    assert r1 == r2


def test_core_similarity_witnesses(reference_config):
    result = check_core_similarity(reference_config)
    assert result.status == PASS
    assert ("alpha", "(-1/1, -2/1)") in result.witnesses


def test_perspective_row_witness_carries_the_axis(reference_config):
    result = check_perspective(reference_config, PERSPECTIVE_TABLE[0])
    assert result.status == PASS
    assert ("perspectrix", "[1x + -3y + 11 = 0]") in result.witnesses


def test_perturbed_point_fails_with_nonzero_witness(reference_config):
    # the falsifiability probe from the interface contract: move one point to the origin
    bad = mutate_configuration(reference_config, "point", "1", "x", F(-17, 5))
    bad = mutate_configuration(bad, "point", "1", "y", F(-24, 5))
    result = check_perspective(bad, PERSPECTIVE_TABLE[0])
    assert result.status == FAIL
    assert result.witnesses
    assert all(value != "0/1" for _, value in result.witnesses)


def test_five_circles_detects_center_tampering(reference_config):
    bad = mutate_configuration(reference_config, "center", "U", "x", 1)
    from wooddesargues.configuration import derive_figures
    result = check_five_circles(bad, derive_figures(bad))
    assert result.status == FAIL


def test_hagge_check_reports_radii(reference_config, reference_derived):
    result = check_hagge(reference_config, reference_derived)
    assert result.status == PASS
    radii = [v for k, v in result.witnesses if k.startswith("h-circumcircle")]
    assert radii == ["5/2"] * 5


def test_steiner_line_all_quadrangles(reference_config, reference_derived):
    for clbl in CIRCLE_LABELS:
        assert check_steiner_line(reference_config, reference_derived, clbl).status == PASS


def test_orthocentre_quadrangle_identity_probe(reference_config, reference_derived):
    # feeding the quadrangle itself instead of its orthocentres gives the
    # identity map: multiplier 1, not the required half turn
    import dataclasses
    from wooddesargues.configuration import CIRCLE_POINTS
    from wooddesargues.verifier import check_orthocentre_quadrangle

    fake_h = dict(reference_derived.orthocentres.h_role)
    for v in CIRCLE_POINTS["ABCK"]:
        fake_h[("ABCK", v)] = reference_config.points[v]
    orthos = dataclasses.replace(reference_derived.orthocentres, h_role=fake_h)
    derived = dataclasses.replace(reference_derived, orthocentres=orthos)
    result = check_orthocentre_quadrangle(reference_config, derived, "ABCK")
    assert result.status == FAIL
    assert any("multiplier is -1" in label for label, _ in result.witnesses)


def test_pentagon_quadrangle_scrambled_order_has_no_similarity(reference_config):
    # the vertex order matters: swapping the last two targets kills the map
    from wooddesargues.kernel import similarity_between
    cfg = reference_config
    src = [cfg.points[v] for v in ("B", "b", "3", "1")]
    assert similarity_between(src, [cfg.centers[v] for v in "UVLN"]) is not None
    assert similarity_between(src, [cfg.centers[v] for v in "UVNL"]) is None


# --- lemma checks --------------------------------------------------------------


def test_perpendicular_concurrency_worked_instance():
    result = check_perpendicular_concurrency(point(1, 0), point(0, 1), point(0, -1),
                          point(F(-3, 5), F(4, 5)))
    assert result.status == PASS
    assert ("antipode", "(3/5, -4/5)") in result.witnesses


def test_perpendicular_concurrency_degenerate_inputs():
    p, q, r = point(1, 0), point(0, 1), point(0, -1)
    assert check_perpendicular_concurrency(p, q, r, p).status == DEGENERATE
    off = check_perpendicular_concurrency(p, q, r, point(2, 2))
    assert off.status == DEGENERATE
    assert "off the circumcircle" in off.notes
    assert check_perpendicular_concurrency(point(0, 0), point(1, 1), point(2, 2), p).status == DEGENERATE


def test_perpendicular_converse_probe_is_nonconcurrent():
    p, q, r = point(1, 0), point(0, 1), point(0, -1)
    s = point(F(-6, 5), F(8, 5))  # scaled off the circumcircle
    perps = [perpendicular_at(base, line_through(s, base)) for base in (p, q, r)]
    crossing = meet(perps[0], perps[1])
    assert perps[2].evaluate(crossing) != 0


def test_three_circle_worked_instance():
    result = check_three_circle_collinearity(point(1, 0), point(0, 1), point(F(3, 5), F(-4, 5)))
    assert result.status == PASS
    witness = dict(result.witnesses)
    assert witness["A"] == "(-1/5, -2/5)"
    assert witness["B"] == "(-7/25, -24/25)"
    assert witness["D"] == "(-1/1, 0/1)"
    assert "printed triple (L, B, D) collinear: false" in result.notes


def test_three_circle_precondition_and_coaxial_degeneracy():
    with pytest.raises(DegenerateInputError):
        check_three_circle_collinearity(point(0, 0), point(1, 1), point(2, 2))
    # O and L antipodal on the circumcircle: the three radical axes coincide
    result = check_three_circle_collinearity(point(1, 0), point(0, 1), point(0, -1))
    assert result.status == DEGENERATE
    assert "coaxial" in result.notes


def test_three_circle_fuzzed_instances_use_corrected_triples():
    from wooddesargues.kernel import (
        Circle,
        second_intersection_of_circles,
    )
    j, o, l = point(1, 0), point(F(-3, 5), F(4, 5)), point(F(5, 13), F(12, 13))
    result = check_three_circle_collinearity(j, o, l)
    assert result.status == PASS
    # independent recomputation of the corrected triples
    s2 = Circle(l, (j - l).norm_squared())
    s3 = Circle(o, (j - o).norm_squared())
    a, _ = second_intersection_of_circles(s2, s3, j)
    assert is_collinear(o, a, point(*[F(x) for x in dict(result.witnesses)["B"][1:-1].split(", ")]))


def test_float_cross_residuals_are_tiny(reference_config):
    report = verify_all(reference_config)
    assert float_cross_residuals(report) < 1e-9
