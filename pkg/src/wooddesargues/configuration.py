"""Construction of the ten-point Wood-Desargues configuration from a rational seed.

The first circle is normalized to the unit circle at the origin (the claims
being verified are similarity-invariant); J, K and the inscribed triangle ABC
are swept out by the tangent-half-angle parametrization, the second circle is
pinned by a rational offset along the perpendicular bisector of JK, and the
remaining points a, b, c, 1, 2, 3 fall out of exact second intersections and
line meets.  Derivations (orthocentres, Hagge centres, the pentagon figure)
live here as well; theorem checking lives in :mod:`wooddesargues.verifier`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .kernel import (
    CoincidentPointsError,
    CollinearPointsError,
    GeometryError,
    ParallelLinesError,
    Circle,
    Point,
    UnitParameter,
    _Infinity,
    circle_through,
    distance_squared,
    incident,
    line_through,
    meet,
    midpoint,
    orthocentre,
    perpendicular_bisector,
    point_on_unit_circle,
    second_intersection_of_circles,
    second_intersection_with_line,
)

POINT_LABELS = ("A", "B", "C", "K", "a", "b", "c", "1", "2", "3")
CIRCLE_LABELS = ("ABCK", "abcK", "Aa23", "Bb31", "Cc12")
CENTER_LABELS = ("U", "V", "L", "M", "N")

CIRCLE_POINTS = {
    "ABCK": ("A", "B", "C", "K"),
    "abcK": ("a", "b", "c", "K"),
    "Aa23": ("A", "a", "2", "3"),
    "Bb31": ("B", "b", "3", "1"),
    "Cc12": ("C", "c", "1", "2"),
}

CIRCLE_CENTER = {"ABCK": "U", "abcK": "V", "Aa23": "L", "Bb31": "M", "Cc12": "N"}
CENTER_CIRCLE = {v: k for k, v in CIRCLE_CENTER.items()}


@dataclass(frozen=True)
class PerspectiveRecord:
    """One of the ten perspectives: corresponding triangles, perspector, perspectrix."""

    triangle1: tuple[str, str, str]
    triangle2: tuple[str, str, str]
    vertex: str
    perspectrix: tuple[str, str, str]


_PERSPECTIVE_ROWS = (
    (("A", "B", "C"), ("a", "b", "c"), "K", ("1", "2", "3")),
    (("K", "B", "C"), ("a", "3", "2"), "A", ("1", "c", "b")),
    (("A", "K", "C"), ("3", "b", "1"), "B", ("c", "2", "a")),
    (("A", "B", "K"), ("2", "1", "c"), "C", ("b", "a", "3")),
    (("C", "c", "2"), ("B", "b", "3"), "1", ("a", "A", "K")),
    (("A", "a", "3"), ("C", "c", "1"), "2", ("b", "B", "K")),
    (("B", "b", "1"), ("A", "a", "2"), "3", ("c", "C", "K")),
    (("K", "b", "c"), ("A", "3", "2"), "a", ("1", "C", "B")),
    (("K", "c", "a"), ("B", "1", "3"), "b", ("2", "A", "C")),
    (("K", "a", "b"), ("C", "2", "1"), "c", ("3", "B", "A")),
)

PERSPECTIVE_TABLE = tuple(PerspectiveRecord(*row) for row in _PERSPECTIVE_ROWS)


def perspective_table() -> tuple[PerspectiveRecord, ...]:
    return PERSPECTIVE_TABLE


def _build_static_tables():
    point_circles: dict[str, tuple[str, ...]] = {}
    for plbl in POINT_LABELS:
        on = tuple(clbl for clbl in CIRCLE_LABELS if plbl in CIRCLE_POINTS[clbl])
        assert len(on) == 2, plbl
        point_circles[plbl] = on

    other_center: dict[tuple[str, str], str] = {}
    for clbl in CIRCLE_LABELS:
        for plbl in CIRCLE_POINTS[clbl]:
            other = [x for x in point_circles[plbl] if x != clbl]
            other_center[(clbl, plbl)] = CIRCLE_CENTER[other[0]]

    centers_avoiding: dict[str, tuple[str, str, str]] = {}
    for plbl in POINT_LABELS:
        avoid = tuple(CIRCLE_CENTER[c] for c in CIRCLE_LABELS if c not in point_circles[plbl])
        assert len(avoid) == 3
        centers_avoiding[plbl] = avoid

    # each of the 20 table triangles is inscribed in exactly one circle and
    # omits exactly the row's vertex from that circle's quadrangle
    triangle_quad: dict[frozenset, tuple[str, str]] = {}
    partner_quad: dict[tuple[str, str], str] = {}
    for rec in PERSPECTIVE_TABLE:
        quads = []
        for tri in (rec.triangle1, rec.triangle2):
            key = frozenset(tri)
            hosts = [c for c in CIRCLE_LABELS if key <= set(CIRCLE_POINTS[c])]
            assert len(hosts) == 1, tri
            missing = next(v for v in CIRCLE_POINTS[hosts[0]] if v not in key)
            assert missing == rec.vertex, (tri, missing, rec.vertex)
            assert key not in triangle_quad
            triangle_quad[key] = (hosts[0], missing)
            quads.append(hosts[0])
        partner_quad[(quads[0], rec.vertex)] = quads[1]
        partner_quad[(quads[1], rec.vertex)] = quads[0]
    return point_circles, other_center, centers_avoiding, triangle_quad, partner_quad


(POINT_CIRCLES, OTHER_CENTER, CENTERS_AVOIDING,
 TRIANGLE_QUAD, PARTNER_QUAD) = _build_static_tables()


class DegenerateSeedError(GeometryError):
    """A seed that does not produce a valid ten-point configuration."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class ConfigurationSeed:
    """Six rational parameters: five unit-circle sweeps and the circle-2 offset."""

    t_j: UnitParameter
    t_k: UnitParameter
    t_a: UnitParameter
    t_b: UnitParameter
    t_c: UnitParameter
    s: Fraction

    def t_values(self) -> tuple[UnitParameter, ...]:
        return (self.t_j, self.t_k, self.t_a, self.t_b, self.t_c)

    def as_dict(self) -> dict[str, Union[Fraction, _Infinity]]:
        return {"tJ": self.t_j, "tK": self.t_k, "tA": self.t_a,
                "tB": self.t_b, "tC": self.t_c, "s": self.s}


@dataclass(frozen=True)
class WoodDesarguesConfiguration:
    """The ten labeled points, J, the five circles and their centers."""

    points: dict[str, Point]
    j: Point
    circles: dict[str, Circle]
    centers: dict[str, Point]
    seed: Optional[ConfigurationSeed] = None

    def point(self, label: str) -> Point:
        return self.points[label]

    def quadrangle(self, circle_label: str) -> tuple[Point, ...]:
        return tuple(self.points[v] for v in CIRCLE_POINTS[circle_label])


def build_configuration(seed: ConfigurationSeed) -> WoodDesarguesConfiguration:
    """Construct the configuration, rejecting degenerate seeds with a reason code."""
    ts = seed.t_values()
    for i in range(len(ts)):
        for j in range(i + 1, len(ts)):
            if ts[i] == ts[j]:
                raise DegenerateSeedError("duplicate-parameter")

    pj = point_on_unit_circle(seed.t_j)
    pk = point_on_unit_circle(seed.t_k)
    pa = point_on_unit_circle(seed.t_a)
    pb = point_on_unit_circle(seed.t_b)
    pc = point_on_unit_circle(seed.t_c)

    circle1 = Circle(Point(Fraction(0), Fraction(0)), Fraction(1))
    center2 = midpoint(pj, pk) + (pk - pj).rot90().scale(seed.s)
    circle2 = Circle(center2, distance_squared(center2, pj))
    if circle2 == circle1:
        raise DegenerateSeedError("coincident-circles")
    assert circle2.power(pk) == 0

    seconds = {}
    for lbl, vertex in (("a", pa), ("b", pb), ("c", pc)):
        chord = line_through(vertex, pk)
        other, tangent = second_intersection_with_line(circle2, chord, pk)
        if tangent:
            raise DegenerateSeedError(f"tangent-at-K:{lbl}")
        seconds[lbl] = other
    sa, sb, sc = seconds["a"], seconds["b"], seconds["c"]

    def side_meet(lbl, p, q, r, t):
        try:
            return meet(line_through(p, q), line_through(r, t))
        except ParallelLinesError:
            raise DegenerateSeedError(f"parallel-sides:{lbl}") from None

    p1 = side_meet("1", pb, pc, sb, sc)
    p2 = side_meet("2", pc, pa, sc, sa)
    p3 = side_meet("3", pa, pb, sa, sb)

    points = {"A": pa, "B": pb, "C": pc, "K": pk,
              "a": sa, "b": sb, "c": sc, "1": p1, "2": p2, "3": p3}

    def wood_circle(lbl, p, q, r):
        try:
            return circle_through(p, q, r)
        except (CoincidentPointsError, CollinearPointsError):
            raise DegenerateSeedError(f"degenerate-circle:{lbl}") from None

    circles = {
        "ABCK": circle1,
        "abcK": circle2,
        "Aa23": wood_circle("Aa23", pa, sa, p2),
        "Bb31": wood_circle("Bb31", pb, sb, p3),
        "Cc12": wood_circle("Cc12", pc, sc, p1),
    }

    # hard invariant: every point on exactly the two circles its label names.
    # A missing required incidence would falsify the construction outright; an
    # extra incidence is a coincidence seed that breaks the label combinatorics.
    for plbl in POINT_LABELS:
        for clbl in CIRCLE_LABELS:
            expected = plbl in CIRCLE_POINTS[clbl]
            actual = incident(circles[clbl], points[plbl])
            if actual and not expected:
                raise DegenerateSeedError(f"membership-violation:extra:{plbl}:{clbl}")
            if expected and not actual:
                raise DegenerateSeedError(f"membership-violation:missing:{plbl}:{clbl}")
    centers = {CIRCLE_CENTER[clbl]: circles[clbl].center for clbl in CIRCLE_LABELS}

    return WoodDesarguesConfiguration(points=points, j=pj, circles=circles,
                                      centers=centers, seed=seed)


# ---------------------------------------------------------------------------
# derived figures


@dataclass(frozen=True)
class OrthocentreFigures:
    """The twenty orthocentres with their dual H/F bookkeeping.

    ``h_role[(Q, v)]`` is the orthocentre of the triangle cut from quadrangle Q
    by omitting vertex v; ``f_role[(Q, v)]`` is the orthocentre of that
    triangle's partner in its table row, i.e. the same twenty points indexed
    the second way round (once per perspectrix-line quadruple).  A triangle
    that has collapsed to a line (impossible for valid configurations, reported
    defensively for tampered ones) gets ``None`` and a failure note.
    """

    by_triangle: dict[tuple[str, str, str], Optional[Point]]
    failures: dict[tuple[str, str, str], str]
    h_role: dict[tuple[str, str], Optional[Point]]
    f_role: dict[tuple[str, str], Optional[Point]]
    by_row: dict[str, tuple[Optional[Point], Optional[Point]]]  # vertex -> (H, F)


@dataclass(frozen=True)
class HaggeFigure:
    centre: Point
    circle: Circle


@dataclass(frozen=True)
class PentagonFigures:
    # circle through U, V and J; None only for tampered inputs (collinear/coincident)
    circle: Optional[Circle]
    circle_note: str
    # second meet of the pentagon circle with each initial circle, from J
    meets: dict[str, Optional[Point]]
    meet_notes: dict[str, str]
    tangencies: dict[str, bool]
    z: Optional[Point]
    w: Optional[Point]
    x: Optional[Point]  # antipode of z on circle ABCK
    y: Optional[Point]  # antipode of z on the pentagon circle


@dataclass(frozen=True)
class DerivedFigures:
    orthocentres: OrthocentreFigures
    hagge: dict[str, Optional[HaggeFigure]]
    hagge_notes: dict[str, str]
    pentagon: PentagonFigures


def derive_orthocentres(config: WoodDesarguesConfiguration) -> OrthocentreFigures:
    by_triangle: dict[tuple[str, str, str], Optional[Point]] = {}
    failures: dict[tuple[str, str, str], str] = {}
    h_role: dict[tuple[str, str], Optional[Point]] = {}
    for rec in PERSPECTIVE_TABLE:
        for tri in (rec.triangle1, rec.triangle2):
            try:
                h = orthocentre(*(config.points[v] for v in tri))
            except CollinearPointsError:
                h = None
                failures[tri] = f"triangle {''.join(tri)} is collinear"
            by_triangle[tri] = h
            h_role[TRIANGLE_QUAD[frozenset(tri)]] = h
    f_role = {(quad, vertex): h_role[(PARTNER_QUAD[(quad, vertex)], vertex)]
              for (quad, vertex) in h_role}
    by_row = {rec.vertex: (by_triangle[rec.triangle1], by_triangle[rec.triangle2])
              for rec in PERSPECTIVE_TABLE}
    return OrthocentreFigures(by_triangle=by_triangle, failures=failures,
                              h_role=h_role, f_role=f_role, by_row=by_row)


def derive_hagge_centres(config: WoodDesarguesConfiguration,
                         orthos: OrthocentreFigures) -> tuple[dict[str, Optional[HaggeFigure]], dict[str, str]]:
    """Per table row: circumcenter of (J, H, F) and the circle itself.

    Rows where J, H, F fail to span a circle are marked degenerate and skipped;
    the other rows are unaffected.
    """
    out: dict[str, Optional[HaggeFigure]] = {}
    notes: dict[str, str] = {}
    j = config.j
    for rec in PERSPECTIVE_TABLE:
        h_pt, f_pt = orthos.by_row[rec.vertex]
        if h_pt is None or f_pt is None:
            out[rec.vertex] = None
            notes[rec.vertex] = f"missing orthocentre for row {rec.vertex}"
            continue
        if h_pt == j or f_pt == j or h_pt == f_pt:
            out[rec.vertex] = None
            notes[rec.vertex] = f"coincidence among J, H, F for row {rec.vertex}"
            continue
        try:
            circle = circle_through(j, h_pt, f_pt)
        except CollinearPointsError:
            out[rec.vertex] = None
            notes[rec.vertex] = f"J, H, F collinear for row {rec.vertex}"
            continue
        centre = meet(perpendicular_bisector(j, h_pt), perpendicular_bisector(j, f_pt))
        assert centre == circle.center
        out[rec.vertex] = HaggeFigure(centre=centre, circle=circle)
    return out, notes


def derive_pentagon(config: WoodDesarguesConfiguration) -> PentagonFigures:
    u, v = config.centers["U"], config.centers["V"]
    meets: dict[str, Optional[Point]] = {clbl: None for clbl in CIRCLE_LABELS}
    meet_notes: dict[str, str] = {}
    tangencies: dict[str, bool] = {clbl: False for clbl in CIRCLE_LABELS}
    try:
        pentagon: Optional[Circle] = circle_through(u, v, config.j)
        note = ""
    except (CollinearPointsError, CoincidentPointsError):
        pentagon = None
        note = "U, V, J do not span a circle"

    if pentagon is not None:
        for clbl in CIRCLE_LABELS:
            try:
                other, tangent = second_intersection_of_circles(
                    pentagon, config.circles[clbl], config.j)
            except GeometryError as exc:
                meet_notes[clbl] = f"no second meet with {clbl}: {exc}"
                continue
            meets[clbl] = other
            tangencies[clbl] = tangent

    z = meets["ABCK"]
    w = meets["Aa23"]
    x = config.circles["ABCK"].center.scale(2) - z if z is not None else None
    y = pentagon.center.scale(2) - z if (z is not None and pentagon is not None) else None
    return PentagonFigures(circle=pentagon, circle_note=note, meets=meets,
                           meet_notes=meet_notes, tangencies=tangencies,
                           z=z, w=w, x=x, y=y)


def derive_figures(config: WoodDesarguesConfiguration) -> DerivedFigures:
    orthos = derive_orthocentres(config)
    hagge, hagge_notes = derive_hagge_centres(config, orthos)
    pentagon = derive_pentagon(config)
    return DerivedFigures(orthocentres=orthos, hagge=hagge,
                          hagge_notes=hagge_notes, pentagon=pentagon)
