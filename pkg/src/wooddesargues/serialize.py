"""Exact text formats: seed strings, configuration documents, reports.

Rationals travel as canonical strings ``p/q`` with q > 0 (never floats), so
documents are exact and diff-stable.  Configuration documents carry the base
points, J, the five circles and the centres plus the seed echo; derived
figures are always recomputed on load.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Union

from .configuration import (
    CENTER_LABELS,
    CIRCLE_LABELS,
    POINT_LABELS,
    ConfigurationSeed,
    WoodDesarguesConfiguration,
)
from .kernel import INFINITY, Circle, Point, _Infinity
from .verifier import VerificationReport

SEED_KEYS = ("tJ", "tK", "tA", "tB", "tC", "s")

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


class FormatError(ValueError):
    """Malformed seed text or document (CLI exit code 3 territory)."""


def format_scalar(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise FormatError(f"not a rational literal: {text!r}")
    return Fraction(text)


def format_parameter(value: Union[Fraction, _Infinity]) -> str:
    return "inf" if isinstance(value, _Infinity) else format_scalar(value)


def parse_parameter(text: str) -> Union[Fraction, _Infinity]:
    if text == "inf":
        return INFINITY
    return parse_scalar(text)


def format_point(p: Point) -> list[str]:
    return [format_scalar(p.x), format_scalar(p.y)]


def parse_point(value) -> Point:
    if not isinstance(value, list) or len(value) != 2:
        raise FormatError(f"point must be a [x, y] pair: {value!r}")
    return Point(parse_scalar(value[0]), parse_scalar(value[1]))


# ---------------------------------------------------------------------------
# seed text


def parse_seed_text(text: str) -> ConfigurationSeed:
    """Parse ``tJ=..,tK=..,tA=..,tB=..,tC=..,s=..`` with rational or inf values."""
    fields: dict[str, str] = {}
    for part in text.split(","):
        if "=" not in part:
            raise FormatError(f"expected key=value, got {part!r}")
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in SEED_KEYS:
            raise FormatError(f"unknown seed key {key!r}")
        if key in fields:
            raise FormatError(f"seed key {key!r} given twice")
        fields[key] = value.strip()
    missing = [k for k in SEED_KEYS if k not in fields]
    if missing:
        raise FormatError(f"missing seed keys: {', '.join(missing)}")
    if fields["s"] == "inf":
        raise FormatError("the offset s must be rational, not inf")
    return ConfigurationSeed(
        t_j=parse_parameter(fields["tJ"]),
        t_k=parse_parameter(fields["tK"]),
        t_a=parse_parameter(fields["tA"]),
        t_b=parse_parameter(fields["tB"]),
        t_c=parse_parameter(fields["tC"]),
        s=parse_scalar(fields["s"]),
    )


def format_seed_text(seed: ConfigurationSeed) -> str:
    d = seed.as_dict()
    return ",".join(f"{k}={format_parameter(d[k])}" for k in SEED_KEYS)


def seed_to_dict(seed: ConfigurationSeed) -> dict[str, str]:
    d = seed.as_dict()
    return {k: format_parameter(d[k]) for k in SEED_KEYS}


def seed_from_dict(value) -> ConfigurationSeed:
    if not isinstance(value, dict):
        raise FormatError("seed must be an object")
    missing = [k for k in SEED_KEYS if k not in value]
    if missing:
        raise FormatError(f"seed missing keys: {', '.join(missing)}")
    if value["s"] == "inf":
        raise FormatError("the offset s must be rational, not inf")
    return ConfigurationSeed(
        t_j=parse_parameter(value["tJ"]),
        t_k=parse_parameter(value["tK"]),
        t_a=parse_parameter(value["tA"]),
        t_b=parse_parameter(value["tB"]),
        t_c=parse_parameter(value["tC"]),
        s=parse_scalar(value["s"]),
    )


# ---------------------------------------------------------------------------
# configuration documents


def configuration_to_document(config: WoodDesarguesConfiguration) -> dict:
    doc = {
        "seed": seed_to_dict(config.seed) if config.seed is not None else None,
        "points": {lbl: format_point(config.points[lbl]) for lbl in POINT_LABELS},
        "j": format_point(config.j),
        "circles": {
            lbl: {
                "center": format_point(config.circles[lbl].center),
                "radiusSquared": format_scalar(config.circles[lbl].radius_squared),
            }
            for lbl in CIRCLE_LABELS
        },
        "centers": {lbl: format_point(config.centers[lbl]) for lbl in CENTER_LABELS},
    }
    return doc


def configuration_from_document(doc) -> WoodDesarguesConfiguration:
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    for key in ("points", "j", "circles", "centers"):
        if key not in doc:
            raise FormatError(f"document missing field {key!r}")

    points_doc = doc["points"]
    if not isinstance(points_doc, dict):
        raise FormatError("points must be an object")
    extra = set(points_doc) - set(POINT_LABELS)
    if extra:
        raise FormatError(f"unknown point labels: {sorted(extra)}")
    points = {}
    for lbl in POINT_LABELS:
        if lbl not in points_doc:
            raise FormatError(f"missing point {lbl!r}")
        points[lbl] = parse_point(points_doc[lbl])

    j = parse_point(doc["j"])

    circles_doc = doc["circles"]
    if not isinstance(circles_doc, dict):
        raise FormatError("circles must be an object")
    circles = {}
    for lbl in CIRCLE_LABELS:
        if lbl not in circles_doc:
            raise FormatError(f"missing circle {lbl!r}")
        entry = circles_doc[lbl]
        if not isinstance(entry, dict) or "center" not in entry or "radiusSquared" not in entry:
            raise FormatError(f"circle {lbl!r} needs center and radiusSquared")
        r2 = parse_scalar(entry["radiusSquared"])
        if r2 <= 0:
            raise FormatError(f"circle {lbl!r} needs radiusSquared > 0")
        circles[lbl] = Circle(parse_point(entry["center"]), r2)

    centers_doc = doc["centers"]
    if not isinstance(centers_doc, dict):
        raise FormatError("centers must be an object")
    centers = {}
    for lbl in CENTER_LABELS:
        if lbl not in centers_doc:
            raise FormatError(f"missing center {lbl!r}")
        centers[lbl] = parse_point(centers_doc[lbl])

    seed = seed_from_dict(doc["seed"]) if doc.get("seed") is not None else None
    return WoodDesarguesConfiguration(points=points, j=j, circles=circles,
                                      centers=centers, seed=seed)


# ---------------------------------------------------------------------------
# reports


def report_to_document(report: VerificationReport) -> dict:
    return {
        "seed": seed_to_dict(report.seed) if report.seed is not None else None,
        "metadata": {k: v for k, v in report.metadata},
        "results": [
            {
                "name": r.name,
                "status": r.status,
                "witnesses": [[label, value] for label, value in r.witnesses],
                "notes": r.notes,
            }
            for r in report.results
        ],
        "summary": report.summary,
    }


def dumps(obj) -> str:
    """Deterministic JSON rendering with a trailing newline."""
    return json.dumps(obj, indent=2) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
