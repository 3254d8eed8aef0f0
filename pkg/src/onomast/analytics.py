"""Distribution statistics over per-role genderedness datasets.

All shares are exact rationals end to end; floats appear only in emitted
files (12 significant digits). The optional plot-axis rescaling maps
x -> arcsin(sqrt(x)) / (pi/2) so the [0, 1] range is preserved, and
y -> sqrt(y); it affects emitted plot data only, never the statistics.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Mapping, Sequence

from .errors import ContractViolationError
from .gender_table import GenderTable, score
from .merge import RoleDataset

ANALYSIS_FORMAT_VERSION = 1

MEASURES = ("types", "tokens", "articles", "citations")

MASCULINE_POLE_THRESHOLD = Fraction(9999, 10000)

DEFAULT_ALPHA = Fraction(1, 200)


@dataclass(frozen=True)
class SpectrumPoint:
    """Aggregates at one distinct genderedness value."""

    g: Fraction
    types: int
    tokens: int
    articles: int
    citations: int


def as_fraction(value: Fraction | str | float | int) -> Fraction:
    """Exact conversion; floats go through their shortest decimal repr so
    0.005 means 1/200, not the nearest binary fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def spectrum(dataset: RoleDataset) -> list[SpectrumPoint]:
    """One point per distinct exact score, sorted ascending by fraction."""
    return [
        SpectrumPoint(
            g,
            len(dataset[g].names),
            dataset[g].tokens,
            dataset[g].articles,
            dataset[g].citations,
        )
        for g in sorted(dataset)
    ]


def points_from_rows(rows: Iterable[tuple]) -> list[SpectrumPoint]:
    """Adapt merged-TSV rows (g, types, tokens, articles, citations)."""
    return [SpectrumPoint(*row) for row in rows]


def table_spectrum(table: GenderTable) -> list[SpectrumPoint]:
    """Spectrum of the gender table itself.

    types counts distinct names per score; tokens counts (entity, name)
    pairs, i.e. the male+female totals (an entity bearing two names is
    counted under both). articles and citations do not apply and are 0.
    """
    by_g: dict[Fraction, list[int]] = {}
    for counts in table.counts.values():
        g = score(counts)
        cell = by_g.setdefault(g, [0, 0])
        cell[0] += 1
        cell[1] += counts.total
    return [
        SpectrumPoint(g, by_g[g][0], by_g[g][1], 0, 0) for g in sorted(by_g)
    ]


def _measure_values(points: Sequence[SpectrumPoint], measure: str) -> list[int]:
    if measure not in MEASURES:
        raise ContractViolationError(f"unknown measure {measure!r}")
    return [getattr(p, measure) for p in points]


def cumulative_share(
    points: Sequence[SpectrumPoint], measure: str
) -> list[tuple[Fraction, Fraction]]:
    """Running share of a measure along the spectrum; ends at exactly 1."""
    values = _measure_values(points, measure)
    total = sum(values)
    if total <= 0:
        raise ContractViolationError(f"total of {measure} must be positive")
    out = []
    running = 0
    for point, value in zip(points, values):
        running += value
        out.append((point.g, Fraction(running, total)))
    return out


def cumulative_difference(
    points: "Sequence[SpectrumPoint] | RoleDataset",
) -> list[tuple[Fraction, Fraction]]:
    """Cumulative citation share minus cumulative article share per point.

    Exact rational arithmetic makes the value at the last point 0 exactly,
    and identically 0 when citations are pointwise proportional to articles.
    """
    if isinstance(points, dict):
        points = spectrum(points)
    cit = cumulative_share(points, "citations")
    art = cumulative_share(points, "articles")
    return [(g, c - a) for (g, c), (_, a) in zip(cit, art)]


def top_share(
    points: Sequence[SpectrumPoint],
    measure: str,
    alpha: Fraction | str | float,
) -> Fraction:
    """Share of a measure held by scores strictly below alpha or strictly
    above 1 - alpha."""
    a = as_fraction(alpha)
    if not Fraction(0) < a < Fraction(1, 2):
        raise ContractViolationError(f"alpha must be in (0, 1/2), got {a}")
    values = _measure_values(points, measure)
    total = sum(values)
    if total <= 0:
        raise ContractViolationError(f"total of {measure} must be positive")
    upper = 1 - a
    qualifying = sum(
        value for point, value in zip(points, values) if point.g < a or point.g > upper
    )
    return Fraction(qualifying, total)


def transform_axes(
    series: Iterable[tuple[float | Fraction, float | Fraction]],
) -> list[tuple[float, float]]:
    """Rescale plot coordinates: x via normalized arcsine-sqrt, y via sqrt."""
    out = []
    for x, y in series:
        xf, yf = float(x), float(y)
        if not 0.0 <= xf <= 1.0:
            raise ContractViolationError(f"x out of [0, 1]: {xf}")
        if yf < 0.0:
            raise ContractViolationError(f"y negative: {yf}")
        out.append((math.asin(math.sqrt(xf)) / (math.pi / 2), math.sqrt(yf)))
    return out


def fmt_float(value: float | Fraction) -> str:
    return format(float(value), ".12g")


def report(
    role_points: Mapping[str, "Sequence[SpectrumPoint] | RoleDataset"],
    *,
    alpha: Fraction | str | float = DEFAULT_ALPHA,
    table_points: Sequence[SpectrumPoint] | None = None,
) -> dict:
    """Summary record across roles.

    Per role: totals, the share of types/tokens/articles held by the most
    gendered scores (below alpha / above 1 - alpha), the share of types at
    or above the near-masculine-pole threshold, and the extrema of the
    cumulative citation-article difference. When a gender-table spectrum
    is supplied, the same type/token concentration figures are reported
    for it, with tokens labeled as entity-name pairs.
    """
    a = as_fraction(alpha)
    if not role_points:
        raise ContractViolationError("report needs at least one dataset")
    roles: dict[str, dict] = {}
    for name, points in sorted(role_points.items()):
        if isinstance(points, dict):
            points = spectrum(points)
        if not points:
            raise ContractViolationError(f"dataset {name!r} is empty")
        totals = {m: sum(_measure_values(points, m)) for m in MEASURES}
        diff = [d for _, d in cumulative_difference(points)]
        pole_types = sum(
            p.types for p in points if p.g >= MASCULINE_POLE_THRESHOLD
        )
        roles[name] = {
            "totals": totals,
            "top_gendered_share": {
                "types": fmt_float(top_share(points, "types", a)),
                "tokens": fmt_float(top_share(points, "tokens", a)),
                "articles": fmt_float(top_share(points, "articles", a)),
            },
            "masculine_pole_type_share": fmt_float(
                Fraction(pole_types, totals["types"])
            ),
            "difference_min": fmt_float(min(diff)),
            "difference_max": fmt_float(max(diff)),
        }
    summary: dict = {
        "format_version": ANALYSIS_FORMAT_VERSION,
        "alpha": f"{a.numerator}/{a.denominator}",
        "masculine_pole_threshold": (
            f"{MASCULINE_POLE_THRESHOLD.numerator}/"
            f"{MASCULINE_POLE_THRESHOLD.denominator}"
        ),
        "roles": roles,
    }
    if table_points is not None and table_points:
        type_total = sum(p.types for p in table_points)
        pair_total = sum(p.tokens for p in table_points)
        pole_types = sum(
            p.types for p in table_points if p.g >= MASCULINE_POLE_THRESHOLD
        )
        summary["wikidata"] = {
            "token_counting": "entity_name_pairs",
            "totals": {"types": type_total, "entity_name_pairs": pair_total},
            "top_gendered_share": {
                "types": fmt_float(top_share(table_points, "types", a)),
                "tokens": fmt_float(top_share(table_points, "tokens", a)),
            },
            "masculine_pole_type_share": fmt_float(
                Fraction(pole_types, type_total)
            ),
        }
    return summary


ANALYSIS_COLUMNS = (
    "g_float",
    "g_transformed",
    "types",
    "tokens",
    "citations",
    "cum_type_share",
    "cum_token_share",
    "cum_citation_share",
    "D",
)


def write_analysis_tsv(
    points: Sequence[SpectrumPoint],
    role_name: str,
    out: IO[str],
    *,
    transform: str = "paper",
) -> None:
    """Per-role emission: raw counts, cumulative shares, and D per point.

    An empty dataset produces a header-only file (shares are undefined
    without data, so there are no rows to write).
    """
    if transform not in ("none", "paper"):
        raise ContractViolationError(f"unknown transform {transform!r}")
    out.write(f"# format_version: {ANALYSIS_FORMAT_VERSION}\n")
    out.write(f"# role: {role_name}\n")
    out.write(f"# transform: {transform}\n")
    out.write("\t".join(ANALYSIS_COLUMNS) + "\n")
    if not points:
        return
    cum_types = cumulative_share(points, "types")
    cum_tokens = cumulative_share(points, "tokens")
    cum_citations = cumulative_share(points, "citations")
    diff = cumulative_difference(points)
    if transform == "paper":
        xs = [x for x, _ in transform_axes((p.g, 0) for p in points)]
    else:
        xs = [float(p.g) for p in points]
    for i, p in enumerate(points):
        row = (
            fmt_float(p.g),
            fmt_float(xs[i]),
            str(p.types),
            str(p.tokens),
            str(p.citations),
            fmt_float(cum_types[i][1]),
            fmt_float(cum_tokens[i][1]),
            fmt_float(cum_citations[i][1]),
            fmt_float(diff[i][1]),
        )
        out.write("\t".join(row) + "\n")


def write_summary_json(summary: dict, out: IO[str]) -> None:
    json.dump(summary, out, indent=2, sort_keys=True)
    out.write("\n")
