"""Authorship ingestion and the two-step genderedness merge.

Input is the documented authorship CSV (article_id, role, first_name,
citations, year). Articles without an explicit corresponding author get
one derived from their single author, or failing that from their first
author(s). Scores attach through two lookups against the gender table:
the full cleaned name always, plus the first token for compound names
(bibliographic sources often append middle names to the first-name
field); counts from the successful lookups are summed.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence

from .errors import ContractViolationError, FormatError
from .gender_table import GenderTable, Genderedness, SexCounts, score
from .normalize import DEFAULT_INITIALS_MAX_LEN, CleanName, clean, first_token

MERGED_FORMAT_VERSION = 1

AUTHORS_COLUMNS = ("article_id", "role", "first_name", "citations", "year")


class Role(Enum):
    SINGLE = "single"
    FIRST = "first"
    MIDDLE = "middle"
    LAST = "last"
    CORRESPONDING = "corresponding"

    @classmethod
    def parse(cls, text: str) -> "Role":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown role {text!r}") from None


ALL_ROLES = tuple(Role)


@dataclass(frozen=True)
class AuthorshipRecord:
    article_id: str
    role: Role
    raw_first_name: str
    citations: int
    year: int | None = None


@dataclass(frozen=True)
class ScoredAuthorship:
    record: AuthorshipRecord
    clean_name: CleanName
    sex_counts: SexCounts
    genderedness: Genderedness


@dataclass
class IngestStats:
    rows_read: int = 0
    rows_skipped_invalid: int = 0
    rows_filtered_year: int = 0
    records: int = 0


@dataclass
class MergeStats:
    records_seen: int = 0
    dropped_empty_name: int = 0
    dropped_unmatched: int = 0
    scored: int = 0


def _parse_row(
    row: dict[str, str], citations_by_article: dict[str, int]
) -> AuthorshipRecord:
    article_id = (row.get("article_id") or "").strip()
    if not article_id:
        raise ValueError("empty article_id")
    role = Role.parse(row.get("role") or "")
    raw_name = row.get("first_name") or ""
    if not raw_name.strip():
        raise ValueError("empty first_name")
    citations_text = (row.get("citations") or "").strip()
    if not citations_text.isdigit():
        raise ValueError(f"bad citations {citations_text!r}")
    citations = int(citations_text)
    known = citations_by_article.setdefault(article_id, citations)
    if known != citations:
        raise ValueError(
            f"citations {citations} contradict {known} for article {article_id}"
        )
    year_text = (row.get("year") or "").strip()
    year: int | None = None
    if year_text:
        try:
            year = int(year_text)
        except ValueError:
            raise ValueError(f"bad year {year_text!r}") from None
    return AuthorshipRecord(article_id, role, raw_name, citations, year)


def ingest(
    source: IO[str] | Iterable[str],
    *,
    year_range: tuple[int, int] | None = None,
    stats: IngestStats | None = None,
) -> list[AuthorshipRecord]:
    """Read the authorship CSV. Invalid rows are skipped and counted.

    A missing required column is a fatal FormatError. With a year filter
    configured, rows without a year are filtered too (membership cannot
    be established).
    """
    if stats is None:
        stats = IngestStats()
    if year_range is not None and year_range[0] > year_range[1]:
        raise ContractViolationError(f"year range not ordered: {year_range}")
    reader = csv.DictReader(source)
    header = reader.fieldnames
    if header is None:
        return []
    missing = [col for col in AUTHORS_COLUMNS if col not in header]
    if missing:
        raise FormatError(f"authors CSV missing column(s): {', '.join(missing)}")
    records: list[AuthorshipRecord] = []
    citations_by_article: dict[str, int] = {}
    for row in reader:
        stats.rows_read += 1
        try:
            record = _parse_row(row, citations_by_article)
        except ValueError:
            stats.rows_skipped_invalid += 1
            continue
        if year_range is not None and (
            record.year is None or not year_range[0] <= record.year <= year_range[1]
        ):
            stats.rows_filtered_year += 1
            continue
        records.append(record)
        stats.records += 1
    return records


def ingest_path(
    path: str | Path,
    *,
    year_range: tuple[int, int] | None = None,
    stats: IngestStats | None = None,
) -> list[AuthorshipRecord]:
    with open(path, encoding="utf-8", newline="") as fh:
        return ingest(fh, year_range=year_range, stats=stats)


def derive_corresponding(
    records: Sequence[AuthorshipRecord],
) -> list[AuthorshipRecord]:
    """Apply the corresponding-author default.

    Articles with an explicit corresponding record pass through unchanged.
    Otherwise every single-author record gets a corresponding duplicate,
    or, when there is no single author, every first-author record does.
    Input records are never removed or reordered; duplicates are appended,
    grouped by article in first-appearance order.
    """
    has_corresponding: set[str] = set()
    singles: dict[str, list[AuthorshipRecord]] = {}
    firsts: dict[str, list[AuthorshipRecord]] = {}
    article_order: list[str] = []
    seen_articles: set[str] = set()
    for record in records:
        if record.article_id not in seen_articles:
            seen_articles.add(record.article_id)
            article_order.append(record.article_id)
        if record.role is Role.CORRESPONDING:
            has_corresponding.add(record.article_id)
        elif record.role is Role.SINGLE:
            singles.setdefault(record.article_id, []).append(record)
        elif record.role is Role.FIRST:
            firsts.setdefault(record.article_id, []).append(record)

    out = list(records)
    for article_id in article_order:
        if article_id in has_corresponding:
            continue
        for source in singles.get(article_id) or firsts.get(article_id) or ():
            out.append(
                AuthorshipRecord(
                    source.article_id,
                    Role.CORRESPONDING,
                    source.raw_first_name,
                    source.citations,
                    source.year,
                )
            )
    return out


def _summed_counts(name: CleanName, table: GenderTable) -> SexCounts | None:
    """Two-step lookup: full clean name, plus first token for compound names."""
    total: SexCounts | None = table.lookup(name.text)
    if len(name.tokens) >= 2:
        head = table.lookup(first_token(name))
        if head is not None:
            total = head if total is None else total + head
    return total


def attach_genderedness(
    record: AuthorshipRecord,
    table: GenderTable,
    *,
    initials_max_len: int = DEFAULT_INITIALS_MAX_LEN,
) -> ScoredAuthorship | None:
    """Score one record; None when the name cleans to nothing or misses."""
    cn = clean(record.raw_first_name, initials_max_len=initials_max_len)
    if cn is None:
        return None
    counts = _summed_counts(cn, table)
    if counts is None:
        return None
    return ScoredAuthorship(record, cn, counts, score(counts))


def score_records(
    records: Iterable[AuthorshipRecord],
    table: GenderTable,
    *,
    initials_max_len: int = DEFAULT_INITIALS_MAX_LEN,
    stats: MergeStats | None = None,
) -> list[ScoredAuthorship]:
    """attach_genderedness over a record stream, with drop accounting."""
    if stats is None:
        stats = MergeStats()
    scored: list[ScoredAuthorship] = []
    for record in records:
        stats.records_seen += 1
        cn = clean(record.raw_first_name, initials_max_len=initials_max_len)
        if cn is None:
            stats.dropped_empty_name += 1
            continue
        counts = _summed_counts(cn, table)
        if counts is None:
            stats.dropped_unmatched += 1
            continue
        stats.scored += 1
        scored.append(ScoredAuthorship(record, cn, counts, score(counts)))
    return scored


@dataclass
class RoleAggregate:
    """Per-genderedness-value aggregate for one role."""

    names: set[str] = field(default_factory=set)
    tokens: int = 0
    articles: int = 0
    citations: int = 0


RoleDataset = dict[Fraction, RoleAggregate]


def build_role_dataset(
    scored: Iterable[ScoredAuthorship], role: Role
) -> RoleDataset:
    """Aggregate records of one role by exact genderedness value.

    One authorship occurrence is one token and one article occurrence for
    its name-role pair; citations sum the per-record article counts.
    """
    dataset: RoleDataset = {}
    for item in scored:
        if item.record.role is not role:
            continue
        agg = dataset.setdefault(item.genderedness, RoleAggregate())
        agg.names.add(item.clean_name.text)
        agg.tokens += 1
        agg.articles += 1
        agg.citations += item.record.citations
    return dataset


# ---------------------------------------------------------------------------
# Merged per-role TSV (interchange with the analyze stage).
# ---------------------------------------------------------------------------

MERGED_COLUMNS = (
    "genderedness_num",
    "genderedness_den",
    "types",
    "tokens",
    "articles",
    "citations",
)


def write_merged_tsv(dataset: RoleDataset, role: Role, out: IO[str]) -> None:
    out.write(f"# format_version: {MERGED_FORMAT_VERSION}\n")
    out.write(f"# role: {role.value}\n")
    out.write("\t".join(MERGED_COLUMNS) + "\n")
    for g in sorted(dataset):
        agg = dataset[g]
        out.write(
            f"{g.numerator}\t{g.denominator}\t{len(agg.names)}\t"
            f"{agg.tokens}\t{agg.articles}\t{agg.citations}\n"
        )


def read_merged_tsv(lines: Iterable[str]) -> tuple[Role | None, list[tuple]]:
    """Read a merged TSV; returns (role, rows) with exact-fraction g values.

    Rows are (g, types, tokens, articles, citations) sorted ascending.
    """
    role: Role | None = None
    rows: list[tuple] = []
    saw_header_row = False
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\n")
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("role:"):
                role = Role.parse(body.partition(":")[2])
            continue
        parts = line.split("\t")
        if not saw_header_row:
            if tuple(parts) != MERGED_COLUMNS:
                raise FormatError(f"merged TSV line {lineno}: bad column header")
            saw_header_row = True
            continue
        if len(parts) != 6:
            raise FormatError(f"merged TSV line {lineno}: expected 6 columns")
        try:
            num, den, types, tokens, articles, citations = (int(p) for p in parts)
        except ValueError as exc:
            raise FormatError(f"merged TSV line {lineno}: bad integer") from exc
        if den <= 0:
            raise FormatError(f"merged TSV line {lineno}: bad denominator")
        g = Fraction(num, den)
        if rows and g <= rows[-1][0]:
            raise FormatError(f"merged TSV line {lineno}: rows not sorted by g")
        rows.append((g, types, tokens, articles, citations))
    return role, rows
