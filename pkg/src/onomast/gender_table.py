"""Per-name male/female frequency table and the genderedness score.

The score of a name is male / (male + female) kept as an exact
fractions.Fraction: downstream aggregation groups by distinct score value,
and float keys would split 1/3 from 0.333... or merge values that differ
past the 53rd bit. Floats appear only at emission time.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import IO, Iterable, Iterator, Mapping

from .errors import ContractViolationError, FormatError
from .extract import HumanEntityRecord, Sex
from .normalize import DEFAULT_INITIALS_MAX_LEN, clean

Genderedness = Fraction

TABLE_FORMAT_VERSION = 1


@dataclass(frozen=True)
class SexCounts:
    """How many male and female entities bear one normalized name."""

    male: int = 0
    female: int = 0

    @property
    def total(self) -> int:
        return self.male + self.female

    def __add__(self, other: "SexCounts") -> "SexCounts":
        return SexCounts(self.male + other.male, self.female + other.female)


def score(counts: SexCounts) -> Genderedness:
    """male / (male + female) as a reduced fraction in [0, 1]."""
    if counts.total < 1:
        raise ContractViolationError("genderedness needs at least one entity")
    return Fraction(counts.male, counts.total)


@dataclass
class TableBuildStats:
    entities_seen: int = 0
    names_counted: int = 0
    names_skipped_empty: int = 0


@dataclass
class GenderTable:
    """Immutable-by-convention map of clean name -> SexCounts plus provenance."""

    counts: dict[str, SexCounts] = field(default_factory=dict)
    meta: dict[str, str] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.counts)

    def lookup(self, name: str) -> SexCounts | None:
        return self.counts.get(name)

    def save(self, out: IO[str]) -> None:
        meta = dict(self.meta)
        meta.setdefault("entities", "0")
        meta["names"] = str(len(self.counts))
        out.write(f"# format_version: {TABLE_FORMAT_VERSION}\n")
        for key in sorted(meta):
            out.write(f"# {key}: {meta[key]}\n")
        for name in sorted(self.counts):
            sc = self.counts[name]
            out.write(f"{name}\t{sc.male}\t{sc.female}\n")

    def save_path(self, path: str | Path) -> None:
        buf = io.StringIO()
        self.save(buf)
        Path(path).write_text(buf.getvalue(), encoding="utf-8")

    @classmethod
    def load(cls, lines: Iterable[str]) -> "GenderTable":
        counts: dict[str, SexCounts] = {}
        meta: dict[str, str] = {}
        for lineno, line in enumerate(lines, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if ":" in body:
                    key, _, value = body.partition(":")
                    meta[key.strip()] = value.strip()
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise FormatError(f"gender table line {lineno}: expected 3 columns")
            name, male_s, female_s = parts
            try:
                male, female = int(male_s), int(female_s)
            except ValueError as exc:
                raise FormatError(f"gender table line {lineno}: bad count") from exc
            if male < 0 or female < 0 or male + female < 1:
                raise FormatError(f"gender table line {lineno}: bad totals")
            if name in counts:
                raise FormatError(f"gender table line {lineno}: duplicate {name!r}")
            counts[name] = SexCounts(male, female)
        meta.pop("format_version", None)
        meta.pop("names", None)
        return cls(counts, meta)

    @classmethod
    def load_path(cls, path: str | Path) -> "GenderTable":
        with open(path, encoding="utf-8") as fh:
            return cls.load(fh)


def accumulate(
    records: Iterable[HumanEntityRecord],
    *,
    initials_max_len: int = DEFAULT_INITIALS_MAX_LEN,
    meta: Mapping[str, str] | None = None,
    stats: TableBuildStats | None = None,
) -> GenderTable:
    """Build a GenderTable from entity records.

    Each entity contributes +1 to the male or female counter of every
    *distinct cleaned* given name it bears; raw spellings of one entity
    that clean to the same string count once. Names cleaning to nothing
    are skipped and tallied.
    """
    if stats is None:
        stats = TableBuildStats()
    counts: dict[str, list[int]] = {}
    for record in records:
        stats.entities_seen += 1
        cleaned: set[str] = set()
        for raw in record.given_names:
            cn = clean(raw, initials_max_len=initials_max_len)
            if cn is None:
                stats.names_skipped_empty += 1
            else:
                cleaned.add(cn.text)
        idx = 0 if record.sex is Sex.MALE else 1
        for name in cleaned:
            pair = counts.setdefault(name, [0, 0])
            pair[idx] += 1
            stats.names_counted += 1
    table_meta = dict(meta) if meta else {}
    table_meta.setdefault("entities", str(stats.entities_seen))
    return GenderTable(
        {name: SexCounts(m, f) for name, (m, f) in counts.items()}, table_meta
    )


def merge_tables(left: GenderTable, right: GenderTable) -> GenderTable:
    """Sum per-name counts; provenance values are concatenated on conflict."""
    counts = dict(left.counts)
    for name, sc in right.counts.items():
        existing = counts.get(name)
        counts[name] = sc if existing is None else existing + sc
    meta = dict(left.meta)
    for key, value in right.meta.items():
        if key == "entities":
            meta[key] = str(int(meta.get(key, "0")) + int(value))
        elif key in meta and meta[key] != value:
            meta[key] = f"{meta[key]};{value}"
        else:
            meta.setdefault(key, value)
    return GenderTable(counts, meta)


def iter_scores(table: GenderTable) -> Iterator[tuple[str, SexCounts, Genderedness]]:
    for name in sorted(table.counts):
        sc = table.counts[name]
        yield name, sc, score(sc)
