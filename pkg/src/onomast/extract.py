"""Extract (given names, sex) records for human entities from a truthy dump.

Two passes over the same input:

  pass 1 collects human markers (P31 -> Q5), sex statements (P21 ->
  Q6581097/Q6581072), and given-name links (P735);
  pass 2 collects rdfs:label literals, restricted to the given-name items
  seen in pass 1.

Fact accumulation is a commutative, associative merge of per-chunk maps,
so plain files can be scanned in parallel by byte ranges aligned to line
boundaries; output is deterministic for any worker count. Memory scales
with the number of human entities and given-name items, never with the
triple count.
"""

from __future__ import annotations

import os
import shutil
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import IO, Callable, Iterable, Iterator

from .errors import InputInconsistencyError
from .ntriples import (
    ExtractionStats,
    Literal,
    Triple,
    is_gzip_file,
    open_dump_text,
    parse_nt_stream,
)

WD_ENTITY_PREFIX = "http://www.wikidata.org/entity/"
WD_DIRECT_PREFIX = "http://www.wikidata.org/prop/direct/"
P_INSTANCE_OF = WD_DIRECT_PREFIX + "P31"
P_SEX_OR_GENDER = WD_DIRECT_PREFIX + "P21"
P_GIVEN_NAME = WD_DIRECT_PREFIX + "P735"
Q_HUMAN = WD_ENTITY_PREFIX + "Q5"
Q_MALE = WD_ENTITY_PREFIX + "Q6581097"
Q_FEMALE = WD_ENTITY_PREFIX + "Q6581072"
RDFS_LABEL = "http://www.w3.org/2000/01/rdf-schema#label"

DEFAULT_LABELS_LANG = "en"

# Below this size, chunked multiprocessing costs more than it saves.
_MIN_PARALLEL_BYTES = 4 * 1024 * 1024


class Sex(Enum):
    MALE = "M"
    FEMALE = "F"


@dataclass(frozen=True)
class HumanMarker:
    entity: str


@dataclass(frozen=True)
class GivenNameLink:
    entity: str
    name_item: str


@dataclass(frozen=True)
class SexFact:
    entity: str
    sex: Sex


@dataclass(frozen=True)
class NameLabel:
    name_item: str
    label: str
    lang: str


RelevantFact = HumanMarker | GivenNameLink | SexFact | NameLabel


@dataclass(frozen=True)
class HumanEntityRecord:
    """One human entity with its resolved given-name labels and sex."""

    entity: str
    sex: Sex
    given_names: frozenset[str]


def _qid(iri: str) -> str | None:
    if not iri.startswith(WD_ENTITY_PREFIX):
        return None
    candidate = iri[len(WD_ENTITY_PREFIX):]
    if candidate.startswith("Q") and candidate[1:].isdigit():
        return candidate
    return None


def filter_relevant(triple: Triple) -> RelevantFact | None:
    """Classify a triple into one of the tracked fact kinds, if any.

    Total function: untracked predicates and object values return None.
    Label facts are returned for every entity-subject label; restricting
    them to given-name items is the assembler's job (pass 2).
    """
    pred = triple.predicate
    obj = triple.object
    if pred == P_INSTANCE_OF:
        if obj == Q_HUMAN:
            entity = _qid(triple.subject)
            if entity is not None:
                return HumanMarker(entity)
        return None
    if pred == P_SEX_OR_GENDER:
        if obj == Q_MALE or obj == Q_FEMALE:
            entity = _qid(triple.subject)
            if entity is not None:
                return SexFact(entity, Sex.MALE if obj == Q_MALE else Sex.FEMALE)
        return None
    if pred == P_GIVEN_NAME:
        if isinstance(obj, str):
            entity = _qid(triple.subject)
            name_item = _qid(obj)
            if entity is not None and name_item is not None:
                return GivenNameLink(entity, name_item)
        return None
    if pred == RDFS_LABEL and isinstance(obj, Literal):
        subject = _qid(triple.subject)
        if subject is not None:
            return NameLabel(subject, obj.lexical, obj.lang or "")
    return None


@dataclass
class FactAccumulator:
    """Mergeable pass-1 state: order-independent by construction."""

    humans: set[str] = field(default_factory=set)
    sexes: dict[str, set[Sex]] = field(default_factory=dict)
    name_links: dict[str, set[str]] = field(default_factory=dict)
    facts_seen: int = 0

    def add(self, fact: RelevantFact) -> None:
        self.facts_seen += 1
        if isinstance(fact, HumanMarker):
            self.humans.add(fact.entity)
        elif isinstance(fact, SexFact):
            self.sexes.setdefault(fact.entity, set()).add(fact.sex)
        elif isinstance(fact, GivenNameLink):
            self.name_links.setdefault(fact.entity, set()).add(fact.name_item)
        else:
            raise TypeError(f"pass-1 accumulator got {type(fact).__name__}")

    def merge(self, other: "FactAccumulator") -> None:
        self.humans |= other.humans
        for entity, sexes in other.sexes.items():
            self.sexes.setdefault(entity, set()).update(sexes)
        for entity, items in other.name_links.items():
            self.name_links.setdefault(entity, set()).update(items)
        self.facts_seen += other.facts_seen

    def wanted_name_items(self) -> frozenset[str]:
        """Given-name items linked from human entities (the pass-2 scope)."""
        wanted: set[str] = set()
        for entity in self.humans:
            items = self.name_links.get(entity)
            if items:
                wanted |= items
        return frozenset(wanted)


@dataclass
class LabelAccumulator:
    """Mergeable pass-2 state: label per (name item, language).

    Duplicate labels for one (item, language) pair keep the lexicographically
    smallest string so the merge stays order-independent.
    """

    labels: dict[str, dict[str, str]] = field(default_factory=dict)
    facts_seen: int = 0

    def add(self, fact: NameLabel) -> None:
        self.facts_seen += 1
        per_lang = self.labels.setdefault(fact.name_item, {})
        existing = per_lang.get(fact.lang)
        if existing is None or fact.label < existing:
            per_lang[fact.lang] = fact.label

    def merge(self, other: "LabelAccumulator") -> None:
        for item, per_lang in other.labels.items():
            mine = self.labels.setdefault(item, {})
            for lang, label in per_lang.items():
                existing = mine.get(lang)
                if existing is None or label < existing:
                    mine[lang] = label
        self.facts_seen += other.facts_seen


def choose_label(per_lang: dict[str, str], preferred: str) -> tuple[str, str] | None:
    """Pick one label: preferred language, then 'mul', then smallest tag."""
    if preferred in per_lang:
        return per_lang[preferred], preferred
    if "mul" in per_lang:
        return per_lang["mul"], "mul"
    if not per_lang:
        return None
    lang = min(per_lang)
    return per_lang[lang], lang


def _resolve_records(
    facts: FactAccumulator,
    labels: LabelAccumulator,
    labels_lang: str,
    stats: ExtractionStats,
) -> list[HumanEntityRecord]:
    records = []
    for entity in facts.humans:
        sexes = facts.sexes.get(entity)
        if not sexes:
            continue  # no tracked sex statement: not countable either way
        if len(sexes) > 1:
            stats.entities_dropped_conflicting_sex += 1
            continue
        names = []
        for item in sorted(facts.name_links.get(entity, ())):
            chosen = choose_label(labels.labels.get(item, {}), labels_lang)
            if chosen is not None:
                names.append(chosen)
        if not names:
            stats.entities_dropped_no_label += 1
            continue
        for _, lang in names:
            stats.label_languages[lang] = stats.label_languages.get(lang, 0) + 1
        stats.entities_emitted += 1
        records.append(
            HumanEntityRecord(entity, next(iter(sexes)), frozenset(n for n, _ in names))
        )
    records.sort(key=lambda r: int(r.entity[1:]))
    return records


def assemble_entities(
    reader: Callable[[], Iterable[str]],
    *,
    labels_lang: str = DEFAULT_LABELS_LANG,
    stats: ExtractionStats | None = None,
) -> list[HumanEntityRecord]:
    """Two-pass assembly from a reopenable line source.

    reader() must return a fresh iterable over the same lines on each call;
    it is called exactly twice. Raises InputInconsistencyError when the
    second pass sees a different line count than the first.
    """
    if stats is None:
        stats = ExtractionStats()

    facts = FactAccumulator()
    pass1 = ExtractionStats()
    for triple in parse_nt_stream(reader(), pass1):
        fact = filter_relevant(triple)
        if fact is not None and not isinstance(fact, NameLabel):
            facts.add(fact)

    wanted = facts.wanted_name_items()
    labels = LabelAccumulator()
    pass2 = ExtractionStats()
    for triple in parse_nt_stream(reader(), pass2):
        fact = filter_relevant(triple)
        if isinstance(fact, NameLabel) and fact.name_item in wanted:
            labels.add(fact)

    if pass2.lines_read != pass1.lines_read:
        raise InputInconsistencyError(
            f"input changed between passes: {pass1.lines_read} lines, "
            f"then {pass2.lines_read}"
        )

    stats.lines_read += pass1.lines_read
    stats.lines_skipped_malformed += pass1.lines_skipped_malformed
    stats.triples_matched += facts.facts_seen + labels.facts_seen
    return _resolve_records(facts, labels, labels_lang, stats)


# ---------------------------------------------------------------------------
# Parallel scan over byte ranges of a plain (uncompressed) file.
# ---------------------------------------------------------------------------


def chunk_ranges(size: int, chunks: int) -> list[tuple[int, int]]:
    """Split [0, size) into contiguous byte ranges, one per chunk.

    Ranges are not line-aligned; workers align themselves: a chunk owns
    every line whose first byte falls inside its range.
    """
    if chunks <= 1 or size < _MIN_PARALLEL_BYTES:
        return [(0, size)]
    step = size // chunks
    bounds = [i * step for i in range(chunks)] + [size]
    return [(bounds[i], bounds[i + 1]) for i in range(chunks)]


def _iter_range_lines(fh: IO[bytes], start: int, end: int) -> Iterator[str]:
    fh.seek(start)
    if start > 0:
        fh.readline()  # partial line belongs to the previous chunk
    pos = fh.tell()
    while pos < end:
        line = fh.readline()
        if not line:
            break
        yield line.decode("utf-8", "replace")
        pos = fh.tell()


def _scan_chunk_pass1(
    path: str, start: int, end: int
) -> tuple[FactAccumulator, int, int]:
    facts = FactAccumulator()
    stats = ExtractionStats()
    with open(path, "rb") as fh:
        for triple in parse_nt_stream(_iter_range_lines(fh, start, end), stats):
            fact = filter_relevant(triple)
            if fact is not None and not isinstance(fact, NameLabel):
                facts.add(fact)
    return facts, stats.lines_read, stats.lines_skipped_malformed


def _scan_chunk_pass2(
    path: str, start: int, end: int, wanted: frozenset[str]
) -> tuple[LabelAccumulator, int]:
    labels = LabelAccumulator()
    stats = ExtractionStats()
    with open(path, "rb") as fh:
        for triple in parse_nt_stream(_iter_range_lines(fh, start, end), stats):
            fact = filter_relevant(triple)
            if isinstance(fact, NameLabel) and fact.name_item in wanted:
                labels.add(fact)
    return labels, stats.lines_read


def _extract_parallel(
    path: Path,
    labels_lang: str,
    threads: int,
    stats: ExtractionStats,
) -> list[HumanEntityRecord]:
    size = os.path.getsize(path)
    ranges = chunk_ranges(size, threads)
    facts = FactAccumulator()
    pass1_lines = 0
    with ProcessPoolExecutor(max_workers=min(threads, len(ranges))) as pool:
        futures = [pool.submit(_scan_chunk_pass1, str(path), s, e) for s, e in ranges]
        for fut in futures:
            part, lines, malformed = fut.result()
            facts.merge(part)
            pass1_lines += lines
            stats.lines_skipped_malformed += malformed

        wanted = facts.wanted_name_items()
        labels = LabelAccumulator()
        pass2_lines = 0
        futures = [
            pool.submit(_scan_chunk_pass2, str(path), s, e, wanted) for s, e in ranges
        ]
        for fut in futures:
            part2, lines = fut.result()
            labels.merge(part2)
            pass2_lines += lines

    if pass2_lines != pass1_lines:
        raise InputInconsistencyError(
            f"input changed between passes: {pass1_lines} lines, then {pass2_lines}"
        )
    stats.lines_read += pass1_lines
    stats.triples_matched += facts.facts_seen + labels.facts_seen
    return _resolve_records(facts, labels, labels_lang, stats)


def extract_entities(
    source: str | Path,
    *,
    labels_lang: str = DEFAULT_LABELS_LANG,
    threads: int = 1,
    stats: ExtractionStats | None = None,
) -> list[HumanEntityRecord]:
    """Extract human entity records from a dump file or standard input.

    source "-" spools stdin to a temporary file (the input is read twice).
    Gzip input is detected by magic bytes and always scanned sequentially;
    plain files use `threads` parallel range scanners. Output is identical
    for every thread count.
    """
    if stats is None:
        stats = ExtractionStats()

    spooled: str | None = None
    try:
        if str(source) == "-":
            fd, spooled = tempfile.mkstemp(prefix="onomast-dump-", suffix=".nt")
            with os.fdopen(fd, "wb") as tmp:
                shutil.copyfileobj(sys.stdin.buffer, tmp)
            path = Path(spooled)
        else:
            path = Path(source)

        if threads > 1 and not is_gzip_file(path):
            return _extract_parallel(path, labels_lang, threads, stats)

        def reader() -> Iterable[str]:
            return open_dump_text(path)

        return assemble_entities(reader, labels_lang=labels_lang, stats=stats)
    finally:
        if spooled is not None:
            os.unlink(spooled)


# ---------------------------------------------------------------------------
# Entity TSV: qid <TAB> sex(M|F) <TAB> name1;name2;...
# ---------------------------------------------------------------------------

_NAME_ESCAPES = {"\\": "\\\\", ";": "\\;", "\t": "\\t", "\n": "\\n", "\r": "\\r"}


def _escape_name(name: str) -> str:
    if not any(ch in name for ch in _NAME_ESCAPES):
        return name
    return "".join(_NAME_ESCAPES.get(ch, ch) for ch in name)


def _split_names(joined: str) -> list[str]:
    names: list[str] = []
    current: list[str] = []
    i = 0
    while i < len(joined):
        ch = joined[i]
        if ch == "\\" and i + 1 < len(joined):
            nxt = joined[i + 1]
            current.append({"t": "\t", "n": "\n", "r": "\r"}.get(nxt, nxt))
            i += 2
        elif ch == ";":
            names.append("".join(current))
            current = []
            i += 1
        else:
            current.append(ch)
            i += 1
    names.append("".join(current))
    return names


def write_entities_tsv(records: Iterable[HumanEntityRecord], out: IO[str]) -> None:
    """Persist records, one line each, names sorted and ';'-joined.

    Names containing ';', tab, newline, or backslash are backslash-escaped
    so a read-back reproduces the exact label strings.
    """
    for record in records:
        names = ";".join(_escape_name(n) for n in sorted(record.given_names))
        out.write(f"{record.entity}\t{record.sex.value}\t{names}\n")


def read_entities_tsv(lines: Iterable[str]) -> Iterator[HumanEntityRecord]:
    from .errors import FormatError

    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3 or parts[1] not in ("M", "F") or not parts[2]:
            raise FormatError(f"entities TSV line {lineno}: bad record")
        entity, sex_code, joined = parts
        if not (entity.startswith("Q") and entity[1:].isdigit()):
            raise FormatError(f"entities TSV line {lineno}: bad QID {entity!r}")
        yield HumanEntityRecord(
            entity,
            Sex.MALE if sex_code == "M" else Sex.FEMALE,
            frozenset(_split_names(joined)),
        )


def format_stats_summary(stats: ExtractionStats) -> str:
    lines = [
        f"lines read:                 {stats.lines_read}",
        f"malformed lines skipped:    {stats.lines_skipped_malformed}",
        f"triples matched:            {stats.triples_matched}",
        f"entities emitted:           {stats.entities_emitted}",
        f"dropped (no name label):    {stats.entities_dropped_no_label}",
        f"dropped (conflicting sex):  {stats.entities_dropped_conflicting_sex}",
    ]
    if stats.label_languages:
        langs = ", ".join(
            f"{lang or '(none)'}={n}"
            for lang, n in sorted(stats.label_languages.items())
        )
        lines.append(f"label languages:            {langs}")
    return "\n".join(lines)
