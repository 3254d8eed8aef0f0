"""Streaming line parser for the N-Triples serialization.

Supports the subset of the grammar that Wikidata truthy dumps use: IRI
subjects and predicates, IRI or literal objects (language tag or datatype
suffix), comment lines, and blank lines. Anything else (blank nodes,
stray syntax) counts as a malformed line: it is skipped and tallied, never
aborts the stream. Memory use is bounded by the longest line, so files far
larger than RAM stream fine.
"""

from __future__ import annotations

import gzip
import io
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator, NamedTuple


class NTSyntaxError(ValueError):
    """A single line does not parse under the supported grammar subset."""


class Literal(NamedTuple):
    """An RDF literal: lexical form plus optional language tag or datatype.

    NamedTuple rather than dataclass: these are constructed once per parsed
    line, millions of times per dump scan.
    """

    lexical: str
    lang: str | None = None
    datatype: str | None = None


class Triple(NamedTuple):
    subject: str
    predicate: str
    object: "str | Literal"


@dataclass
class ExtractionStats:
    """Counters reported by the parse and entity-assembly stages."""

    lines_read: int = 0
    lines_skipped_malformed: int = 0
    triples_matched: int = 0
    entities_emitted: int = 0
    entities_dropped_no_label: int = 0
    entities_dropped_conflicting_sex: int = 0
    label_languages: dict[str, int] = field(default_factory=dict)

    def merge(self, other: "ExtractionStats") -> None:
        self.lines_read += other.lines_read
        self.lines_skipped_malformed += other.lines_skipped_malformed
        self.triples_matched += other.triples_matched
        self.entities_emitted += other.entities_emitted
        self.entities_dropped_no_label += other.entities_dropped_no_label
        self.entities_dropped_conflicting_sex += other.entities_dropped_conflicting_sex
        for lang, n in other.label_languages.items():
            self.label_languages[lang] = self.label_languages.get(lang, 0) + n

    def as_dict(self) -> dict:
        return {
            "lines_read": self.lines_read,
            "lines_skipped_malformed": self.lines_skipped_malformed,
            "triples_matched": self.triples_matched,
            "entities_emitted": self.entities_emitted,
            "entities_dropped_no_label": self.entities_dropped_no_label,
            "entities_dropped_conflicting_sex": self.entities_dropped_conflicting_sex,
            "label_languages": dict(sorted(self.label_languages.items())),
        }


# One regex per line keeps the hot loop in C. IRI charset excludes the
# characters the grammar forbids; the literal body uses an unrolled loop
# (bulk character-class runs between escapes) so long literals match
# without per-character backtracking; decoding validates the escapes
# afterwards. A trailing comment after the terminating dot is tolerated.
_LINE_RE = re.compile(
    r"^[ \t]*"
    r'<([^ \t<>"{}|^`\\]+)>[ \t]+'
    r'<([^ \t<>"{}|^`\\]+)>[ \t]+'
    r'(?:<([^ \t<>"{}|^`\\]+)>'
    r'|"([^"\\\n\r]*(?:\\.[^"\\\n\r]*)*)"'
    r"(?:@([A-Za-z]+(?:-[A-Za-z0-9]+)*)"
    r'|\^\^<([^ \t<>"{}|^`\\]+)>)?'
    r")"
    r"[ \t]*\.[ \t]*(?:#.*)?$"
)

_SIMPLE_ESCAPES = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}

_HEX_DIGITS = frozenset("0123456789abcdefABCDEF")


def decode_literal_escapes(raw: str) -> str:
    """Resolve N-Triples string escapes (\\t \\n \\" \\\\ \\uXXXX \\UXXXXXXXX)."""
    out: list[str] = []
    i = 0
    n = len(raw)
    while i < n:
        ch = raw[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        if i + 1 >= n:
            raise NTSyntaxError("dangling backslash in literal")
        esc = raw[i + 1]
        simple = _SIMPLE_ESCAPES.get(esc)
        if simple is not None:
            out.append(simple)
            i += 2
            continue
        if esc == "u":
            width = 4
        elif esc == "U":
            width = 8
        else:
            raise NTSyntaxError(f"invalid escape \\{esc}")
        digits = raw[i + 2 : i + 2 + width]
        if len(digits) != width or not all(d in _HEX_DIGITS for d in digits):
            raise NTSyntaxError(f"bad \\{esc} escape")
        cp = int(digits, 16)
        if cp > 0x10FFFF or 0xD800 <= cp <= 0xDFFF:
            raise NTSyntaxError(f"escape outside Unicode scalar range: {digits}")
        out.append(chr(cp))
        i += 2 + width
    return "".join(out)


def encode_literal_escapes(text: str) -> str:
    """Inverse of decode_literal_escapes for fixture generation and tests.

    Escapes backslash, quote, and control characters; other characters are
    emitted raw (N-Triples files are UTF-8).
    """
    out: list[str] = []
    for ch in text:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ch == "\b":
            out.append("\\b")
        elif ch == "\f":
            out.append("\\f")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def parse_nt_line(line: str) -> Triple | None:
    """Parse one line. Returns None for blank and comment lines.

    Raises NTSyntaxError for anything the grammar subset does not cover.
    """
    line = line.rstrip("\r\n")
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    m = _LINE_RE.match(line)
    if m is None:
        raise NTSyntaxError(f"unparseable statement: {stripped[:80]!r}")
    subject, predicate, obj_iri, lit, lang, datatype = m.groups()
    if obj_iri is not None:
        obj: str | Literal = obj_iri
    else:
        lexical = decode_literal_escapes(lit) if "\\" in lit else lit
        obj = Literal(lexical, lang, datatype)
    return Triple(subject, predicate, obj)


def parse_nt_stream(
    lines: Iterable[str], stats: ExtractionStats | None = None
) -> Iterator[Triple]:
    """Yield one Triple per well-formed statement line, in input order.

    Blank and comment lines are counted in lines_read only; malformed lines
    increment lines_skipped_malformed and are skipped.
    """
    if stats is None:
        stats = ExtractionStats()
    for line in lines:
        stats.lines_read += 1
        try:
            triple = parse_nt_line(line)
        except NTSyntaxError:
            stats.lines_skipped_malformed += 1
            continue
        if triple is not None:
            yield triple


GZIP_MAGIC = b"\x1f\x8b"


def open_dump_text(path: str | Path) -> IO[str]:
    """Open an N-Triples file for streaming text reads.

    Gzip compression is detected by magic bytes, not by file extension.
    Undecodable bytes are replaced so a corrupt region degrades into
    malformed-line skips instead of aborting the stream.
    """
    raw = open(path, "rb")
    try:
        if raw.peek(2)[:2] == GZIP_MAGIC:
            stream: IO[bytes] = gzip.GzipFile(fileobj=raw)  # type: ignore[assignment]
        else:
            stream = raw
        return io.TextIOWrapper(stream, encoding="utf-8", errors="replace", newline="")
    except Exception:
        raw.close()
        raise


def is_gzip_file(path: str | Path) -> bool:
    with open(path, "rb") as fh:
        return fh.read(2) == GZIP_MAGIC
