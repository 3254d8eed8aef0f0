import gzip
import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from onomast.ntriples import (
    ExtractionStats,
    Literal,
    NTSyntaxError,
    Triple,
    decode_literal_escapes,
    encode_literal_escapes,
    is_gzip_file,
    open_dump_text,
    parse_nt_line,
    parse_nt_stream,
)

WD = "http://www.wikidata.org/entity/"
WDT = "http://www.wikidata.org/prop/direct/"


class TestParseLine:
    def test_iri_triple(self):
        # statement present on the public page for entity Q42 (instance of: human)
        line = f"<{WD}Q42> <{WDT}P31> <{WD}Q5> ."
        assert parse_nt_line(line) == Triple(f"{WD}Q42", f"{WDT}P31", f"{WD}Q5")

    def test_blank_line_and_comment(self):
        assert parse_nt_line("") is None
        assert parse_nt_line("   ") is None
        assert parse_nt_line("# a comment") is None
        assert parse_nt_line("   # indented comment") is None

    def test_language_literal_with_unicode_escape(self):
        # ï is LATIN SMALL LETTER I WITH DIAERESIS per the grammar
        line = '<http://x> <http://y> "Ana\\u00EFs"@fr .'
        triple = parse_nt_line(line)
        assert triple.object == Literal("Anaïs", "fr")

    def test_plain_and_datatype_literals(self):
        assert parse_nt_line('<http://x> <http://y> "abc" .').object == Literal("abc")
        triple = parse_nt_line(
            '<http://x> <http://y> "5"^^<http://www.w3.org/2001/XMLSchema#integer> .'
        )
        assert triple.object == Literal(
            "5", None, "http://www.w3.org/2001/XMLSchema#integer"
        )

    def test_empty_literal(self):
        assert parse_nt_line('<http://x> <http://y> "" .').object == Literal("")

    def test_astral_escape(self):
        triple = parse_nt_line('<http://x> <http://y> "ok \\U0001F600" .')
        assert triple.object.lexical == "ok \U0001f600"

    def test_trailing_comment_after_dot(self):
        assert parse_nt_line("<http://a> <http://b> <http://c> . # note") is not None

    def test_crlf_tolerated(self):
        assert parse_nt_line("<http://a> <http://b> <http://c> .\r\n") is not None

    @pytest.mark.parametrize(
        "line",
        [
            "<http://a> <http://b> <http://c>",  # missing dot
            "_:b0 <http://b> <http://c> .",  # blank node subject unsupported
            "<http://a> <http://b> _:b1 .",  # blank node object unsupported
            '<http://a> <http://b> "unterminated .',
            "<http://a> <http://b> .",  # missing object
            "just some text",
            '<http://a> <http://b> "x"@ .',  # empty language tag
            "<http://a b> <http://c> <http://d> .",  # space inside IRI
        ],
    )
    def test_malformed(self, line):
        with pytest.raises(NTSyntaxError):
            parse_nt_line(line)


class TestEscapes:
    def test_simple_escapes(self):
        assert decode_literal_escapes(r"a\tb\nc\"d\\e") == 'a\tb\nc"d\\e'

    @pytest.mark.parametrize(
        "raw", [r"\q", r"\u12", r"\uZZZZ", r"\U0011FFFF", r"\uD800", "trailing\\"]
    )
    def test_invalid_escapes(self, raw):
        with pytest.raises(NTSyntaxError):
            decode_literal_escapes(raw)

    @given(st.text())
    def test_round_trip(self, text):
        assert decode_literal_escapes(encode_literal_escapes(text)) == text

    def test_round_trip_fixture_strings(self):
        for s in ["Anaïs", 'quote " here', "back\\slash", "tab\there", "smile \U0001f600"]:
            assert decode_literal_escapes(encode_literal_escapes(s)) == s


class TestStream:
    def test_robustness_fixture(self, fixtures_dir):
        stats = ExtractionStats()
        with open(fixtures_dir / "robustness.nt", encoding="utf-8") as fh:
            triples = list(parse_nt_stream(fh, stats))
        assert [t.object for t in triples] == [
            "http://example.org/c",
            Literal("Anaïs", "fr"),
            Literal("tab\there", None, "http://www.w3.org/2001/XMLSchema#string"),
            Literal("smile \U0001f600"),
            Literal('quote:" backslash:\\'),
            "http://example.org/o",
        ]
        assert stats.lines_skipped_malformed == 3
        assert stats.lines_read == 12

    def test_blank_line_counts_as_read(self):
        stats = ExtractionStats()
        assert list(parse_nt_stream(["\n"], stats)) == []
        assert stats.lines_read == 1
        assert stats.lines_skipped_malformed == 0

    def test_chunking_invariance(self, fixtures_dir):
        text = (fixtures_dir / "robustness.nt").read_text(encoding="utf-8")
        from_lines = list(parse_nt_stream(text.splitlines()))
        from_stream = list(parse_nt_stream(io.StringIO(text)))
        assert from_lines == from_stream


class TestOpenDump:
    def test_gzip_detected_by_magic(self, tmp_path):
        line = "<http://a> <http://b> <http://c> .\n"
        plain = tmp_path / "d.nt"
        plain.write_text(line, encoding="utf-8")
        gz = tmp_path / "d.bin"  # deliberately not named .gz
        with gzip.open(gz, "wt", encoding="utf-8") as fh:
            fh.write(line)
        assert not is_gzip_file(plain)
        assert is_gzip_file(gz)
        for path in (plain, gz):
            with open_dump_text(path) as fh:
                assert list(parse_nt_stream(fh)) == [parse_nt_line(line)]
