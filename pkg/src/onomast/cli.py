"""Command-line entry point.

Subcommands: extract, build-table, normalize, merge, analyze, pipeline.
Exit codes: 0 success, 1 fatal input/format error, 2 contract violation
(parameter out of domain, empty totals), 64 usage error.

Option precedence is flags > config file (key=value lines) > defaults.
All data emissions are sorted and timestamp-free, so identical inputs and
configuration produce bit-identical outputs; timestamps live only in the
run manifest.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import IO, Iterator

from . import __version__
from .analytics import (
    ANALYSIS_FORMAT_VERSION,
    DEFAULT_ALPHA,
    as_fraction,
    points_from_rows,
    report,
    write_analysis_tsv,
    write_summary_json,
)
from .errors import ContractViolationError, FormatError, OnomastError
from .extract import (
    DEFAULT_LABELS_LANG,
    extract_entities,
    format_stats_summary,
    read_entities_tsv,
    write_entities_tsv,
)
from .gender_table import GenderTable, TableBuildStats, accumulate
from .merge import (
    ALL_ROLES,
    IngestStats,
    MergeStats,
    Role,
    build_role_dataset,
    derive_corresponding,
    ingest_path,
    read_merged_tsv,
    score_records,
    write_merged_tsv,
)
from .normalize import DEFAULT_INITIALS_MAX_LEN, clean
from .ntriples import ExtractionStats

USAGE_EXIT = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> "argparse.NoReturn":  # type: ignore[name-defined]
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def read_config_file(path: str | Path) -> dict[str, str]:
    """key=value lines; '#' comments and blank lines ignored."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise FormatError(f"{path}: line {lineno}: expected key=value")
            key, _, value = line.partition("=")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


class _Options:
    """Layered option lookup: parsed flags, then config file, then default."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.config: dict[str, str] = {}
        if getattr(args, "config", None):
            self.config = read_config_file(args.config)

    def get(self, key: str, default=None):
        value = getattr(self.args, key, None)
        if value is None:
            value = self.config.get(key)
        return default if value is None else value

    def require(self, key: str, flag: str):
        value = self.get(key)
        if value is None:
            raise _UsageError(f"missing required option {flag}")
        return value

    def get_int(self, key: str, default: int) -> int:
        value = self.get(key)
        if value is None:
            return default
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ContractViolationError(f"{key} must be an integer: {value!r}") from None

    def get_paths(self, key: str) -> list[str] | None:
        value = self.get(key)
        if value is None:
            return None
        if isinstance(value, list):
            return value
        return value.split()


def _parse_years(text: str) -> tuple[int, int]:
    for sep in (":", "-"):
        if sep in text:
            lo, _, hi = text.partition(sep)
            try:
                years = (int(lo), int(hi))
            except ValueError:
                break
            if years[0] > years[1]:
                raise ContractViolationError(f"year range not ordered: {text}")
            return years
    raise ContractViolationError(f"cannot parse year range {text!r} (use FROM:TO)")


def _validated_alpha(opts: _Options):
    raw = opts.get("alpha", "0.005")
    try:
        alpha = as_fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise ContractViolationError(f"cannot parse alpha {raw!r}") from None
    if not 0 < alpha < as_fraction("0.5"):
        raise ContractViolationError(f"alpha must be in (0, 1/2), got {raw}")
    return alpha


def _validated_initials(opts: _Options) -> int:
    value = opts.get_int("initials_max_len", DEFAULT_INITIALS_MAX_LEN)
    if value < 0:
        raise ContractViolationError(f"initials-max-len must be >= 0, got {value}")
    return value


def _validated_threads(opts: _Options) -> int:
    value = opts.get_int("threads", 1)
    if value < 1:
        raise ContractViolationError(f"threads must be >= 1, got {value}")
    return value


def _validated_transform(opts: _Options) -> str:
    value = opts.get("transform", "paper")
    if value not in ("none", "paper"):
        raise ContractViolationError(f"transform must be none or paper, got {value!r}")
    return value


@contextmanager
def atomic_text_writer(path: str | Path) -> Iterator[IO[str]]:
    """Write to a temp file in the target directory, then rename over."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            yield fh
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _sha256(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            digest.update(block)
    return digest.hexdigest()


def write_manifest(
    out_dir: Path,
    *,
    command: str,
    config: dict,
    inputs: dict[str, str | Path],
    stages: dict,
) -> None:
    payload = {
        "tool_version": __version__,
        "format_version": ANALYSIS_FORMAT_VERSION,
        "created_utc": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "command": command,
        "config": config,
        "inputs": {
            label: {"path": str(p), "sha256": _sha256(p)}
            for label, p in sorted(inputs.items())
            if str(p) != "-"
        },
        "stages": stages,
    }
    with atomic_text_writer(out_dir / "manifest.json") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _progress(message: str) -> None:
    print(f"onomast: {message}", file=sys.stderr)


def _drop_empty(role_points: dict) -> dict:
    """Summaries cover only roles with data; empty ones are noted and skipped
    (their analysis TSVs are still emitted, header-only)."""
    kept = {}
    for name, points in role_points.items():
        if points:
            kept[name] = points
        else:
            _progress(f"role {name}: no records, excluded from summary")
    if not kept:
        raise ContractViolationError("every role dataset is empty")
    return kept


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def cmd_extract(opts: _Options) -> int:
    threads = _validated_threads(opts)
    dump = opts.require("dump", "--dump")
    labels_lang = opts.get("labels_lang", DEFAULT_LABELS_LANG)
    stats = ExtractionStats()
    records = extract_entities(
        dump, labels_lang=labels_lang, threads=threads, stats=stats
    )
    out = opts.get("out")
    if out is None:
        write_entities_tsv(records, sys.stdout)
        sys.stdout.flush()
    else:
        with atomic_text_writer(out) as fh:
            write_entities_tsv(records, fh)
    print(format_stats_summary(stats), file=sys.stderr)
    stats_out = opts.get("stats_out")
    if stats_out is not None:
        with atomic_text_writer(stats_out) as fh:
            json.dump(stats.as_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


def cmd_build_table(opts: _Options) -> int:
    initials_max_len = _validated_initials(opts)
    entities = opts.require("entities", "--entities")
    out = opts.require("out", "--out")
    meta = {"source": Path(entities).name, "source_sha256": _sha256(entities)}
    date = opts.get("date")
    if date is not None:
        meta["extracted"] = str(date)
    stats = TableBuildStats()
    with open(entities, encoding="utf-8") as fh:
        table = accumulate(
            read_entities_tsv(fh),
            initials_max_len=initials_max_len,
            meta=meta,
            stats=stats,
        )
    with atomic_text_writer(out) as fh:
        table.save(fh)
    _progress(
        f"table: {len(table)} names from {stats.entities_seen} entities "
        f"({stats.names_skipped_empty} names cleaned to nothing)"
    )
    return 0


def cmd_normalize(opts: _Options) -> int:
    initials_max_len = _validated_initials(opts)
    for line in sys.stdin:
        cn = clean(line.rstrip("\r\n"), initials_max_len=initials_max_len)
        sys.stdout.write((cn.text if cn else "") + "\n")
    sys.stdout.flush()
    return 0


def _parse_role_selection(text: str) -> list[Role]:
    if text.strip().lower() == "all":
        return list(ALL_ROLES)
    try:
        return [Role.parse(text)]
    except ValueError as exc:
        raise ContractViolationError(str(exc)) from None


def cmd_merge(opts: _Options) -> int:
    initials_max_len = _validated_initials(opts)
    roles = _parse_role_selection(opts.get("role", "all"))
    years_text = opts.get("years")
    year_range = _parse_years(years_text) if years_text is not None else None
    table_path = opts.require("table", "--table")
    authors_path = opts.require("authors", "--authors")
    out = Path(opts.require("out", "--out"))

    table = GenderTable.load_path(table_path)
    ingest_stats = IngestStats()
    records = ingest_path(authors_path, year_range=year_range, stats=ingest_stats)
    records = derive_corresponding(records)
    merge_stats = MergeStats()
    scored = score_records(
        records, table, initials_max_len=initials_max_len, stats=merge_stats
    )

    multi = len(roles) > 1
    if multi:
        out.mkdir(parents=True, exist_ok=True)
    for role in roles:
        dataset = build_role_dataset(scored, role)
        target = out / f"merged_{role.value}.tsv" if multi else out
        with atomic_text_writer(target) as fh:
            write_merged_tsv(dataset, role, fh)
    _progress(
        f"ingest: {ingest_stats.rows_read} rows, "
        f"{ingest_stats.rows_skipped_invalid} invalid, "
        f"{ingest_stats.rows_filtered_year} outside year range"
    )
    _progress(
        f"merge: {merge_stats.scored} scored, "
        f"{merge_stats.dropped_empty_name} empty after cleaning, "
        f"{merge_stats.dropped_unmatched} unmatched"
    )
    if multi:
        write_manifest(
            out,
            command="merge",
            config={
                "role": "all",
                "initials_max_len": initials_max_len,
                "years": years_text,
            },
            inputs={"table": table_path, "authors": authors_path},
            stages={"ingest": vars(ingest_stats), "merge": vars(merge_stats)},
        )
    return 0


def cmd_analyze(opts: _Options) -> int:
    alpha = _validated_alpha(opts)
    transform = _validated_transform(opts)
    merged_paths = opts.get_paths("merged")
    if not merged_paths:
        raise _UsageError("missing required option --merged")
    out_dir = Path(opts.require("out_dir", "--out-dir"))
    out_dir.mkdir(parents=True, exist_ok=True)

    role_points = {}
    for path in merged_paths:
        with open(path, encoding="utf-8") as fh:
            role, rows = read_merged_tsv(fh)
        if role is None:
            raise FormatError(f"{path}: no '# role:' header")
        if role.value in role_points:
            raise FormatError(f"{path}: duplicate role {role.value}")
        role_points[role.value] = points_from_rows(rows)

    for role_name, points in sorted(role_points.items()):
        with atomic_text_writer(out_dir / f"analysis_{role_name}.tsv") as fh:
            write_analysis_tsv(points, role_name, fh, transform=transform)
    summary = report(_drop_empty(role_points), alpha=alpha)
    with atomic_text_writer(out_dir / "summary.json") as fh:
        write_summary_json(summary, fh)
    write_manifest(
        out_dir,
        command="analyze",
        config={"alpha": str(alpha), "transform": transform},
        inputs={Path(p).name: p for p in merged_paths},
        stages={"analyze": {"roles": sorted(role_points)}},
    )
    _progress(f"analyze: {len(role_points)} role dataset(s) -> {out_dir}")
    return 0


def cmd_pipeline(opts: _Options) -> int:
    alpha = _validated_alpha(opts)
    transform = _validated_transform(opts)
    initials_max_len = _validated_initials(opts)
    threads = _validated_threads(opts)
    years_text = opts.get("years")
    year_range = _parse_years(years_text) if years_text is not None else None
    labels_lang = opts.get("labels_lang", DEFAULT_LABELS_LANG)
    dump = opts.require("dump", "--dump")
    authors_path = opts.require("authors", "--authors")
    out_dir = Path(opts.require("out_dir", "--out-dir"))
    out_dir.mkdir(parents=True, exist_ok=True)

    extraction = ExtractionStats()
    records = extract_entities(
        dump, labels_lang=labels_lang, threads=threads, stats=extraction
    )
    entities_path = out_dir / "entities.tsv"
    with atomic_text_writer(entities_path) as fh:
        write_entities_tsv(records, fh)
    del records
    print(format_stats_summary(extraction), file=sys.stderr)

    table_stats = TableBuildStats()
    meta = {"source": entities_path.name, "source_sha256": _sha256(entities_path)}
    with open(entities_path, encoding="utf-8") as fh:
        table = accumulate(
            read_entities_tsv(fh),
            initials_max_len=initials_max_len,
            meta=meta,
            stats=table_stats,
        )
    table_path = out_dir / "table.tsv"
    with atomic_text_writer(table_path) as fh:
        table.save(fh)
    _progress(f"table: {len(table)} names")

    table = GenderTable.load_path(table_path)
    ingest_stats = IngestStats()
    authorships = ingest_path(authors_path, year_range=year_range, stats=ingest_stats)
    authorships = derive_corresponding(authorships)
    merge_stats = MergeStats()
    scored = score_records(
        authorships, table, initials_max_len=initials_max_len, stats=merge_stats
    )
    merged_paths = []
    for role in ALL_ROLES:
        dataset = build_role_dataset(scored, role)
        path = out_dir / f"merged_{role.value}.tsv"
        with atomic_text_writer(path) as fh:
            write_merged_tsv(dataset, role, fh)
        merged_paths.append(path)
    _progress(
        f"merge: {merge_stats.scored} scored, "
        f"{merge_stats.dropped_empty_name} empty, "
        f"{merge_stats.dropped_unmatched} unmatched"
    )

    role_points = {}
    for path in merged_paths:
        with open(path, encoding="utf-8") as fh:
            role, rows = read_merged_tsv(fh)
        assert role is not None
        role_points[role.value] = points_from_rows(rows)
    for role_name, points in sorted(role_points.items()):
        with atomic_text_writer(out_dir / f"analysis_{role_name}.tsv") as fh:
            write_analysis_tsv(points, role_name, fh, transform=transform)
    summary = report(_drop_empty(role_points), alpha=alpha)
    with atomic_text_writer(out_dir / "summary.json") as fh:
        write_summary_json(summary, fh)

    write_manifest(
        out_dir,
        command="pipeline",
        config={
            "labels_lang": labels_lang,
            "initials_max_len": initials_max_len,
            "alpha": str(alpha),
            "years": years_text,
            "transform": transform,
            "threads": threads,
        },
        inputs={"dump": dump, "authors": authors_path},
        stages={
            "extract": extraction.as_dict(),
            "build_table": vars(table_stats),
            "ingest": vars(ingest_stats),
            "merge": vars(merge_stats),
            "analyze": {"roles": sorted(role_points)},
        },
    )
    _progress(f"pipeline complete -> {out_dir}")
    return 0


# ---------------------------------------------------------------------------
# Argument wiring
# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(
        prog="onomast",
        description="First-name genderedness scoring and citation-distribution analytics.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"onomast {__version__} (data format {ANALYSIS_FORMAT_VERSION})",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="key=value config file (flags win)")
        return p

    p = add("extract", "stream a truthy N-Triples dump into entity records")
    p.add_argument("--dump", help="dump path, '-' for stdin (gzip auto-detected)")
    p.add_argument("--labels-lang", dest="labels_lang", help="preferred label language (default en)")
    p.add_argument("--stats-out", dest="stats_out", help="write extraction stats JSON here")
    p.add_argument("--out", help="entities TSV path (default: stdout)")
    p.add_argument("--threads", help="parallel scanners for plain files (default 1)")

    p = add("build-table", "compile per-name sex frequencies from entity records")
    p.add_argument("--entities", help="entities TSV from extract")
    p.add_argument("--out", help="gender table TSV path")
    p.add_argument("--initials-max-len", dest="initials_max_len")
    p.add_argument("--date", help="extraction date recorded in table provenance")

    p = add("normalize", "clean names from stdin to stdout, one per line")
    p.add_argument("--initials-max-len", dest="initials_max_len")

    p = add("merge", "attach genderedness to authorship records")
    p.add_argument("--table", help="gender table TSV")
    p.add_argument("--authors", help="authorship CSV")
    p.add_argument("--role", help="single|first|middle|last|corresponding|all")
    p.add_argument("--out", help="output TSV (a directory when --role all)")
    p.add_argument("--years", help="inclusive year filter, e.g. 2010:2019")
    p.add_argument("--initials-max-len", dest="initials_max_len")

    p = add("analyze", "cumulative distributions, concentration, differences")
    p.add_argument("--merged", nargs="+", help="merged per-role TSV file(s)")
    p.add_argument("--alpha", help="top-gendered cutoff (default 0.005)")
    p.add_argument("--out-dir", dest="out_dir", help="output directory")
    p.add_argument("--transform", help="plot-axis transform: none|paper")

    p = add("pipeline", "run extract, build-table, merge, analyze in sequence")
    p.add_argument("--dump", help="dump path, '-' for stdin")
    p.add_argument("--authors", help="authorship CSV")
    p.add_argument("--out-dir", dest="out_dir", help="output directory")
    p.add_argument("--labels-lang", dest="labels_lang")
    p.add_argument("--initials-max-len", dest="initials_max_len")
    p.add_argument("--alpha")
    p.add_argument("--years")
    p.add_argument("--transform")
    p.add_argument("--threads")

    return parser


_HANDLERS = {
    "extract": cmd_extract,
    "build-table": cmd_build_table,
    "normalize": cmd_normalize,
    "merge": cmd_merge,
    "analyze": cmd_analyze,
    "pipeline": cmd_pipeline,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.error("a subcommand is required")
        return _HANDLERS[args.command](_Options(args))
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 1
    except _UsageError as exc:
        print(f"onomast: error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ContractViolationError as exc:
        print(f"onomast: contract violation: {exc}", file=sys.stderr)
        return 2
    except FormatError as exc:
        print(f"onomast: input error: {exc}", file=sys.stderr)
        return 1
    except OnomastError as exc:
        print(f"onomast: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"onomast: i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
