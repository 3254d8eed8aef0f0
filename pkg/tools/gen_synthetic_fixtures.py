#!/usr/bin/env python3
"""Regenerate the synthetic end-to-end fixtures.

Produces tests/fixtures/synthetic_table.tsv (2,000 names) and
tests/fixtures/synthetic_authors.csv (10,000 authorship rows). Everything
is seeded, pure ASCII, and committed; the acceptance suite recomputes the
expected pipeline outputs from these files with an independent
straight-line reference.
"""

import csv
import random
import sys
from pathlib import Path

SEED = 20240403
N_NAMES = 2000
N_ROWS = 10000

SYLLABLES = [
    "an", "ar", "bel", "ber", "cal", "car", "dan", "del", "dor", "el",
    "fan", "fer", "gal", "gar", "han", "hel", "il", "jan", "jor", "kal",
    "kar", "lan", "lor", "mal", "mar", "nan", "nor", "ol", "pal", "per",
    "quin", "ral", "ros", "sal", "ser", "tan", "tor", "ul", "van", "vor",
    "wen", "xan", "yor", "zel",
]

EMPTY_CLEANING = ["J.", "A. B.", "X.", "JR", "TJ", "Q.", "R. A. F.", "..."]


def make_token(rng: random.Random) -> str:
    return "".join(rng.choice(SYLLABLES) for _ in range(rng.randint(2, 3)))


def make_names(rng: random.Random) -> list[str]:
    names: set[str] = set()
    while len(names) < N_NAMES:
        if rng.random() < 0.30:
            name = f"{make_token(rng)} {make_token(rng)}"
        else:
            name = make_token(rng)
        names.add(name)
    return sorted(names)


def make_counts(rng: random.Random) -> tuple[int, int]:
    kind = rng.random()
    if kind < 0.40:
        return rng.randint(1, 2000), 0
    if kind < 0.75:
        return 0, rng.randint(1, 2000)
    return rng.randint(1, 500), rng.randint(1, 500)


def decorate(rng: random.Random, name: str, names: list[str]) -> str:
    tokens = [t.capitalize() for t in name.split()]
    d = rng.random()
    if d < 0.25:
        return " ".join(tokens)
    if d < 0.40:
        return f"{rng.choice('JKLMR')}. " + " ".join(tokens)
    if d < 0.55:
        return " ".join(tokens) + f" {rng.choice('ABDEK')}."
    if d < 0.70:
        extra = rng.choice(names).split()[0].capitalize()
        return " ".join(tokens) + " " + extra
    if d < 0.78:
        return " ".join(t.upper() for t in tokens)
    if d < 0.88 and len(tokens) >= 2:
        return "-".join(tokens)
    if d < 0.91:
        return " ".join(tokens) + f", {rng.choice('JKL')}."
    return name


def pick_name(rng: random.Random, names: list[str]) -> str:
    r = rng.random()
    if r < 0.80:
        return decorate(rng, rng.choice(names), names)
    if r < 0.92:
        return "zz" + "".join(rng.choice("abcdefghij") for _ in range(rng.randint(5, 8)))
    return rng.choice(EMPTY_CLEANING)


def role_text(rng: random.Random, role: str) -> str:
    return rng.choice([role, role.capitalize(), role.upper()])


def main() -> int:
    rng = random.Random(SEED)
    fixtures = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
    names = make_names(rng)
    assert not any(n.startswith("zz") for n in names)

    with open(fixtures / "synthetic_table.tsv", "w", encoding="utf-8", newline="") as fh:
        fh.write("# format_version: 1\n")
        fh.write("# entities: 0\n")
        fh.write(f"# names: {len(names)}\n")
        fh.write("# source: synthetic\n")
        for name in names:
            male, female = make_counts(rng)
            fh.write(f"{name}\t{male}\t{female}\n")

    rows: list[tuple[str, str, str, int, str]] = []
    article_no = 0
    while len(rows) < N_ROWS:
        article_no += 1
        article_id = f"s{article_no:06d}"
        citations = rng.randint(0, 400)
        year = "" if rng.random() < 0.05 else str(rng.randint(2005, 2023))
        remaining = N_ROWS - len(rows)
        kind = rng.random()
        if kind < 0.25 or remaining < 3:
            seats = ["single"]
        else:
            seats = ["first"] + ["middle"] * rng.randint(0, 3) + ["last"]
            if rng.random() < 0.15:
                seats.append("corresponding")
        seats = seats[:remaining]
        for seat in seats:
            rows.append(
                (
                    article_id,
                    role_text(rng, seat),
                    pick_name(rng, names),
                    citations,
                    year,
                )
            )

    assert len(rows) == N_ROWS
    assert all(field.isascii() for row in rows for field in map(str, row))
    with open(fixtures / "synthetic_authors.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["article_id", "role", "first_name", "citations", "year"])
        writer.writerows(rows)

    print(f"wrote {len(names)} names, {len(rows)} authorship rows")
    return 0


if __name__ == "__main__":
    sys.exit(main())
