#!/usr/bin/env python3
"""Regenerate src/onomast/_ascii_table.py.

The shipped table maps every code point in Latin-1 Supplement (U+00A0-U+00FF)
and Latin Extended-A/B (U+0100-U+024F) that has a sensible ASCII rendering.
Mappings come from NFKD decomposition (combining marks stripped, resolved
recursively) plus a curated list for letters that do not decompose (stroked,
hooked, and ligature forms). Code points that resolve to nothing are omitted;
the runtime treats absence as "drop".

The output module is committed; this script only exists so the table can be
audited and rebuilt if the curated list changes.
"""

import sys
import unicodedata
from pathlib import Path

SPECIALS = {
    # Latin-1 Supplement
    "Æ": "AE", "æ": "ae",      # Æ æ
    "Ð": "D", "ð": "d",        # Ð ð
    "Ø": "O", "ø": "o",        # Ø ø
    "Þ": "TH", "þ": "th",      # Þ þ
    "ß": "ss",                       # ß
    "¼": "", "½": "", "¾": "",  # vulgar fractions
    "×": "", "÷": "",          # × ÷
    # Latin Extended-A
    "Đ": "D", "đ": "d",        # Đ đ
    "Ħ": "H", "ħ": "h",        # Ħ ħ
    "ı": "i",                        # ı
    "ĸ": "k",                        # ĸ
    "Ł": "L", "ł": "l",        # Ł ł
    "Ŋ": "NG", "ŋ": "ng",      # Ŋ ŋ
    "Œ": "OE", "œ": "oe",      # Œ œ
    "Ŧ": "T", "ŧ": "t",        # Ŧ ŧ
    # Latin Extended-B letters without decompositions
    "ƀ": "b", "Ɓ": "B", "Ƃ": "B", "ƃ": "b",
    "Ƅ": "B", "ƅ": "b", "Ɔ": "O", "Ƈ": "C",
    "ƈ": "c", "Ɖ": "D", "Ɗ": "D", "Ƌ": "D",
    "ƌ": "d", "ƍ": "d", "Ǝ": "E", "Ə": "E",
    "Ɛ": "E", "Ƒ": "F", "ƒ": "f", "Ɠ": "G",
    "Ɣ": "G", "ƕ": "hv", "Ɩ": "I", "Ɨ": "I",
    "Ƙ": "K", "ƙ": "k", "ƚ": "l", "ƛ": "l",
    "Ɯ": "M", "Ɲ": "N", "ƞ": "n", "Ɵ": "O",
    "Ƣ": "OI", "ƣ": "oi", "Ƥ": "P", "ƥ": "p",
    "Ʀ": "R", "Ƨ": "S", "ƨ": "s", "Ʃ": "S",
    "ƪ": "s", "ƫ": "t", "Ƭ": "T", "ƭ": "t",
    "Ʈ": "T", "Ʊ": "U", "Ʋ": "V", "Ƴ": "Y",
    "ƴ": "y", "Ƶ": "Z", "ƶ": "z", "Ʒ": "Z",
    "Ƹ": "Z", "ƹ": "z", "ƺ": "z", "ƿ": "w",
    "ǝ": "e", "Ǥ": "G", "ǥ": "g",
    "Ƕ": "HV", "Ƿ": "W",
    "Ȝ": "G", "ȝ": "g", "Ƞ": "N", "ȡ": "d",
    "Ȣ": "OU", "ȣ": "ou", "Ȥ": "Z", "ȥ": "z",
    "ȴ": "l", "ȵ": "n", "ȶ": "t", "ȷ": "j",
    "ȸ": "db", "ȹ": "qp", "Ⱥ": "A", "Ȼ": "C",
    "ȼ": "c", "Ƚ": "L", "Ⱦ": "T", "ȿ": "s",
    "ɀ": "z", "Ƀ": "B", "Ʉ": "U", "Ʌ": "V",
    "Ɇ": "E", "ɇ": "e", "Ɉ": "J", "ɉ": "j",
    "Ɋ": "Q", "ɋ": "q", "Ɍ": "R", "ɍ": "r",
    "Ɏ": "Y", "ɏ": "y",
}


def resolve(ch: str) -> str:
    if ord(ch) < 128:
        return ch
    if ch in SPECIALS:
        return SPECIALS[ch]
    decomposed = unicodedata.normalize("NFKD", ch)
    if decomposed != ch:
        return "".join(
            resolve(c) for c in decomposed if not unicodedata.combining(c)
        )
    return ""


def build() -> dict[str, str]:
    table = {}
    for cp in range(0x00A0, 0x0250):
        ch = chr(cp)
        mapped = resolve(ch)
        if mapped:
            table[ch] = mapped
    return table


def emit(table: dict[str, str]) -> str:
    lines = [
        '"""Static non-ASCII to ASCII mapping for name transliteration.',
        "",
        "Covers Latin-1 Supplement (U+00A0-U+00FF) and Latin Extended-A/B",
        "(U+0100-U+024F). Code points absent from the table are dropped by",
        "the caller. Generated by tools/gen_ascii_table.py; edit there.",
        '"""',
        "",
        "ASCII_TABLE: dict[str, str] = {",
    ]
    for ch, mapped in sorted(table.items()):
        lines.append(f"    {ch!r}: {mapped!r},  # U+{ord(ch):04X} {unicodedata.name(ch, '?')}")
    lines.append("}")
    lines.append("")
    return "\n".join(lines)


def main() -> int:
    out = Path(__file__).resolve().parent.parent / "src" / "onomast" / "_ascii_table.py"
    table = build()
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(emit(table), encoding="utf-8")
    print(f"wrote {out} ({len(table)} entries)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
