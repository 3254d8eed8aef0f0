"""Canonical first-name cleaning.

Both data sides (Wikidata labels and authorship records) are joined on the
output of clean(), so the steps and their order are normative:

  1. transliterate to ASCII through the shipped static table
  2. replace every character outside [A-Za-z0-9_] with a space
  3. collapse whitespace runs, trim
  4. drop single-character tokens
  5. drop tokens that are entirely 2..initials_max_len uppercase letters
     (initials written without punctuation); initials_max_len=0 removes
     the upper bound, so any all-uppercase token of 2+ letters is dropped
  6. lowercase
  7. nothing left -> no name (None)

Uppercase detection has to run on ASCII, hence transliteration first.
Coverage boundary: the table spans Latin-1 Supplement and Latin
Extended-A/B only; letters outside it (Vietnamese tone vowels, Cyrillic,
CJK, ...) are dropped character-wise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ._ascii_table import ASCII_TABLE

DEFAULT_INITIALS_MAX_LEN = 3

_NON_WORD_RE = re.compile(r"[^A-Za-z0-9_]")


@dataclass(frozen=True)
class CleanName:
    """A cleaned name: lowercase ASCII text and its space-separated tokens."""

    text: str
    tokens: tuple[str, ...]

    def __post_init__(self) -> None:
        assert self.text == " ".join(self.tokens)


def transliterate_ascii(text: str) -> str:
    """Map text to ASCII through the static table; unmapped non-ASCII drops."""
    if text.isascii():
        return text
    return "".join(
        ch if ch.isascii() else ASCII_TABLE.get(ch, "") for ch in text
    )


def _is_initials_token(token: str, max_len: int) -> bool:
    if len(token) < 2 or not token.isalpha() or not token.isupper():
        return False
    return max_len == 0 or len(token) <= max_len


def clean(
    raw: str, *, initials_max_len: int = DEFAULT_INITIALS_MAX_LEN
) -> CleanName | None:
    """Apply the full cleaning pipeline; None when no tokens survive."""
    if initials_max_len < 0:
        raise ValueError("initials_max_len must be >= 0")
    ascii_text = transliterate_ascii(raw)
    spaced = _NON_WORD_RE.sub(" ", ascii_text)
    tokens = [
        tok.lower()
        for tok in spaced.split()
        if len(tok) > 1 and not _is_initials_token(tok, initials_max_len)
    ]
    if not tokens:
        return None
    return CleanName(" ".join(tokens), tuple(tokens))


def first_token(name: CleanName) -> str:
    """First element of a compound name; the name itself when single-token."""
    return name.tokens[0]
