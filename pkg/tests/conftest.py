import subprocess
import sys
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


def run_cli(*args: str, stdin_text: str | None = None, cwd=None):
    """Run the CLI in a subprocess; faithful exit codes and stdio."""
    return subprocess.run(
        [sys.executable, "-m", "onomast.cli", *args],
        input=stdin_text,
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def read_golden_corpus(path: Path) -> list[tuple[str, str]]:
    """input<TAB>expected rows; a line without a tab means expected is empty."""
    cases = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            inp, _, exp = line.partition("\t")
            cases.append((inp, exp))
    return cases
