"""onomast: first-name genderedness scores from Wikidata truthy dumps,
attached to authorship records, with cumulative distribution analytics."""

__version__ = "0.1.0"

from .analytics import (
    SpectrumPoint,
    cumulative_difference,
    cumulative_share,
    report,
    spectrum,
    table_spectrum,
    top_share,
    transform_axes,
)
from .errors import (
    ContractViolationError,
    FormatError,
    InputInconsistencyError,
    OnomastError,
)
from .extract import (
    HumanEntityRecord,
    Sex,
    assemble_entities,
    extract_entities,
    filter_relevant,
)
from .gender_table import (
    GenderTable,
    Genderedness,
    SexCounts,
    accumulate,
    merge_tables,
    score,
)
from .merge import (
    AuthorshipRecord,
    Role,
    ScoredAuthorship,
    attach_genderedness,
    build_role_dataset,
    derive_corresponding,
    ingest,
    score_records,
)
from .normalize import CleanName, clean, first_token, transliterate_ascii
from .ntriples import ExtractionStats, Literal, Triple, parse_nt_line, parse_nt_stream

__all__ = [
    "__version__",
    "AuthorshipRecord",
    "CleanName",
    "ContractViolationError",
    "ExtractionStats",
    "FormatError",
    "GenderTable",
    "Genderedness",
    "HumanEntityRecord",
    "InputInconsistencyError",
    "Literal",
    "OnomastError",
    "Role",
    "ScoredAuthorship",
    "Sex",
    "SexCounts",
    "SpectrumPoint",
    "Triple",
    "accumulate",
    "assemble_entities",
    "attach_genderedness",
    "build_role_dataset",
    "clean",
    "cumulative_difference",
    "cumulative_share",
    "derive_corresponding",
    "extract_entities",
    "filter_relevant",
    "first_token",
    "ingest",
    "merge_tables",
    "parse_nt_line",
    "parse_nt_stream",
    "report",
    "score",
    "score_records",
    "spectrum",
    "table_spectrum",
    "top_share",
    "transform_axes",
    "transliterate_ascii",
]
