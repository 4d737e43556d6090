"""Cross-lingual open-dataset search.

Pipeline: harvest portal metadata into harmonized records, identify each
record's language, annotate text with language-independent concept ids,
index the concept sets, and serve ranked OR search with AND refinement
and co-occurrence suggestions through a CLI, an HTTP API, and a chat
dialogue layer.
"""

from .errors import (
    CorruptIndex,
    DuplicateDataset,
    InsufficientText,
    IoError,
    LinkerUnavailable,
    MalformedMetadata,
    NetworkError,
    OdsearchError,
    ParseError,
    SchemaError,
    SessionExpired,
    VersionMismatch,
)
from .harvest import harvest_portal
from .index import ConceptIndex, ResultSet, build_index, load_index, save_index
from .langid import LanguageProfile, build_profile, detect_language
from .linker import (
    AnnotatedDataset,
    Annotation,
    ConceptGraph,
    ConceptLabels,
    ExternalLinkerClient,
    Lexicon,
    LocalLinker,
    Mention,
    annotate_dataset,
    disambiguate,
    find_mentions,
    normalize_tokens,
)
from .records import (
    DatasetRecord,
    PortalSpec,
    concat_text,
    parse_canonical,
    parse_ckan_package,
    read_corpus,
    write_canonical,
    write_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "AnnotatedDataset",
    "Annotation",
    "ConceptGraph",
    "ConceptIndex",
    "ConceptLabels",
    "CorruptIndex",
    "DatasetRecord",
    "DuplicateDataset",
    "ExternalLinkerClient",
    "InsufficientText",
    "IoError",
    "LanguageProfile",
    "Lexicon",
    "LinkerUnavailable",
    "LocalLinker",
    "MalformedMetadata",
    "Mention",
    "NetworkError",
    "OdsearchError",
    "ParseError",
    "PortalSpec",
    "ResultSet",
    "SchemaError",
    "SessionExpired",
    "VersionMismatch",
    "annotate_dataset",
    "build_index",
    "build_profile",
    "concat_text",
    "detect_language",
    "disambiguate",
    "find_mentions",
    "harvest_portal",
    "load_index",
    "normalize_tokens",
    "parse_canonical",
    "parse_ckan_package",
    "read_corpus",
    "save_index",
    "write_canonical",
    "write_corpus",
]
