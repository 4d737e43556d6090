"""Exception types shared across the pipeline."""


class OdsearchError(Exception):
    """Base class for all library errors."""


class ParseError(OdsearchError):
    """Input bytes are not valid JSON."""


class SchemaError(OdsearchError):
    """A canonical NDJSON line violates the fixed record schema."""


class MalformedMetadata(OdsearchError):
    """A CKAN package lacks the fields required to build a record."""


class NetworkError(OdsearchError):
    """An online harvest failed after the bounded retries."""


class IoError(OdsearchError):
    """An offline harvest source could not be read."""


class InsufficientText(OdsearchError):
    """Training text is too short to build a language profile."""


class DuplicateDataset(OdsearchError):
    """Two datasets share one (portal_id, dataset_id) during an index build."""


class VersionMismatch(OdsearchError):
    """An index file was written with a different format version."""


class CorruptIndex(OdsearchError):
    """An index file fails its checksum or is structurally broken."""


class LinkerUnavailable(OdsearchError):
    """The external linker backend did not answer in time."""


class SessionExpired(OdsearchError):
    """A chat event referenced an unknown or evicted session."""
