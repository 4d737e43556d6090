"""Harmonized dataset records and the canonical NDJSON interchange format.

Portal metadata enters the pipeline either as CKAN package JSON or as
canonical NDJSON lines; both parse into :class:`DatasetRecord`, the
schema.org/Dataset-shaped internal model (name, description, keywords).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Iterator, Mapping

from .errors import MalformedMetadata, ParseError, SchemaError

#: Closed set of supported language codes; "und" means undetermined.
LANGUAGE_CODES = ("de", "en", "es", "fi", "fr", "it", "pt", "und")

#: Fixed key set of one canonical NDJSON line, in serialization order.
CANONICAL_FIELDS = (
    "portal_id",
    "dataset_id",
    "title",
    "description",
    "keywords",
    "landing_url",
    "language",
    "publisher",
)

#: NDJSON corpus files carry this extension by convention.
CORPUS_EXTENSION = ".records.ndjson"


@dataclass(frozen=True)
class DatasetRecord:
    """One portal dataset's harmonized metadata.

    (portal_id, dataset_id) identifies a record uniquely within a corpus;
    title is always non-empty; keywords hold no duplicates and no empty
    strings; language starts as "und" until language identification runs.
    """

    portal_id: str
    dataset_id: str
    title: str
    description: str = ""
    keywords: tuple[str, ...] = ()
    landing_url: str = ""
    language: str = "und"
    publisher: str = ""


@dataclass(frozen=True)
class PortalSpec:
    """A harvestable portal: id, API root, and advisory metadata."""

    portal_id: str
    api_base_url: str = ""
    expected_language: str = "und"
    dataset_count_hint: int = 0


#: The seven bundled portal descriptions with their advisory sizes.
DEFAULT_PORTALS = (
    PortalSpec("dati.trentino.it", "https://dati.trentino.it", "it", 5285),
    PortalSpec("data.gov.ie", "https://data.gov.ie", "en", 4796),
    PortalSpec("datamx.io", "https://datamx.io", "es", 2767),
    PortalSpec("data.gv.at", "https://www.data.gv.at", "de", 2323),
    PortalSpec("dados.gov.br", "https://dados.gov.br", "pt", 2061),
    PortalSpec("beta.avoindata.fi", "https://beta.avoindata.fi", "fi", 820),
    PortalSpec("www.nosdonnees.fr", "https://www.nosdonnees.fr", "fr", 290),
)


def _clean_str(value: Any) -> str:
    """Accept a string field, treating every other type as absent."""
    return value if isinstance(value, str) else ""


def dedupe_keywords(raw: Iterable[str]) -> tuple[str, ...]:
    """Drop empty strings and duplicates; first occurrence wins."""
    seen: set[str] = set()
    out: list[str] = []
    for kw in raw:
        if kw and kw not in seen:
            seen.add(kw)
            out.append(kw)
    return tuple(out)


def parse_ckan_package(
    raw: str | bytes | Mapping[str, Any], portal_id: str = ""
) -> DatasetRecord:
    """Map one CKAN package document onto a :class:`DatasetRecord`.

    Field mapping: ``title`` (fallback ``name``) -> title, ``notes`` ->
    description, ``tags[*].name`` -> keywords, ``id`` (fallback ``name``)
    -> dataset_id, ``url`` -> landing_url, ``organization.title`` ->
    publisher.  Unknown fields are ignored.

    Raises ParseError on invalid JSON and MalformedMetadata when neither
    title nor name, or neither id nor name, is present.
    """
    if isinstance(raw, (str, bytes)):
        try:
            doc = json.loads(raw)
        except ValueError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    else:
        doc = raw
    if not isinstance(doc, Mapping):
        raise MalformedMetadata("CKAN package is not a JSON object")

    title = _clean_str(doc.get("title")) or _clean_str(doc.get("name"))
    if not title:
        raise MalformedMetadata("package has neither 'title' nor 'name'")
    dataset_id = _clean_str(doc.get("id")) or _clean_str(doc.get("name"))
    if not dataset_id:
        raise MalformedMetadata("package has neither 'id' nor 'name'")

    keywords: list[str] = []
    tags = doc.get("tags")
    if isinstance(tags, list):
        for tag in tags:
            if isinstance(tag, Mapping):
                keywords.append(_clean_str(tag.get("name")))

    organization = doc.get("organization")
    publisher = (
        _clean_str(organization.get("title"))
        if isinstance(organization, Mapping)
        else ""
    )

    return DatasetRecord(
        portal_id=portal_id,
        dataset_id=dataset_id,
        title=title,
        description=_clean_str(doc.get("notes")),
        keywords=dedupe_keywords(keywords),
        landing_url=_clean_str(doc.get("url")),
        publisher=publisher,
    )


def write_canonical(record: DatasetRecord) -> str:
    """Serialize one record as a canonical NDJSON line (without newline)."""
    doc = {
        "portal_id": record.portal_id,
        "dataset_id": record.dataset_id,
        "title": record.title,
        "description": record.description,
        "keywords": list(record.keywords),
        "landing_url": record.landing_url,
        "language": record.language,
        "publisher": record.publisher,
    }
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":"))


def _validate_canonical_fields(doc: dict[str, Any]) -> None:
    keys = set(doc)
    unknown = keys - set(CANONICAL_FIELDS)
    if unknown:
        raise SchemaError(f"unknown key {sorted(unknown)[0]!r}")
    missing = set(CANONICAL_FIELDS) - keys
    if missing:
        raise SchemaError(f"missing key {sorted(missing)[0]!r}")
    for key in CANONICAL_FIELDS:
        if key == "keywords":
            continue
        if not isinstance(doc[key], str):
            raise SchemaError(f"key {key!r} must be a string")
    if not isinstance(doc["keywords"], list) or any(
        not isinstance(kw, str) for kw in doc["keywords"]
    ):
        raise SchemaError("key 'keywords' must be a list of strings")


def parse_canonical(line: str) -> DatasetRecord:
    """Parse one canonical NDJSON line back into a record.

    The schema is strict: the exact key set, string-typed fields, a known
    language code, non-empty title and dataset_id, and keywords free of
    duplicates and empty strings.  Violations raise SchemaError; bytes
    that are not JSON raise ParseError.
    """
    try:
        doc = json.loads(line)
    except ValueError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("line is not a JSON object")
    _validate_canonical_fields(doc)
    if not doc["title"]:
        raise SchemaError("title must be non-empty")
    if not doc["dataset_id"]:
        raise SchemaError("dataset_id must be non-empty")
    if doc["language"] not in LANGUAGE_CODES:
        raise SchemaError(f"unknown language code {doc['language']!r}")
    keywords = doc["keywords"]
    if any(not kw for kw in keywords):
        raise SchemaError("keywords must not contain empty strings")
    if len(set(keywords)) != len(keywords):
        raise SchemaError("keywords must not contain duplicates")
    return DatasetRecord(
        portal_id=doc["portal_id"],
        dataset_id=doc["dataset_id"],
        title=doc["title"],
        description=doc["description"],
        keywords=tuple(keywords),
        landing_url=doc["landing_url"],
        language=doc["language"],
        publisher=doc["publisher"],
    )


def concat_text(record: DatasetRecord) -> str:
    """Join title, description, and keywords into one annotation string.

    Format: title, newline, description, newline, keywords joined by
    single spaces.  No other transformation is applied.
    """
    return f"{record.title}\n{record.description}\n{' '.join(record.keywords)}"


def write_corpus(records: Iterable[DatasetRecord], path: str | Path) -> int:
    """Write records to an NDJSON corpus file; returns the record count."""
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for record in records:
            fh.write(write_canonical(record))
            fh.write("\n")
            count += 1
    return count


def read_corpus(path: str | Path) -> Iterator[DatasetRecord]:
    """Yield records from an NDJSON corpus file, skipping blank lines."""
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield parse_canonical(line)
            except (ParseError, SchemaError) as exc:
                raise type(exc)(f"{path}:{lineno}: {exc}") from exc
