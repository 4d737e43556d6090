"""Portal harvesting: offline CKAN package dumps and the live CKAN API.

Malformed packages never abort a harvest; they are skipped with one
``SKIP <portal_id> <file-or-offset> <reason>`` line on the diagnostic
stream (the ``odsearch.harvest`` logger).
"""

from __future__ import annotations

import json
import logging
import time
from pathlib import Path
from typing import Any, Callable, Iterator

import requests

from .errors import IoError, MalformedMetadata, NetworkError, ParseError
from .records import DatasetRecord, PortalSpec, parse_ckan_package

log = logging.getLogger("odsearch.harvest")

DEFAULT_PAGE_SIZE = 100
RETRY_ATTEMPTS = 3
RETRY_BASE_DELAY = 0.5  # seconds; doubles per attempt

SEARCH_PATH = "/api/3/action/package_search"


def harvest_portal(
    spec: PortalSpec,
    mode: str,
    source: str | Path | None = None,
    page_size: int = DEFAULT_PAGE_SIZE,
    *,
    sleep: Callable[[float], None] = time.sleep,
) -> Iterator[DatasetRecord]:
    """Stream one record per package from a portal.

    ``mode`` is "offline" (source: a directory of CKAN package JSON
    files) or "online" (source: the portal API base URL, defaulting to
    ``spec.api_base_url``).  Records carry ``spec.portal_id``; malformed
    packages and (portal_id, dataset_id) duplicates are skipped, never
    fatal.  ``sleep`` exists so tests can skip the retry backoff.
    """
    if page_size <= 0:
        raise ValueError("page_size must be positive")
    if mode == "offline":
        if source is None:
            raise ValueError("offline harvest requires a source directory")
        return _harvest_directory(spec, Path(source))
    if mode == "online":
        base_url = str(source) if source else spec.api_base_url
        if not base_url:
            raise ValueError("online harvest requires an API base URL")
        return _harvest_api(spec, base_url, page_size, sleep)
    raise ValueError(f"unknown harvest mode {mode!r}")


def _harvest_directory(spec: PortalSpec, root: Path) -> Iterator[DatasetRecord]:
    if not root.is_dir():
        raise IoError(f"not a directory: {root}")
    seen: set[tuple[str, str]] = set()
    for path in sorted(root.iterdir()):
        if not path.is_file() or path.suffix != ".json":
            continue
        try:
            raw = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise IoError(f"cannot read {path}: {exc}") from exc
        try:
            record = parse_ckan_package(raw, portal_id=spec.portal_id)
        except (ParseError, MalformedMetadata) as exc:
            log.warning("SKIP %s %s %s", spec.portal_id, path.name, exc)
            continue
        key = (record.portal_id, record.dataset_id)
        if key in seen:
            log.warning(
                "SKIP %s %s duplicate dataset id %r",
                spec.portal_id,
                path.name,
                record.dataset_id,
            )
            continue
        seen.add(key)
        yield record


def _fetch_page(
    url: str,
    params: dict[str, int],
    session: requests.Session,
    sleep: Callable[[float], None],
) -> dict[str, Any]:
    """GET one package_search page with bounded retries."""
    delay = RETRY_BASE_DELAY
    last_error: Exception | None = None
    for attempt in range(RETRY_ATTEMPTS):
        if attempt:
            sleep(delay)
            delay *= 2
        try:
            response = session.get(url, params=params, timeout=30)
            response.raise_for_status()
            payload = response.json()
        except (requests.RequestException, ValueError) as exc:
            last_error = exc
            continue
        if isinstance(payload, dict):
            return payload
        last_error = NetworkError("response is not a JSON object")
    raise NetworkError(
        f"GET {url} failed after {RETRY_ATTEMPTS} attempts: {last_error}"
    )


def _harvest_api(
    spec: PortalSpec,
    base_url: str,
    page_size: int,
    sleep: Callable[[float], None],
) -> Iterator[DatasetRecord]:
    url = base_url.rstrip("/") + SEARCH_PATH
    seen: set[tuple[str, str]] = set()
    start = 0
    total: int | None = None
    with requests.Session() as session:
        while True:
            payload = _fetch_page(
                url, {"rows": page_size, "start": start}, session, sleep
            )
            result = payload.get("result")
            if not isinstance(result, dict):
                raise NetworkError(f"GET {url} returned no 'result' object")
            packages = result.get("results")
            if not isinstance(packages, list):
                packages = []
            if total is None and isinstance(result.get("count"), int):
                total = result["count"]
            for offset, package in enumerate(packages):
                try:
                    if not isinstance(package, dict):
                        raise MalformedMetadata("package is not a JSON object")
                    record = parse_ckan_package(package, portal_id=spec.portal_id)
                except (ParseError, MalformedMetadata) as exc:
                    log.warning(
                        "SKIP %s offset=%d %s", spec.portal_id, start + offset, exc
                    )
                    continue
                key = (record.portal_id, record.dataset_id)
                if key in seen:
                    log.warning(
                        "SKIP %s offset=%d duplicate dataset id %r",
                        spec.portal_id,
                        start + offset,
                        record.dataset_id,
                    )
                    continue
                seen.add(key)
                yield record
            if not packages:
                return
            start += len(packages)
            if total is not None and start >= total:
                return
