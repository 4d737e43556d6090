"""HTTP JSON API over the index, linker, and dialogue engine.

Endpoints (JSON bodies, UTF-8):

* ``POST /v1/search``  - stateless text search.
* ``POST /v1/refine``  - stateless re-execution of search plus filters.
* ``POST /v1/chat``    - stateful dialogue; creates sessions on demand.
* ``GET  /v1/dataset/{portal_id}/{dataset_id}`` - stored record lookup.
* ``GET  /v1/health``  - liveness plus corpus counters.

Every error body has the shape ``{"error": {"code", "message"}}``.
"""

from __future__ import annotations

import logging
import threading
import time
from contextlib import asynccontextmanager
from dataclasses import dataclass
from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import data as bundled
from .dialogue import (
    MAX_SUGGESTIONS,
    BotReply,
    DialogueEngine,
    Event,
    More,
    PickSuggestion,
    Reset,
    SessionStore,
    UserText,
)
from .errors import LinkerUnavailable, SessionExpired
from .index import ConceptIndex, ResultSet, load_index
from .linker import (
    ConceptGraph,
    ConceptLabels,
    ExternalLinkerClient,
    Lexicon,
    LinkerBackend,
    LocalLinker,
    is_concept_id,
)
from .records import LANGUAGE_CODES

log = logging.getLogger("odsearch.service")

MAX_SEARCH_HITS = 50
GC_INTERVAL_SECONDS = 60.0


@dataclass
class ServiceResources:
    """Shared read-only resources plus the mutable session store."""

    index: ConceptIndex
    linker: LinkerBackend
    labels: ConceptLabels
    engine: DialogueEngine
    store: SessionStore


def build_resources(
    index: ConceptIndex,
    lexicon: Lexicon | None = None,
    graph: ConceptGraph | None = None,
    labels: ConceptLabels | None = None,
    profiles: tuple | None = None,
    external_linker_url: str | None = None,
    session_ttl: float | None = None,
) -> ServiceResources:
    """Wire resources, defaulting to the bundled lexicon/graph/profiles."""
    lexicon = lexicon if lexicon is not None else bundled.bundled_lexicon()
    graph = graph if graph is not None else bundled.bundled_graph()
    labels = labels if labels is not None else bundled.bundled_labels()
    profiles = profiles if profiles is not None else bundled.bundled_profiles()
    linker: LinkerBackend
    if external_linker_url:
        linker = ExternalLinkerClient(external_linker_url)
    else:
        linker = LocalLinker(lexicon, graph, profiles)
    engine = DialogueEngine(index, linker, labels)
    store = SessionStore(
        ttl_seconds=session_ttl if session_ttl is not None else 30 * 60
    )
    return ServiceResources(
        index=index, linker=linker, labels=labels, engine=engine, store=store
    )


def resources_from_files(
    index_path: str,
    lexicon_path: str | None = None,
    graph_path: str | None = None,
    labels_path: str | None = None,
    profiles_dir: str | None = None,
    external_linker_url: str | None = None,
    session_ttl: float | None = None,
) -> ServiceResources:
    from .langid import load_profiles

    return build_resources(
        index=load_index(index_path),
        lexicon=Lexicon.from_tsv(lexicon_path) if lexicon_path else None,
        graph=ConceptGraph.from_tsv(graph_path) if graph_path else None,
        labels=ConceptLabels.from_tsv(labels_path) if labels_path else None,
        profiles=load_profiles(profiles_dir) if profiles_dir else None,
        external_linker_url=external_linker_url,
        session_ttl=session_ttl,
    )


class SearchBody(BaseModel):
    text: str
    lang: str | None = None


class RefineBody(BaseModel):
    query_concepts: list[str]
    filters: list[str]


class ChatBody(BaseModel):
    session_id: str | None = None
    event: dict[str, Any]


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error": {"code": code, "message": message}},
    )


def _result_payload(
    res: ServiceResources,
    result: ResultSet,
    display_lang: str,
    ambiguous: list[dict[str, Any]],
) -> dict[str, Any]:
    index = res.index
    hits = []
    for rank, (ordinal, score) in enumerate(result.hits[:MAX_SEARCH_HITS], start=1):
        record = index.record(ordinal).record
        hits.append(
            {
                "rank": rank,
                "score": score,
                "title": record.title,
                "portal": record.portal_id,
                "language": record.language,
                "landing_url": record.landing_url,
            }
        )
    suggestions = [
        {
            "id": concept,
            "label": res.labels.label(concept, display_lang),
            "doc_count": doc_count,
        }
        for concept, doc_count in index.top_cooccurring(result, MAX_SUGGESTIONS)
    ]
    return {
        "query_concepts": [
            {"id": concept, "label": res.labels.label(concept, display_lang)}
            for concept in sorted(result.query_concepts)
        ],
        "hits": hits,
        "suggestions": suggestions,
        "ambiguous": ambiguous,
    }


def _reply_payload(reply: BotReply) -> dict[str, Any]:
    return {
        "text": reply.text,
        "cards": [
            {
                "title": card.title,
                "portal_id": card.portal_id,
                "language": card.language,
                "landing_url": card.landing_url,
            }
            for card in reply.cards
        ],
        "suggestions": [
            {"label": chip.label, "payload": chip.payload}
            for chip in reply.suggestions
        ],
    }


def parse_chat_event(raw: dict[str, Any]) -> Event:
    """Decode the wire event; raises ValueError on malformed input."""
    kind = raw.get("type")
    if kind == "text":
        text = raw.get("text")
        if not isinstance(text, str):
            raise ValueError("text event needs a string 'text'")
        return UserText(text)
    if kind == "pick":
        payload = raw.get("payload")
        if not isinstance(payload, str):
            raise ValueError("pick event needs a string 'payload'")
        return PickSuggestion(payload)
    if kind == "more":
        return More()
    if kind == "reset":
        return Reset()
    raise ValueError(f"unknown event type {kind!r}")


def create_app(res: ServiceResources) -> FastAPI:
    """Build the FastAPI application around shared resources."""

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        stop = threading.Event()

        def run_gc() -> None:
            while not stop.wait(GC_INTERVAL_SECONDS):
                evicted = res.store.gc()
                if evicted:
                    log.info("session gc evicted %d", evicted)

        thread = threading.Thread(target=run_gc, daemon=True, name="session-gc")
        thread.start()
        try:
            yield
        finally:
            stop.set()

    app = FastAPI(title="odsearch", lifespan=lifespan)

    @app.exception_handler(RequestValidationError)
    async def on_validation(request: Request, exc: RequestValidationError):
        return _error(400, "bad_request", str(exc.errors()[:1]))

    @app.exception_handler(LinkerUnavailable)
    async def on_linker_down(request: Request, exc: LinkerUnavailable):
        return _error(503, "linker_unavailable", str(exc))

    @app.exception_handler(SessionExpired)
    async def on_session_expired(request: Request, exc: SessionExpired):
        return _error(404, "session_expired", str(exc))

    @app.exception_handler(StarletteHTTPException)
    async def on_http_error(request: Request, exc: StarletteHTTPException):
        code = {400: "bad_request", 404: "not_found"}.get(
            exc.status_code, "error"
        )
        return _error(exc.status_code, code, str(exc.detail))

    @app.middleware("http")
    async def request_log(request: Request, call_next):
        started = time.perf_counter()
        response = await call_next(request)
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        log.info(
            "%s %s %d %.1fms",
            request.method,
            request.url.path,
            response.status_code,
            elapsed_ms,
        )
        return response

    @app.post("/v1/search")
    def search(body: SearchBody):
        if body.lang is not None and body.lang not in LANGUAGE_CODES:
            return _error(400, "bad_request", f"unknown lang {body.lang!r}")
        language = body.lang or "und"
        if language == "und":
            detect = getattr(res.linker, "detect", None)
            if detect is not None:
                language = detect(body.text)[0]
        annotation = res.linker.link(body.text, language)
        display = language if language != "und" else "en"
        result = res.index.search_any(annotation.concepts)
        ambiguous = [
            {
                "surface": mention.surface,
                "senses": [
                    {"id": concept, "label": res.labels.label(concept, display)}
                    for concept, _ in mention.candidates
                ],
            }
            for mention in annotation.ambiguous
        ]
        return _result_payload(res, result, display, ambiguous)

    @app.post("/v1/refine")
    def refine(body: RefineBody):
        for concept in (*body.query_concepts, *body.filters):
            if not is_concept_id(concept):
                return _error(400, "bad_request", f"bad concept id {concept!r}")
        result = res.index.search_any(body.query_concepts)
        result = res.index.refine(result, body.filters)
        return _result_payload(res, result, "en", [])

    @app.post("/v1/chat")
    def chat(body: ChatBody):
        try:
            event = parse_chat_event(body.event)
        except ValueError as exc:
            return _error(400, "bad_request", str(exc))
        if body.session_id is None:
            session = res.store.create()
        else:
            session = res.store.get(body.session_id)
        with res.store.lock_for(session.session_id):
            new_session, reply = res.engine.step(session, event)
            res.store.put(new_session)
        return {
            "session_id": new_session.session_id,
            "reply": _reply_payload(reply),
        }

    @app.get("/v1/dataset/{portal_id}/{dataset_id}")
    def dataset(portal_id: str, dataset_id: str):
        ordinal = res.index.ordinal(portal_id, dataset_id)
        if ordinal is None:
            return _error(
                404, "not_found", f"no dataset {portal_id}/{dataset_id}"
            )
        stored = res.index.record(ordinal)
        record = stored.record
        return {
            "portal_id": record.portal_id,
            "dataset_id": record.dataset_id,
            "title": record.title,
            "description": record.description,
            "keywords": list(record.keywords),
            "landing_url": record.landing_url,
            "language": record.language,
            "publisher": record.publisher,
            "concepts": [
                {"id": concept, "label": res.labels.label(concept)}
                for concept in sorted(stored.concepts)
            ],
        }

    @app.get("/v1/health")
    def health():
        return {
            "status": "ok",
            "datasets": len(res.index),
            "concepts": res.index.concept_count,
        }

    return app
