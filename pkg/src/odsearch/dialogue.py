"""Conversational layer: sessions, state transitions, and bot replies.

A session is a small state machine: Idle, Presenting (a ranked hit list
being paged and refined), or Clarifying (waiting for the user to pick a
sense for an ambiguous query mention).  `DialogueEngine.step` is a pure
function of (session, event) given fixed index and linker resources, so
event transcripts replay deterministically.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, replace
from typing import Callable, Union

from .errors import LinkerUnavailable, SessionExpired
from .index import ConceptIndex, ResultSet
from .linker import ConceptLabels, LinkerBackend, Mention, is_concept_id

PAGE_SIZE = 5
MAX_SUGGESTIONS = 6
SESSION_TTL_SECONDS = 30 * 60

#: Control verbs usable as suggestion payloads next to concept ids.
MORE_PAYLOAD = "MORE"
RESET_PAYLOAD = "RESET"

GREETING = 'Hi! Ask me about open datasets - try "dogs in vienna".'
NO_CONCEPTS = (
    "I could not recognize any concepts in that. "
    'Try queries like "dogs in vienna", "air quality", or "schools".'
)


# --- events ---------------------------------------------------------------


@dataclass(frozen=True)
class UserText:
    text: str


@dataclass(frozen=True)
class PickSuggestion:
    payload: str


@dataclass(frozen=True)
class More:
    pass


@dataclass(frozen=True)
class Reset:
    pass


Event = Union[UserText, PickSuggestion, More, Reset]


# --- session state --------------------------------------------------------


@dataclass(frozen=True)
class Idle:
    pass


@dataclass(frozen=True)
class Presenting:
    query_concepts: frozenset[str]
    active_filters: frozenset[str]
    hits: tuple[tuple[int, int], ...]
    page: int = 0


@dataclass(frozen=True)
class Clarifying:
    pending: Mention
    resolved: frozenset[str]


State = Union[Idle, Presenting, Clarifying]


@dataclass(frozen=True)
class DialogueSession:
    session_id: str
    state: State = Idle()
    language_pref: str = "und"
    last_activity: float = 0.0


# --- replies --------------------------------------------------------------


@dataclass(frozen=True)
class Card:
    title: str
    portal_id: str
    language: str
    landing_url: str


@dataclass(frozen=True)
class Suggestion:
    label: str
    payload: str


@dataclass(frozen=True)
class BotReply:
    text: str
    cards: tuple[Card, ...] = ()
    suggestions: tuple[Suggestion, ...] = ()


class DialogueEngine:
    """Turns user events into linker and index calls."""

    def __init__(
        self,
        index: ConceptIndex,
        linker: LinkerBackend,
        labels: ConceptLabels,
        page_size: int = PAGE_SIZE,
        max_suggestions: int = MAX_SUGGESTIONS,
    ) -> None:
        self.index = index
        self.linker = linker
        self.labels = labels
        self.page_size = page_size
        self.max_suggestions = max_suggestions

    # -- public entry point --

    def step(
        self, session: DialogueSession, event: Event
    ) -> tuple[DialogueSession, BotReply]:
        """Apply one event; returns the new session and the bot's reply.

        Invalid events for the current state leave the session unchanged
        and produce an explanatory reply; a broken linker backend yields
        an apology instead of an exception.
        """
        if isinstance(event, Reset):
            return (
                replace(session, state=Idle()),
                BotReply(text=GREETING),
            )
        if isinstance(event, PickSuggestion):
            # Control chips arrive as picks; route them to their verbs.
            if event.payload == MORE_PAYLOAD:
                event = More()
            elif event.payload == RESET_PAYLOAD:
                return self.step(session, Reset())
        if isinstance(event, UserText):
            return self._on_text(session, event.text)
        if isinstance(event, More):
            return self._on_more(session)
        if isinstance(event, PickSuggestion):
            return self._on_pick(session, event.payload)
        return (session, BotReply(text="Sorry, I did not understand that."))

    # -- transitions --

    def _on_text(
        self, session: DialogueSession, text: str
    ) -> tuple[DialogueSession, BotReply]:
        if isinstance(session.state, Clarifying):
            return (session, self._clarify_reply(session, session.state.pending))
        detected = "und"
        detect = getattr(self.linker, "detect", None)
        if detect is not None:
            detected = detect(text)[0]
        language = detected
        if language == "und":
            language = session.language_pref
        if detected != "und" and session.language_pref == "und":
            session = replace(session, language_pref=detected)
        try:
            annotation = self.linker.link(text, language)
        except LinkerUnavailable:
            return (
                session,
                BotReply(
                    text="Sorry, the concept service is unavailable right now - "
                    "please try again in a moment."
                ),
            )
        if not annotation.mentions and not annotation.ambiguous:
            return (session, BotReply(text=NO_CONCEPTS))
        if annotation.ambiguous:
            pending = annotation.ambiguous[0]
            new_state = Clarifying(pending=pending, resolved=annotation.concepts)
            new_session = replace(session, state=new_state)
            return (new_session, self._clarify_reply(new_session, pending))
        return self._present(session, annotation.concepts)

    def _on_pick(
        self, session: DialogueSession, payload: str
    ) -> tuple[DialogueSession, BotReply]:
        state = session.state
        if isinstance(state, Clarifying):
            senses = {concept for concept, _ in state.pending.candidates}
            if payload not in senses:
                return (session, self._clarify_reply(session, state.pending))
            return self._present(
                replace(session, state=Idle()), state.resolved | {payload}
            )
        if isinstance(state, Presenting):
            if not is_concept_id(payload):
                return (
                    session,
                    BotReply(text="Please pick one of the suggested concepts."),
                )
            result = ResultSet(state.hits, state.query_concepts, state.active_filters)
            refined = self.index.refine(result, {payload})
            new_state = Presenting(
                query_concepts=refined.query_concepts,
                active_filters=refined.active_filters,
                hits=refined.hits,
                page=0,
            )
            new_session = replace(session, state=new_state)
            return (new_session, self._present_reply(new_session))
        return (
            session,
            BotReply(text="There is nothing to refine yet - ask me something first."),
        )

    def _on_more(
        self, session: DialogueSession
    ) -> tuple[DialogueSession, BotReply]:
        state = session.state
        if not isinstance(state, Presenting):
            return (
                session,
                BotReply(text="There are no results to page through yet."),
            )
        next_start = (state.page + 1) * self.page_size
        if next_start >= len(state.hits):
            return (session, BotReply(text="No further results."))
        new_session = replace(session, state=replace(state, page=state.page + 1))
        return (new_session, self._present_reply(new_session))

    # -- retrieval and rendering --

    def _present(
        self, session: DialogueSession, concepts: frozenset[str]
    ) -> tuple[DialogueSession, BotReply]:
        result = self.index.search_any(concepts)
        new_state = Presenting(
            query_concepts=result.query_concepts,
            active_filters=result.active_filters,
            hits=result.hits,
            page=0,
        )
        new_session = replace(session, state=new_state)
        return (new_session, self._present_reply(new_session))

    def _display_language(self, session: DialogueSession) -> str:
        return session.language_pref if session.language_pref != "und" else "en"

    def _label(self, session: DialogueSession, concept: str) -> str:
        return self.labels.label(concept, self._display_language(session))

    def _clarify_reply(self, session: DialogueSession, pending: Mention) -> BotReply:
        labels = [
            self._label(session, concept) for concept, _ in pending.candidates
        ]
        question = f"Did you mean {' or '.join(labels)}?"
        chips = tuple(
            Suggestion(label=label, payload=concept)
            for (concept, _), label in zip(pending.candidates, labels)
        )
        return BotReply(text=question, suggestions=chips)

    def _present_reply(self, session: DialogueSession) -> BotReply:
        state = session.state
        assert isinstance(state, Presenting)
        total = len(state.hits)
        query_labels = ", ".join(
            sorted(self._label(session, c) for c in state.query_concepts)
        )
        if not total:
            text = f"No datasets match {query_labels}."
            return BotReply(
                text=text,
                suggestions=(Suggestion(label="Start over", payload=RESET_PAYLOAD),),
            )
        start = state.page * self.page_size
        end = min(start + self.page_size, total)
        cards = tuple(
            Card(
                title=dataset.record.title,
                portal_id=dataset.record.portal_id,
                language=dataset.record.language,
                landing_url=dataset.record.landing_url,
            )
            for dataset in (
                self.index.record(ordinal)
                for ordinal, _ in state.hits[start:end]
            )
        )
        filter_note = ""
        if state.active_filters:
            filter_labels = ", ".join(
                sorted(self._label(session, c) for c in state.active_filters)
            )
            filter_note = f" (filtered by {filter_labels})"
        text = (
            f"Found {total} dataset{'s' if total != 1 else ''} for "
            f"{query_labels}{filter_note}. Showing {start + 1}-{end} of {total}."
        )
        result = ResultSet(state.hits, state.query_concepts, state.active_filters)
        chips = [
            Suggestion(label=self._label(session, concept), payload=concept)
            for concept, _ in self.index.top_cooccurring(
                result, self.max_suggestions
            )
        ]
        if end < total:
            chips.append(Suggestion(label="More results", payload=MORE_PAYLOAD))
        chips.append(Suggestion(label="Start over", payload=RESET_PAYLOAD))
        return BotReply(text=text, cards=cards, suggestions=tuple(chips))


class SessionStore:
    """In-memory session map with TTL eviction.

    Mutation is guarded by one lock; callers that need per-session
    serialization of events take :meth:`lock_for` around their step.
    """

    def __init__(
        self,
        ttl_seconds: float = SESSION_TTL_SECONDS,
        clock: Callable[[], float] = time.time,
    ) -> None:
        self.ttl_seconds = ttl_seconds
        self.clock = clock
        self._sessions: dict[str, DialogueSession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._mutex = threading.Lock()

    def create(self) -> DialogueSession:
        session = DialogueSession(
            session_id=uuid.uuid4().hex, last_activity=self.clock()
        )
        with self._mutex:
            self._sessions[session.session_id] = session
            self._locks[session.session_id] = threading.Lock()
        return session

    def get(self, session_id: str) -> DialogueSession:
        """Fetch a live session; unknown or stale ids raise SessionExpired."""
        with self._mutex:
            session = self._sessions.get(session_id)
        if session is None:
            raise SessionExpired(f"unknown session {session_id!r}")
        if self.clock() - session.last_activity > self.ttl_seconds:
            with self._mutex:
                self._sessions.pop(session_id, None)
                self._locks.pop(session_id, None)
            raise SessionExpired(f"session {session_id!r} expired")
        return session

    def put(self, session: DialogueSession) -> DialogueSession:
        """Store a session, stamping its last-activity time."""
        stamped = replace(session, last_activity=self.clock())
        with self._mutex:
            self._sessions[session.session_id] = stamped
            self._locks.setdefault(session.session_id, threading.Lock())
        return stamped

    def lock_for(self, session_id: str) -> threading.Lock:
        with self._mutex:
            return self._locks.setdefault(session_id, threading.Lock())

    def __len__(self) -> int:
        with self._mutex:
            return len(self._sessions)

    def gc(self, now: float | None = None) -> int:
        """Evict sessions idle longer than the TTL; returns the count."""
        cutoff = (self.clock() if now is None else now) - self.ttl_seconds
        with self._mutex:
            stale = [
                session_id
                for session_id, session in self._sessions.items()
                if session.last_activity < cutoff
            ]
            for session_id in stale:
                del self._sessions[session_id]
                self._locks.pop(session_id, None)
        return len(stale)
