"""Local HTTP API backing the curation UI.

A session starts with an expansion and accumulates accept/reject decisions.
Every event is appended to an on-disk JSON-lines log before it is
acknowledged, so a restart loses nothing: session state is always a pure
replay of its log. The export is the expanded list minus the rejected words
(pending words are kept, filtering them is the next rater's job) plus the
decisions as an annotation CSV seeded with the curator's labels.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .colex import expand_colex, load_colex_bundle
from .embeddings import (DEFAULT_TAU, DEFAULT_TOP_N, expand_centroid,
                         expand_threshold, load_embeddings)
from .errors import LexkitError, NotExpandable
from .synonyms import expand_synonym, load_synonym_graph
from .words import InvalidWord, WordList, load_word_list

DECISIONS = ("accept", "reject")


@dataclass
class ExpansionResources:
    """Read-only expansion backends, loaded once at startup.

    Load failures are remembered per method and surface as 503 on use, so a
    broken resource does not take the whole service down.
    """

    colex_graph: object = None
    synonym_graph: object = None
    space: object = None
    default_lang: str = "en"
    default_tau: float = DEFAULT_TAU
    load_errors: dict = field(default_factory=dict)

    @classmethod
    def from_paths(cls, graph=None, edges=None, vectors=None, ranking=None,
                   top_n: int = DEFAULT_TOP_N, default_lang: str = "en",
                   default_tau: float = DEFAULT_TAU) -> "ExpansionResources":
        resources = cls(default_lang=default_lang, default_tau=default_tau)
        if graph:
            try:
                resources.colex_graph = load_colex_bundle(graph)
            except (LexkitError, OSError) as exc:
                resources.load_errors["colex"] = str(exc)
        if edges:
            try:
                resources.synonym_graph = load_synonym_graph(edges)
            except (LexkitError, OSError) as exc:
                resources.load_errors["synonym"] = str(exc)
        if vectors and ranking:
            try:
                ranking_list = load_word_list(ranking)
                resources.space = load_embeddings(vectors, ranking_list,
                                                  top_n=top_n)
            except (LexkitError, OSError) as exc:
                resources.load_errors["embedding-threshold"] = str(exc)
                resources.load_errors["embedding-centroid"] = str(exc)
        return resources

    def methods(self) -> list[str]:
        out = []
        if self.colex_graph is not None:
            out.append("colex")
        if self.synonym_graph is not None:
            out.append("synonym")
        if self.space is not None:
            out.extend(["embedding-threshold", "embedding-centroid"])
        return out

    def known_methods(self) -> set[str]:
        return {"colex", "synonym", "embedding-threshold",
                "embedding-centroid"}

    def expand(self, method: str, seeds: WordList, params: dict):
        lang = params.get("lang", self.default_lang)
        tau = float(params.get("tau", self.default_tau))
        if method == "colex":
            return expand_colex(self.colex_graph, seeds, lang)
        if method == "synonym":
            return expand_synonym(self.synonym_graph, seeds)
        if method == "embedding-threshold":
            return expand_threshold(self.space, seeds, tau=tau)
        return expand_centroid(self.space, seeds, tau=tau)

    def colex_languages(self) -> list[str]:
        if self.colex_graph is None:
            return []
        return list(self.colex_graph.languages)


@dataclass
class SessionState:
    """Pure fold of a session's event log."""

    session_id: str
    method: str = ""
    params: dict = field(default_factory=dict)
    annotator: str = "curator"
    seeds: list = field(default_factory=list)
    candidates: list = field(default_factory=list)
    unmatched: list = field(default_factory=list)
    decisions: dict = field(default_factory=dict)

    def apply(self, event: dict) -> None:
        if event["event"] == "expand":
            self.method = event["method"]
            self.params = event.get("params", {})
            self.annotator = event.get("annotator", self.annotator)
            self.seeds = list(event["seeds"])
            self.candidates = list(event["expanded"])
            self.unmatched = list(event["unmatched"])
            # decisions survive a re-expansion; words that dropped out keep
            # their entry in the log but no longer show up in the candidates
        elif event["event"] == "decide":
            self.decisions[event["word"]] = event["decision"]

    def counts(self) -> dict:
        accepted = sum(1 for w in self.candidates
                       if self.decisions.get(w) == "accept")
        rejected = sum(1 for w in self.candidates
                       if self.decisions.get(w) == "reject")
        return {
            "total": len(self.candidates),
            "accepted": accepted,
            "rejected": rejected,
            "pending": len(self.candidates) - accepted - rejected,
        }

    def export_words(self) -> list[str]:
        return [w for w in self.candidates
                if self.decisions.get(w) != "reject"]

    def export_wordlist_text(self) -> str:
        return "".join(w + "\n" for w in self.export_words())

    def export_annotations_csv(self) -> str:
        lines = ["word,rater,label"]
        for word in sorted(self.candidates):
            decision = self.decisions.get(word)
            if decision is None:
                continue
            label = "relevant" if decision == "accept" else "irrelevant"
            lines.append(f"{word},{self.annotator},{label}")
        return "\n".join(lines) + "\n"

    def view(self) -> dict:
        return {
            "session_id": self.session_id,
            "method": self.method,
            "params": self.params,
            "annotator": self.annotator,
            "seeds": self.seeds,
            "candidates": self.candidates,
            "unmatched": self.unmatched,
            "decisions": {w: d for w, d in self.decisions.items()
                          if w in set(self.candidates)},
            "counts": self.counts(),
        }


class SessionStore:
    """Append-only JSONL log per session, replayed into state on demand."""

    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._states: dict[str, SessionState] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def _log_path(self, session_id: str) -> Path:
        return self.directory / f"{session_id}.jsonl"

    def _lock_for(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    def new_session_id(self) -> str:
        return uuid.uuid4().hex

    def exists(self, session_id: str) -> bool:
        return (session_id in self._states
                or self._log_path(session_id).exists())

    def append(self, session_id: str, event: dict) -> SessionState:
        """Durably log the event, then fold it into the cached state."""
        with self._lock_for(session_id):
            state = self._load_unlocked(session_id)
            with open(self._log_path(session_id), "a",
                      encoding="utf-8") as fh:
                fh.write(json.dumps(event, sort_keys=True) + "\n")
            state.apply(event)
            self._states[session_id] = state
            return state

    def get(self, session_id: str) -> SessionState:
        with self._lock_for(session_id):
            return self._load_unlocked(session_id)

    def replay(self, session_id: str) -> SessionState:
        """Fresh fold of the on-disk log, bypassing the cache."""
        state = SessionState(session_id=session_id)
        path = self._log_path(session_id)
        if path.exists():
            with open(path, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        state.apply(json.loads(line))
        return state

    def _load_unlocked(self, session_id: str) -> SessionState:
        if session_id not in self._states:
            self._states[session_id] = self.replay(session_id)
        return self._states[session_id]


class ExpandRequest(BaseModel):
    seeds: list[str] = Field(min_length=1)
    method: str
    params: dict = Field(default_factory=dict)
    session_id: str | None = None
    annotator: str = "curator"


class DecideRequest(BaseModel):
    word: str
    decision: str


def create_app(resources: ExpansionResources, store: SessionStore) -> FastAPI:
    app = FastAPI(title="lexkit curation service")
    # single-tenant local tool; the UI is served from another local port
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.get("/methods")
    def methods():
        return {
            "methods": resources.methods(),
            "unavailable": resources.load_errors,
            "colex_languages": resources.colex_languages(),
            "defaults": {"lang": resources.default_lang,
                         "tau": resources.default_tau},
        }

    @app.post("/expand")
    def expand(request: ExpandRequest):
        if request.method not in resources.known_methods():
            raise HTTPException(400, f"unknown method {request.method!r}")
        if request.method not in resources.methods():
            detail = resources.load_errors.get(
                request.method, "resource not loaded")
            raise HTTPException(503, f"{request.method}: {detail}")
        try:
            seeds = WordList(request.seeds, name="seeds")
        except InvalidWord as exc:
            raise HTTPException(400, str(exc))
        if len(seeds) == 0:
            raise HTTPException(400, "no valid seed words")
        session_id = request.session_id
        if session_id is not None and not store.exists(session_id):
            raise HTTPException(404, f"unknown session {session_id!r}")
        try:
            expansion = resources.expand(request.method, seeds,
                                         request.params)
            expanded = list(expansion.expanded)
            unmatched = list(expansion.unmatched)
            expandable = expansion.expandable
        except NotExpandable:
            expanded = list(seeds)
            unmatched = list(seeds)
            expandable = False
        except LexkitError as exc:
            raise HTTPException(400, str(exc))
        except (TypeError, ValueError) as exc:
            raise HTTPException(400, f"bad params: {exc}")
        if session_id is None:
            session_id = store.new_session_id()
        state = store.append(session_id, {
            "event": "expand",
            "method": request.method,
            "params": request.params,
            "annotator": request.annotator,
            "seeds": list(seeds),
            "expanded": expanded,
            "unmatched": unmatched,
        })
        return {
            "session_id": session_id,
            "method": request.method,
            "seeds": list(seeds),
            "expanded": expanded,
            "new_words": [w for w in expanded if w not in seeds.as_set()],
            "unmatched": unmatched,
            "expandable": expandable,
            "counts": state.counts(),
            "decisions": state.view()["decisions"],
        }

    @app.post("/session/{session_id}/decide")
    def decide(session_id: str, request: DecideRequest):
        if not store.exists(session_id):
            raise HTTPException(404, f"unknown session {session_id!r}")
        if request.decision not in DECISIONS:
            raise HTTPException(400,
                                f"decision must be one of {DECISIONS}")
        state = store.get(session_id)
        if request.word not in set(state.candidates):
            raise HTTPException(400,
                                f"{request.word!r} is not a candidate")
        state = store.append(session_id, {
            "event": "decide",
            "word": request.word,
            "decision": request.decision,
        })
        return {"ok": True, "word": request.word,
                "decision": request.decision, "counts": state.counts()}

    @app.get("/session/{session_id}")
    def session_view(session_id: str):
        if not store.exists(session_id):
            raise HTTPException(404, f"unknown session {session_id!r}")
        return store.get(session_id).view()

    @app.get("/session/{session_id}/export")
    def export(session_id: str):
        if not store.exists(session_id):
            raise HTTPException(404, f"unknown session {session_id!r}")
        state = store.get(session_id)
        return {
            "session_id": session_id,
            "wordlist": state.export_wordlist_text(),
            "annotations_csv": state.export_annotations_csv(),
            "counts": state.counts(),
        }

    return app
