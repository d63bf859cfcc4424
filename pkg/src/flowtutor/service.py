"""HTTP gateway exposing sessions to interactive clients.

Stateless apart from an in-memory session store: every response carries the
per-session revision number and a full snapshot, so clients need no local
state to re-render. Actions on one session are serialized; distinct sessions
proceed in parallel. Idle sessions expire after a configurable timeout.

Wire field names are frozen by ``wire_schema.json`` shipped with the package.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from importlib import resources
from typing import Callable

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from .edgelist import serialize_edgelist
from .session import SessionState, StepFeedback, apply_action, new_session, snapshot

DEFAULT_IDLE_TIMEOUT = 24 * 3600.0

_WIRE_LEVEL_CODES = {"malformed-action", "unknown-action"}


def load_wire_schema() -> dict:
    return json.loads(resources.files("flowtutor").joinpath("wire_schema.json").read_text("utf-8"))


class SessionRecord:
    __slots__ = ("state", "revision", "lock", "last_access")

    def __init__(self, state: SessionState, now: float):
        self.state = state
        self.revision = 0
        self.lock = threading.Lock()
        self.last_access = now


class SessionStore:
    """Concurrent session registry with lazy idle-timeout eviction."""

    def __init__(self, idle_timeout: float = DEFAULT_IDLE_TIMEOUT, clock: Callable[[], float] = time.monotonic):
        self.idle_timeout = idle_timeout
        self._clock = clock
        self._lock = threading.Lock()
        self._sessions: dict[str, SessionRecord] = {}

    def create(self, seed: int = 0) -> tuple[str, SessionRecord]:
        session_id = uuid.uuid4().hex
        record = SessionRecord(new_session(seed), self._clock())
        with self._lock:
            self._sweep_locked()
            self._sessions[session_id] = record
        return session_id, record

    def lookup(self, session_id: str) -> SessionRecord:
        now = self._clock()
        with self._lock:
            record = self._sessions.get(session_id)
            if record is not None and now - record.last_access > self.idle_timeout:
                del self._sessions[session_id]
                record = None
            if record is None:
                raise KeyError(session_id)
            record.last_access = now
            return record

    def _sweep_locked(self) -> None:
        now = self._clock()
        expired = [sid for sid, rec in self._sessions.items() if now - rec.last_access > self.idle_timeout]
        for sid in expired:
            del self._sessions[sid]

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)


class ActionRequest(BaseModel):
    action: dict
    revision: int | None = None


class CreateSessionRequest(BaseModel):
    seed: int = 0


def _error(status: int, error: str, message: str, **extra) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": error, "message": message, **extra})


def _not_found(session_id: str) -> JSONResponse:
    return _error(404, "not-found", f"no session {session_id}")


def _action_response(session_id: str, record: SessionRecord, feedback: StepFeedback) -> dict:
    return {
        "session_id": session_id,
        "revision": record.revision,
        "accepted": feedback.accepted,
        "findings": [f.to_dict() for f in feedback.messages],
        "data": feedback.data,
        "state_delta": feedback.state_delta,
        "snapshot": snapshot(record.state),
    }


def create_app(store: SessionStore | None = None) -> FastAPI:
    """Build the gateway application around the given (or a fresh) session store."""
    app = FastAPI(title="flowtutor", docs_url=None, redoc_url=None)
    app.state.store = store if store is not None else SessionStore()
    # sessions hold no credentials and the thin client may be served from
    # anywhere (file://, another port), so cross-origin use is open
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    def _apply(session_id: str, action: dict, revision: int | None):
        try:
            record = app.state.store.lookup(session_id)
        except KeyError:
            return _not_found(session_id)
        with record.lock:
            if revision is not None and revision != record.revision:
                return _error(
                    409,
                    "conflict",
                    f"request was made against revision {revision} but the session is at {record.revision}",
                    revision=record.revision,
                    snapshot=snapshot(record.state),
                )
            new_state, feedback = apply_action(record.state, action)
            if feedback.accepted:
                record.state = new_state
                record.revision += 1
            if not feedback.accepted and all(f.code in _WIRE_LEVEL_CODES for f in feedback.messages):
                return _error(
                    400,
                    "bad-request",
                    "malformed action",
                    findings=[f.to_dict() for f in feedback.messages],
                )
            return JSONResponse(status_code=200, content=_action_response(session_id, record, feedback))

    @app.get("/healthz")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/schema")
    def schema() -> dict:
        return load_wire_schema()

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionRequest | None = None) -> dict:
        seed = body.seed if body is not None else 0
        session_id, record = app.state.store.create(seed)
        return {"session_id": session_id, "revision": record.revision, "snapshot": snapshot(record.state)}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        try:
            record = app.state.store.lookup(session_id)
        except KeyError:
            return _not_found(session_id)
        with record.lock:
            return {"session_id": session_id, "revision": record.revision, "snapshot": snapshot(record.state)}

    @app.post("/sessions/{session_id}/actions")
    def post_action(session_id: str, body: ActionRequest):
        return _apply(session_id, body.action, body.revision)

    @app.get("/sessions/{session_id}/edgelist")
    def export_edgelist(session_id: str):
        try:
            record = app.state.store.lookup(session_id)
        except KeyError:
            return _not_found(session_id)
        with record.lock:
            return PlainTextResponse(serialize_edgelist(record.state.net))

    @app.put("/sessions/{session_id}/edgelist")
    async def import_edgelist(session_id: str, request: Request):
        text = (await request.body()).decode("utf-8", errors="replace")
        return _apply(session_id, {"type": "import_graph", "text": text}, None)

    return app
