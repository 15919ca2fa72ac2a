"""HTTP session backend for the interactive attacker console.

Protocol (JSON over HTTP):

    POST /session against {"dims": "9x9" | [9, 9], "strategy": "border"}
        -> {"session_id": ..., "state": ...}
    POST /session/{id}/attack with {"vertex": [x, y]}
        -> {"response": ..., "state": ..., "verdict": ...}
    GET  /session/{id} -> current state

All game logic is server side; the client renders exactly what it gets.
Each session handles one attack at a time (turns are serialised per
session), and referee verdicts accompany every transition so an illegal
strategy move is surfaced rather than hidden.
"""

from __future__ import annotations

import itertools
import threading
from typing import Dict, Union

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from . import composite
from .grid import DomainError, GridDims, Vertex, in_bounds, parse_dims
from .referee import config_hash, validate_transition
from .responder import apply as apply_response


class NewSession(BaseModel):
    dims: Union[str, list]
    strategy: str = "auto"


class AttackBody(BaseModel):
    vertex: list = Field(min_length=2, max_length=2)


class _Session:
    def __init__(self, sid: int, dims: GridDims, strategy):
        self.sid = sid
        self.dims = dims
        self.strategy = strategy
        self.config = strategy.reset()
        self.steps = 0
        self.lock = threading.Lock()

    def state_json(self) -> dict:
        snap = self.strategy.snapshot()
        snap["session_id"] = self.sid
        snap["strategy"] = self.strategy.strategy_id
        snap["steps"] = self.steps
        snap["config_hash"] = config_hash(self.config)
        return snap


def create_app() -> FastAPI:
    app = FastAPI(title="eterngrid session backend")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: Dict[int, _Session] = {}
    counter = itertools.count(1)

    @app.post("/session")
    def new_session(body: NewSession):
        try:
            dims = parse_dims(body.dims) if isinstance(body.dims, str) else GridDims(*body.dims)
            kind = body.strategy
            if kind == "auto":
                kind = "border" if (dims.n % 7 == 2 and dims.m % 7 == 2) else "composite"
            strategy = composite.make_strategy(kind, dims)
        except (DomainError, TypeError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        sid = next(counter)
        sessions[sid] = _Session(sid, dims, strategy)
        return {"session_id": sid, "state": sessions[sid].state_json()}

    def _get(sid: int) -> _Session:
        try:
            return sessions[sid]
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no session {sid}")

    @app.get("/session/{sid}")
    def get_session(sid: int):
        return _get(sid).state_json()

    @app.post("/session/{sid}/attack")
    def attack(sid: int, body: AttackBody):
        sess = _get(sid)
        v = Vertex(int(body.vertex[0]), int(body.vertex[1]))
        if not in_bounds(v, sess.dims):
            raise HTTPException(status_code=400, detail=f"attack {tuple(v)} outside grid")
        with sess.lock:
            before = sess.config
            response = sess.strategy.respond(v)
            after = apply_response(before, response)
            verdict = validate_transition(before, after, v, sess.dims, certificate=response)
            if verdict.legal:
                sess.config = after
                sess.steps += 1
            return {
                "response": response.to_json(),
                "state": sess.state_json(),
                "verdict": verdict.to_json(),
            }

    return app
