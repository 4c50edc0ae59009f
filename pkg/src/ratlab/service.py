"""Game sessions over HTTP.

A session holds one d-heap position played between a human and the engine.
The engine replies synchronously inside the same request, so every response
already shows the position the human faces next.  Session state lives in
memory; an optional JSON-lines event log records creations and moves.

The engine plays winning_move whenever the position is N.  At P positions
(where every reply loses) the style matters: "optimal" concedes with the
lexicographically smallest legal subtraction, "teasing" picks the legal move
whose result lands closest in L1 distance to a rat vector or proper shortcut,
which tends to bait rule-(b) mistakes out of the opponent.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from enum import Enum

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import oracle, rules
from .sequences import check_dimension, check_vector, mersenne, rat_vector

# practical session caps; the engine itself has no such limits
MAX_D = 8
MAX_COORD = 10**6

# teasing gives up and concedes plainly past this many nearby special vectors
TEASE_CAP = 3000
TEASE_COORD = 1200
TEASE_RADIUS = 3


class Turn(str, Enum):
    HUMAN = "human"
    ENGINE = "engine"


class Status(str, Enum):
    ONGOING = "ongoing"
    HUMAN_WON = "human_won"
    ENGINE_WON = "engine_won"


class Style(str, Enum):
    OPTIMAL = "optimal"
    TEASING = "teasing"


class UnknownSession(KeyError):
    pass


class WrongTurn(RuntimeError):
    pass


@dataclass(frozen=True)
class MoveRecord:
    mover: Turn
    subtraction: tuple[int, ...]
    position: tuple[int, ...]  # resulting position

    def as_dict(self) -> dict:
        return {"mover": self.mover.value,
                "subtraction": list(self.subtraction),
                "position": list(self.position)}


@dataclass
class GameSession:
    id: str
    d: int
    position: tuple[int, ...]
    turn: Turn
    status: Status
    engine_style: Style
    history: list[MoveRecord] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def snapshot(self) -> dict:
        return {
            "id": self.id,
            "d": self.d,
            "position": list(self.position),
            "turn": self.turn.value,
            "status": self.status.value,
            "engine_style": self.engine_style.value,
            "history": [m.as_dict() for m in self.history],
        }


def _lex_smallest_move(x) -> tuple[int, ...] | None:
    """Unit subtraction on the last nonempty heap; always allowed."""
    for i in range(len(x) - 1, -1, -1):
        if x[i] > 0:
            return tuple(1 if j == i else 0 for j in range(len(x)))
    return None


def _special_vectors(x) -> list[tuple[int, ...]] | None:
    """Rats and proper shortcuts within x + TEASE_RADIUS, or None past the cap.

    The count is estimated from the periodic densities before anything is
    enumerated; shortcut_set is quadratic in the rat count, so it is only
    called once the estimate is known to be small.
    """
    d = len(x)
    bound = tuple(c + TEASE_RADIUS for c in x)
    periods = bound[-1] // mersenne(d) + 2
    if bound[-1] > TEASE_COORD or (2 ** (d - 1) + 3 ** (d - 1)) * periods > TEASE_CAP:
        return None
    out = []
    n = 1
    while True:
        v = rat_vector(d, n)
        if any(a > b for a, b in zip(v, bound)):
            break
        out.append(v)
        n += 1
    out.extend(w for w in oracle.shortcut_set(d, bound) if any(w))
    return out


def _l1_ball(d: int, radius: int, _prefix=()):
    """All integer offset vectors of L1 norm exactly radius."""
    if d == 1:
        yield _prefix + (radius,)
        if radius:
            yield _prefix + (-radius,)
        return
    for a in range(radius + 1):
        for v in ((a,) if a == 0 else (a, -a)):
            yield from _l1_ball(d - 1, radius - a, _prefix + (v,))


def _teasing_move(x) -> tuple[int, ...] | None:
    """Legal subtraction whose result sits nearest a rat or proper shortcut.

    Scans radii 0..TEASE_RADIUS around each nearby special vector and takes
    the lexicographically smallest subtraction at the first radius that has
    any legal hit.  None when nothing special is close or there are too many
    candidates to scan.
    """
    specials = _special_vectors(x)
    if not specials:
        return None
    d = len(x)
    for radius in range(TEASE_RADIUS + 1):
        best = None
        for delta in _l1_ball(d, radius):
            for c in specials:
                y = tuple(a + b for a, b in zip(c, delta))
                if any(v < 0 for v in y) or any(a > b for a, b in zip(y, x)):
                    continue
                s = tuple(a - b for a, b in zip(x, y))
                if not any(s):
                    continue
                if rules.classify_subtraction(d, s).allowed and (best is None or s < best):
                    best = s
        if best is not None:
            return best
    return None


def _engine_subtraction(x, style: Style) -> tuple[int, ...] | None:
    found = rules.winning_move(x)
    if found is not None:
        return found.subtraction
    if style is Style.TEASING:
        s = _teasing_move(x)
        if s is not None:
            return s
    return _lex_smallest_move(x)


class GameService:
    """All session logic, independent of the HTTP wiring."""

    def __init__(self, event_log: str | None = None):
        self._sessions: dict[str, GameSession] = {}
        self._registry_lock = threading.Lock()
        self._event_log = event_log

    def _log(self, event: str, **payload) -> None:
        if self._event_log is None:
            return
        record = {"ts": time.time(), "event": event, **payload}
        with open(self._event_log, "a") as fh:
            fh.write(json.dumps(record) + "\n")

    def create_session(self, d: int, start, engine_moves_first: bool = False,
                       engine_style: Style | str = Style.OPTIMAL) -> GameSession:
        check_dimension(d)
        if d > MAX_D:
            raise ValueError(f"sessions support d <= {MAX_D}, got {d}")
        x = check_vector(start, d)
        if max(x) > MAX_COORD:
            raise ValueError(f"session heaps are capped at {MAX_COORD}")
        style = Style(engine_style)
        turn = Turn.ENGINE if engine_moves_first else Turn.HUMAN
        session = GameSession(id=secrets.token_hex(8), d=d, position=x,
                              turn=turn, status=Status.ONGOING, engine_style=style)
        if not any(x):
            # nothing to play: whoever is to act has no move and loses
            session.status = Status.HUMAN_WON if engine_moves_first else Status.ENGINE_WON
        elif engine_moves_first:
            self._engine_turn(session)
        with self._registry_lock:
            self._sessions[session.id] = session
        self._log("create", session=session.id, d=d, start=list(x),
                  engine_moves_first=engine_moves_first, style=style.value)
        return session

    def get(self, session_id: str) -> GameSession:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise UnknownSession(session_id) from None

    def _engine_turn(self, session: GameSession) -> None:
        s = _engine_subtraction(session.position, session.engine_style)
        session.position = tuple(a - b for a, b in zip(session.position, s))
        session.history.append(MoveRecord(Turn.ENGINE, s, session.position))
        session.turn = Turn.HUMAN
        if not any(session.position):
            session.status = Status.ENGINE_WON
        self._log("move", session=session.id, mover="engine",
                  subtraction=list(s), position=list(session.position))

    def submit_move(self, session_id: str, subtraction) -> dict:
        """Apply a human subtraction; the engine answers in the same call.

        Forbidden subtractions leave the session untouched and come back with
        accepted=False plus the verdict.  Illegal input (wrong length,
        negative heaps) raises instead.
        """
        session = self.get(session_id)
        with session.lock:
            if session.status is not Status.ONGOING:
                raise WrongTurn("the game is over")
            if session.turn is not Turn.HUMAN:
                raise WrongTurn("it is the engine's turn")
            s = check_vector(subtraction, session.d)
            if any(a > b for a, b in zip(s, session.position)):
                raise rules.NegativeSubtraction(
                    f"subtraction {s} exceeds position {session.position}")
            verdict = rules.classify_subtraction(session.d, s)
            if not verdict.allowed:
                self._log("rejected", session=session.id, subtraction=list(s),
                          status=str(verdict.status))
                return {"accepted": False,
                        "verdict": _verdict_payload(verdict),
                        "session": session.snapshot()}
            session.position = tuple(a - b for a, b in zip(session.position, s))
            session.history.append(MoveRecord(Turn.HUMAN, s, session.position))
            session.turn = Turn.ENGINE
            self._log("move", session=session.id, mover="human",
                      subtraction=list(s), position=list(session.position))
            if not any(session.position):
                session.status = Status.HUMAN_WON
            else:
                self._engine_turn(session)
            return {"accepted": True, "verdict": None, "session": session.snapshot()}

    def hint(self, session_id: str) -> dict:
        session = self.get(session_id)
        with session.lock:
            found = rules.winning_move(session.position)
        if found is None:
            return {"status": "P", "subtraction": None, "target": None, "rat_index": None}
        return {"status": "N",
                "subtraction": list(found.subtraction),
                "target": list(found.target),
                "rat_index": found.rat_index}


_CONDITION_TEXT = {
    rules.Legality.FORBIDDEN_A: "condition a (rat vector)",
    rules.Legality.FORBIDDEN_B: "condition b (proper shortcut)",
    rules.Legality.FORBIDDEN_ZERO: "zero subtraction",
}


def _verdict_payload(verdict: rules.MoveVerdict) -> dict:
    return {"status": str(verdict.status),
            "message": f"forbidden: {_CONDITION_TEXT[verdict.status]}",
            "witness": list(verdict.witness)}


def create_app(event_log: str | None = None):
    """FastAPI wiring around a fresh GameService."""
    service = GameService(event_log=event_log)
    app = FastAPI(title="ratlab game service")
    app.state.service = service
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    def error(status: int, code: str, message: str, detail=None):
        return JSONResponse(status_code=status,
                            content={"code": code, "message": message, "detail": detail})

    @app.post("/games", status_code=201)
    async def create_game(request: Request):
        body = await request.json()
        try:
            session = service.create_session(
                d=body.get("d"),
                start=body.get("start"),
                engine_moves_first=bool(body.get("engine_moves_first", False)),
                engine_style=body.get("engine_style", "optimal"),
            )
        except (ValueError, TypeError) as e:
            return error(422, "bad_request", str(e))
        return session.snapshot()

    @app.get("/games/{session_id}")
    async def get_game(session_id: str):
        try:
            return service.get(session_id).snapshot()
        except UnknownSession:
            return error(404, "unknown_session", f"no session {session_id}")

    @app.post("/games/{session_id}/moves")
    async def post_move(session_id: str, request: Request):
        body = await request.json()
        try:
            return service.submit_move(session_id, body.get("subtraction"))
        except UnknownSession:
            return error(404, "unknown_session", f"no session {session_id}")
        except WrongTurn as e:
            return error(409, "wrong_turn", str(e))
        except rules.NegativeSubtraction as e:
            return error(422, "negative_heap", str(e))
        except (ValueError, TypeError) as e:
            return error(422, "bad_vector", str(e))

    @app.get("/games/{session_id}/hint")
    async def get_hint(session_id: str):
        try:
            return service.hint(session_id)
        except UnknownSession:
            return error(404, "unknown_session", f"no session {session_id}")

    return app
