"""FastAPI application: WebSocket session endpoint plus REST helpers.

One glove link per server process (there is one glove); sessions share it.
Each WebSocket connection owns one session, and its messages are handled
strictly in arrival order.
"""

from __future__ import annotations

import asyncio
import itertools
import json
import logging
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, WebSocket, WebSocketDisconnect
from fastapi.responses import PlainTextResponse
from fastapi.staticfiles import StaticFiles

import haci
from haci.cues import HapticPattern, cue_manifest
from haci.device import MIN_SPACING_MS, GloveLink, GloveSimulator, SerialSink
from haci.diagnostics import Diagnostic
from haci.dispatch import Keymap
from haci.lang.interpreter import ExecutionLimits, execute
from haci.lang.parser import parse
from haci.service import models
from haci.session import Session, SessionConfig, WallClock, canonical_json, replay_log
from haci.speech import SPEECH_MAP

log = logging.getLogger(__name__)


@dataclass
class AppConfig:
    device: str = "sim"  # "sim" or "serial:<path>"
    keymap_profile: str = "macos"
    strict_indexing: bool = True
    log_events_path: Path | None = None
    open_path: Path | None = None
    ui_dir: Path | None = None
    limits: ExecutionLimits = field(default_factory=ExecutionLimits)


def _diag_model(diag: Diagnostic) -> models.DiagnosticModel:
    return models.DiagnosticModel(kind=diag.kind, message=diag.message, line=diag.line, col=diag.col)


def _make_glove(config: AppConfig, clock) -> tuple[GloveLink, GloveSimulator | None]:
    if config.device == "sim":
        sim = GloveSimulator()
        return GloveLink(sim, clock), sim
    if config.device.startswith("serial:"):
        sink = SerialSink(config.device.removeprefix("serial:"))
        return GloveLink(sink, clock), None
    raise ValueError(f"unknown device {config.device!r} (use 'sim' or 'serial:<path>')")


def create_app(config: AppConfig | None = None) -> FastAPI:
    config = config or AppConfig()
    Keymap.load_profile(config.keymap_profile)  # fail fast on bad profiles

    clock = WallClock()
    glove, simulator = _make_glove(config, clock)
    serial_mode = simulator is None

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        task = asyncio.create_task(_pump_forever(glove)) if serial_mode else None
        yield
        if task is not None:
            task.cancel()

    app = FastAPI(title="haci", version=haci.__version__, lifespan=lifespan)
    sessions: dict[str, Session] = {}
    ids = itertools.count(1)
    app.state.config = config
    app.state.sessions = sessions
    app.state.glove = glove
    app.state.simulator = simulator

    # -- REST -------------------------------------------------------------

    @app.get("/health", response_model=models.HealthResponse)
    def health() -> models.HealthResponse:
        return models.HealthResponse(status="ok", version=haci.__version__, device=config.device)

    @app.get("/speech-map", response_model=models.SpeechMapResponse)
    def speech_map() -> models.SpeechMapResponse:
        entries = [models.SpeechMapEntry(symbol=s, phrase=p) for s, p in SPEECH_MAP]
        return models.SpeechMapResponse(entries=entries)

    @app.get("/keymap", response_model=models.KeymapResponse)
    def keymap() -> models.KeymapResponse:
        km = Keymap.load_profile(config.keymap_profile)
        bindings = {str(chord): command.name for chord, command in km.bindings.items()}
        return models.KeymapResponse(profile=km.profile, bindings=bindings)

    @app.get("/cues/manifest", response_class=PlainTextResponse)
    def cues_manifest() -> str:
        return cue_manifest()

    @app.post("/run", response_model=models.RunResponse)
    def run_source(req: models.RunRequest) -> models.RunResponse:
        result = parse(req.source)
        if isinstance(result, Diagnostic):
            return models.RunResponse(
                console=[], diagnostics=[_diag_model(result)], halted="error"
            )
        limits = ExecutionLimits(req.max_steps, req.max_output_lines)
        outcome = execute(result, limits, req.strict_indexing)
        return models.RunResponse(
            console=outcome.console_lines,
            diagnostics=[_diag_model(d) for d in outcome.diagnostics],
            halted=outcome.halted,
        )

    @app.post("/replay", response_model=models.ReplayResponse)
    def replay(req: models.ReplayRequest) -> models.ReplayResponse:
        session_config = SessionConfig(
            strict_indexing=config.strict_indexing,
            keymap_profile=config.keymap_profile,
            limits=config.limits,
        )
        try:
            out = replay_log(req.log.splitlines(), session_config)
        except (json.JSONDecodeError, KeyError) as exc:
            raise HTTPException(status_code=422, detail=f"bad replay log: {exc}") from None
        return models.ReplayResponse(log="".join(line + "\n" for line in out))

    @app.get("/glove/timeline", response_model=models.TimelineResponse)
    def glove_timeline() -> models.TimelineResponse:
        if simulator is None:
            raise HTTPException(status_code=404, detail="no simulator on a serial link")
        entries = [
            models.TimelineEntry(
                t_ms=rec.t_ms,
                motor=int(rec.cmd.motor),
                motor_name=rec.cmd.motor.name.lower().replace("_", "-"),
                pattern="single-buzz" if rec.cmd.pattern == HapticPattern.SINGLE_BUZZ else "double-tap",
                intensity=rec.cmd.intensity,
                duration_ms=rec.cmd.duration_ms,
            )
            for rec in simulator.timeline
        ]
        return models.TimelineResponse(entries=entries, dropped=len(glove.dropped))

    @app.get("/sessions", response_model=models.SessionListResponse)
    def list_sessions() -> models.SessionListResponse:
        return models.SessionListResponse(sessions=sorted(sessions))

    @app.get("/sessions/{session_id}/metrics", response_model=models.SessionMetricsResponse)
    def session_metrics(session_id: str) -> models.SessionMetricsResponse:
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        snapshot = session.snapshot_metrics()
        return models.SessionMetricsResponse(
            session_id=session_id,
            snapshot=models.MetricsSnapshotModel(**snapshot),
            records=[
                models.MetricRecordModel(t_ms=r.t_ms, kind=r.kind, detail=r.detail)
                for r in session.metrics
            ],
        )

    @app.get("/sessions/{session_id}/recording", response_class=PlainTextResponse)
    def session_recording(session_id: str) -> str:
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return "".join(canonical_json(r) + "\n" for r in session.inbound_recording)

    # -- WebSocket session protocol ----------------------------------------

    @app.websocket("/session")
    async def session_socket(ws: WebSocket) -> None:
        await ws.accept()
        session_id = f"s{next(ids)}"
        session = Session(
            SessionConfig(
                strict_indexing=config.strict_indexing,
                keymap_profile=config.keymap_profile,
                limits=config.limits,
                log_events_path=config.log_events_path,
                open_path=config.open_path,
                auto_drain_device=not serial_mode,
            ),
            clock=clock,
            glove=glove,
            session_id=session_id,
        )
        sessions[session_id] = session
        await ws.send_text(canonical_json({"type": "session", "id": session_id}))
        try:
            while True:
                raw = await ws.receive_text()
                try:
                    msg = json.loads(raw)
                except json.JSONDecodeError:
                    await ws.send_text(canonical_json({"type": "protocol-error", "detail": "bad JSON"}))
                    continue
                for update in session.handle_message(msg):
                    await ws.send_text(canonical_json(update))
        except WebSocketDisconnect:
            pass
        finally:
            sessions.pop(session_id, None)

    # -- static UI ----------------------------------------------------------

    if config.ui_dir is not None and config.ui_dir.is_dir():
        app.mount("/ui", StaticFiles(directory=str(config.ui_dir), html=True), name="ui")

    return app


async def _pump_forever(glove: GloveLink) -> None:
    while True:
        glove.pump()
        await asyncio.sleep(MIN_SPACING_MS / 1000 / 3)
