"""Pydantic request/response models for the REST surface."""

from __future__ import annotations

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str
    device: str


class DiagnosticModel(BaseModel):
    kind: str
    message: str
    line: int
    col: int


class RunRequest(BaseModel):
    source: str
    strict_indexing: bool = True
    max_steps: int = Field(default=1_000_000, gt=0)
    max_output_lines: int = Field(default=10_000, gt=0)


class RunResponse(BaseModel):
    console: list[str]
    diagnostics: list[DiagnosticModel]
    halted: str


class SpeechMapEntry(BaseModel):
    symbol: str
    phrase: str


class SpeechMapResponse(BaseModel):
    entries: list[SpeechMapEntry]


class KeymapResponse(BaseModel):
    profile: str
    bindings: dict[str, str]  # chord -> command name


class ReplayRequest(BaseModel):
    log: str  # inbound records, one JSON object per line


class ReplayResponse(BaseModel):
    log: str  # normalized outbound updates, one JSON object per line


class TimelineEntry(BaseModel):
    t_ms: int
    motor: int
    motor_name: str
    pattern: str
    intensity: int
    duration_ms: int


class TimelineResponse(BaseModel):
    entries: list[TimelineEntry]
    dropped: int


class TaskTiming(BaseModel):
    task: str
    elapsed_ms: int


class MetricsSnapshotModel(BaseModel):
    tasks: list[TaskTiming]
    errors_raised: int
    feature_counts: dict[str, int]


class MetricRecordModel(BaseModel):
    t_ms: int
    kind: str
    detail: str


class SessionMetricsResponse(BaseModel):
    session_id: str
    snapshot: MetricsSnapshotModel
    records: list[MetricRecordModel]


class SessionListResponse(BaseModel):
    sessions: list[str]
