"""Glove link: 7-byte wire frames, paced FIFO delivery, and a simulator
that records a timestamped haptic timeline in place of hardware.

Frame layout: sync 0xA5, motor id, pattern, intensity, duration_ms as
16-bit little-endian, XOR checksum of the first six bytes.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Protocol

from haci.cues import HapticCommand, HapticMotor, HapticPattern

log = logging.getLogger(__name__)

SYNC_BYTE = 0xA5
FRAME_LEN = 7
MIN_SPACING_MS = 150
QUEUE_CAPACITY = 64


class FrameError(ValueError):
    pass


class FrameSyncError(FrameError):
    pass


class FrameChecksumError(FrameError):
    pass


class FrameFieldError(FrameError):
    pass


class LinkClosedError(RuntimeError):
    pass


def _checksum(payload: bytes) -> int:
    value = 0
    for b in payload:
        value ^= b
    return value


def encode_frame(cmd: HapticCommand) -> bytes:
    if not 0 <= int(cmd.motor) <= 5:
        raise FrameFieldError(f"motor id {int(cmd.motor)} out of range")
    if int(cmd.pattern) not in (1, 2):
        raise FrameFieldError(f"pattern {int(cmd.pattern)} out of range")
    if not 0 <= cmd.intensity <= 255:
        raise FrameFieldError(f"intensity {cmd.intensity} out of range")
    if not 20 <= cmd.duration_ms <= 2000:
        raise FrameFieldError(f"duration {cmd.duration_ms} out of range")
    body = bytes(
        [
            SYNC_BYTE,
            int(cmd.motor),
            int(cmd.pattern),
            cmd.intensity,
            cmd.duration_ms & 0xFF,
            (cmd.duration_ms >> 8) & 0xFF,
        ]
    )
    return body + bytes([_checksum(body)])


def decode_frame(frame: bytes) -> HapticCommand:
    if len(frame) != FRAME_LEN:
        raise FrameFieldError(f"frame length {len(frame)} != {FRAME_LEN}")
    if frame[0] != SYNC_BYTE:
        raise FrameSyncError(f"bad sync byte 0x{frame[0]:02X}")
    if _checksum(frame[:6]) != frame[6]:
        raise FrameChecksumError("checksum mismatch")
    motor, pattern, intensity = frame[1], frame[2], frame[3]
    duration = frame[4] | (frame[5] << 8)
    if motor > 5:
        raise FrameFieldError(f"motor id {motor} out of range")
    if pattern not in (1, 2):
        raise FrameFieldError(f"pattern {pattern} out of range")
    if not 20 <= duration <= 2000:
        raise FrameFieldError(f"duration {duration} out of range")
    return HapticCommand(HapticMotor(motor), HapticPattern(pattern), intensity, duration)


@dataclass(frozen=True)
class TimelineRecord:
    t_ms: int
    cmd: HapticCommand


@dataclass
class DroppedCue:
    t_ms: int
    cmd: HapticCommand


class FrameSink(Protocol):
    def deliver(self, t_ms: int, cmd: HapticCommand, frame: bytes) -> None: ...


@dataclass
class GloveSimulator:
    """Records delivered commands; stands in for the physical glove."""

    timeline: list[TimelineRecord] = field(default_factory=list)

    def deliver(self, t_ms: int, cmd: HapticCommand, frame: bytes) -> None:
        decode_frame(frame)  # the simulator is as strict as firmware would be
        self.timeline.append(TimelineRecord(t_ms, cmd))


class SerialSink:
    """Writes frames to a serial device path (115200 8N1 is the glove's
    configuration; the OS driver owns termios here)."""

    def __init__(self, path: str):
        self.path = path
        self._fh = open(path, "wb", buffering=0)

    def deliver(self, t_ms: int, cmd: HapticCommand, frame: bytes) -> None:
        self._fh.write(frame)

    def close(self) -> None:
        self._fh.close()


class GloveLink:
    """FIFO command queue with paced delivery.

    Delivery is pull-based: `pump(now_ms)` delivers everything eligible at
    the given clock reading, `drain()` delivers the rest by advancing the
    schedule (simulation / replay). Live services pump from a timer task.
    Overflow drops the oldest pending command so navigation never blocks
    on stale cues.
    """

    def __init__(self, sink: FrameSink, clock: Callable[[], int], capacity: int = QUEUE_CAPACITY):
        self.sink = sink
        self.clock = clock
        self.capacity = capacity
        self.queue: deque[tuple[int, HapticCommand]] = deque()  # (enqueue_ms, cmd)
        self.dropped: list[DroppedCue] = []
        self.last_dispatch_ms: int | None = None
        self.open = True

    def close(self) -> None:
        self.open = False

    def send(self, cmd: HapticCommand) -> None:
        if not self.open:
            raise LinkClosedError("glove link is closed")
        if len(self.queue) >= self.capacity:
            _, stale = self.queue.popleft()
            self.dropped.append(DroppedCue(self.clock(), stale))
            log.warning("glove queue full, dropped %s", stale)
        self.queue.append((self.clock(), cmd))

    def next_due_ms(self) -> int | None:
        """Earliest time the head command may dispatch: not before it was
        sent, and not within the spacing window of the previous dispatch."""
        if not self.queue:
            return None
        enqueue_ms, _ = self.queue[0]
        if self.last_dispatch_ms is None:
            return enqueue_ms
        return max(enqueue_ms, self.last_dispatch_ms + MIN_SPACING_MS)

    def _deliver_head(self, t_ms: int) -> None:
        _, cmd = self.queue.popleft()
        self.sink.deliver(t_ms, cmd, encode_frame(cmd))
        self.last_dispatch_ms = t_ms

    def pump(self, now_ms: int | None = None) -> int:
        """Deliver every command whose due time has passed."""
        now = self.clock() if now_ms is None else now_ms
        delivered = 0
        while self.queue:
            due = self.next_due_ms()
            assert due is not None
            if due > now:
                break
            self._deliver_head(due)
            delivered += 1
        return delivered

    def drain(self) -> int:
        """Deliver everything pending at its scheduled due time (simulation
        and replay: the timeline shows when a live dispatcher would fire)."""
        delivered = 0
        while self.queue:
            due = self.next_due_ms()
            assert due is not None
            self._deliver_head(due)
            delivered += 1
        return delivered
