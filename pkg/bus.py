#!/usr/bin/env python3
"""
Command bus for Cartesian Lab.

Commands and chunked computations announce what they are doing here; the
front end (or a test) subscribes to listen. Delivery is synchronous and in
subscription order. Nothing emitted on the bus ends up in a report.
"""

import json
import logging
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Callable, Dict, List, Optional

logger = logging.getLogger(__name__)

Subscriber = Callable[["BusAction"], None]


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass(frozen=True)
class BusAction:
    """One event: what happened, its payload and which command sent it."""
    action: str
    data: Dict[str, Any]
    source: Optional[str] = None
    id: str = field(default_factory=lambda: uuid.uuid4().hex)
    timestamp: str = field(default_factory=_now)

    def describe(self) -> str:
        return f"[{self.source or '-'}] {self.action} {json.dumps(self.data, default=str, sort_keys=True)}"


class CommandBus:
    """
    Synchronous publish/subscribe channel.
    A subscriber that raises is logged and skipped; the others still run.
    """

    def __init__(self):
        self._subscribers: List[Subscriber] = []
        self._lock = threading.Lock()

    def emit(self, action: str, data: Dict[str, Any], source: Optional[str] = None) -> str:
        """Deliver an event to every subscriber and return its id."""
        event = BusAction(action, data, source)
        with self._lock:
            listeners = tuple(self._subscribers)
        for listener in listeners:
            try:
                listener(event)
            except Exception as exc:
                logger.error("subscriber %r failed on %s: %s", listener, action, exc)
        return event.id

    def subscribe(self, callback: Subscriber) -> Subscriber:
        with self._lock:
            self._subscribers.append(callback)
        return callback

    def unsubscribe(self, callback: Subscriber):
        with self._lock:
            if callback in self._subscribers:
                self._subscribers.remove(callback)


class ActionTypes:
    COMMAND_START = "command_start"
    SHOW_PROGRESS = "show_progress"
    CHUNK_COMPLETE = "chunk_complete"
    FINDING = "finding"
    COMMAND_COMPLETE = "command_complete"
    ERROR = "error"


_LOG_LEVELS = {
    ActionTypes.ERROR: logging.WARNING,
    ActionTypes.FINDING: logging.WARNING,
    ActionTypes.CHUNK_COMPLETE: logging.DEBUG,
}


def log_subscriber(event: BusAction):
    """Forward events to the `bus` logger."""
    logger.log(_LOG_LEVELS.get(event.action, logging.INFO), "%s", event.describe())


_shared_bus: Optional[CommandBus] = None
_shared_lock = threading.Lock()


def get_command_bus() -> CommandBus:
    """Process-wide bus; created on first use with the logging subscriber attached."""
    global _shared_bus
    with _shared_lock:
        if _shared_bus is None:
            _shared_bus = CommandBus()
            _shared_bus.subscribe(log_subscriber)
        return _shared_bus
