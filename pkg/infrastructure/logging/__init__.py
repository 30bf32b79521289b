# infrastructure/logging/__init__.py
from .logger import (
    EventLogger,
    get_logger,
    set_logger,
    event,
    error,
)

__all__ = [
    "EventLogger",
    "get_logger",
    "set_logger",
    "event",
    "error",
]
