from .logging import get_logger, configure_logging
from .metrics import Timer, RunMetrics
from .helpers import ensure_parent, write_text

__all__ = [
    "get_logger",
    "configure_logging",
    "Timer",
    "RunMetrics",
    "ensure_parent",
    "write_text",
]
