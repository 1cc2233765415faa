"""
Run timing and counters
"""

import time
from dataclasses import dataclass
from typing import Optional


class Timer:
    """Context manager measuring wall-clock duration"""

    def __init__(self):
        self.start: Optional[float] = None
        self.duration: float = 0.0

    def __enter__(self) -> "Timer":
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc) -> None:
        self.duration = time.perf_counter() - self.start


@dataclass
class RunMetrics:
    """Counters collected over a verification run"""
    name: str
    checked: int = 0
    skipped: int = 0
    failures: int = 0
    elapsed_seconds: float = 0.0

    def merge(self, checked: int, skipped: int, failures: int):
        self.checked += checked
        self.skipped += skipped
        self.failures += failures

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        return (
            f"{self.name}: checked={self.checked} skipped={self.skipped} "
            f"failures={self.failures}"
        )
