from __future__ import annotations

import time


class BudgetExceeded(RuntimeError):
    """An enumeration cap or wall-clock limit was hit before the answer was certified."""


class Deadline:
    def __init__(self, seconds: float | None):
        self.seconds = seconds
        self._end = None if seconds is None else time.monotonic() + seconds

    def expired(self) -> bool:
        return self._end is not None and time.monotonic() > self._end

    def check(self, what: str = "computation") -> None:
        if self.expired():
            raise BudgetExceeded(f"{what} exceeded the time limit of {self.seconds}s")
