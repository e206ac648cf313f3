"""Node and wall-clock limits for the exponential searches."""

from __future__ import annotations

import time

from .errors import BudgetExhausted

DEFAULT_MAX_NODES = 10**8
DEFAULT_MAX_MS = 60_000

# wall clock is polled only every this many ticks
_CLOCK_STRIDE = 1024


class Budget:
    """Counts search nodes and raises :class:`BudgetExhausted` past a limit.

    ``None`` disables a limit.  ``cancel`` is any object with ``is_set()``
    (a threading or multiprocessing Event); it is checked together with the
    clock so peers can stop each other cooperatively.
    """

    __slots__ = ("max_nodes", "max_ms", "nodes", "cancel", "_t0", "_next_poll")

    def __init__(self, max_nodes: int | None = None, max_ms: float | None = None, cancel=None):
        self.max_nodes = max_nodes
        self.max_ms = max_ms
        self.cancel = cancel
        self.nodes = 0
        self._t0 = time.perf_counter()
        self._next_poll = _CLOCK_STRIDE

    @classmethod
    def unlimited(cls) -> "Budget":
        return cls(None, None)

    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self._t0) * 1000.0

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExhausted(self.nodes, self.elapsed_ms())
        if self.nodes >= self._next_poll:
            self._next_poll = self.nodes + _CLOCK_STRIDE
            if self.max_ms is not None and self.elapsed_ms() > self.max_ms:
                raise BudgetExhausted(self.nodes, self.elapsed_ms())
            if self.cancel is not None and self.cancel.is_set():
                raise BudgetExhausted(self.nodes, self.elapsed_ms())
