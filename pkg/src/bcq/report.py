"""Structured verification results shared by library checks and the CLI."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one identity check.

    ``exact`` is True when the comparison was performed in exact arithmetic
    and matched identically; ``residual`` carries the max error otherwise
    (None for exact checks).  ``passed`` is the overall verdict.
    """

    identity: str
    params: dict
    exact: bool
    residual: object = None
    runtime_ms: int = 0
    passed: bool = True
    detail: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        residual = None if self.residual is None else float(self.residual)
        return {
            "identity": self.identity,
            "params": self.params,
            "exact": self.exact,
            "residual": residual,
            "runtime_ms": int(self.runtime_ms),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


class Timer:
    """Millisecond wall-clock timer for report bookkeeping."""

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = int(round((time.perf_counter() - self._t0) * 1000))
        return False
