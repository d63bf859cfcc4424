"""Structured findings: machine-readable diagnostics attached to validation results."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Finding:
    """One diagnostic message, optionally anchored to a node or a directed pair.

    ``code`` is a stable machine-readable identifier (part of the wire
    contract); ``message`` is the human-readable explanation. ``edge`` names
    a directed (tail, head) pair for per-edge findings; ``node`` names a
    single node. ``expected``/``actual`` carry integer context where the
    diagnostic compares two quantities.
    """

    code: str
    message: str
    node: str | None = None
    edge: tuple[str, str] | None = None
    expected: int | None = None
    actual: int | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"code": self.code, "message": self.message}
        if self.node is not None:
            out["node"] = self.node
        if self.edge is not None:
            out["edge"] = [self.edge[0], self.edge[1]]
        if self.expected is not None:
            out["expected"] = self.expected
        if self.actual is not None:
            out["actual"] = self.actual
        return out


def messages(findings: list[Finding]) -> list[str]:
    return [f.message for f in findings]
