"""Structured, byte-reproducible reports.

A report is deterministic given (inputs, seed, tool version): canonical
JSON is sorted-key, fixed-indent, and never contains wall-clock data, so
repeated runs are byte-identical.  Values that were supplied by the user
rather than computed (h tables, r1 parity) are tagged with a provenance
marker by the code that puts them in.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

TOOL_VERSION = "0.1.0"

__all__ = ["Report", "TOOL_VERSION", "jsonable", "sha256_text"]


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def jsonable(x):
    """Recursively convert package values into JSON-serializable data."""
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (bool, int, str, type(None))):
        return x
    if hasattr(x, "as_json_dict"):
        return jsonable(x.as_json_dict())
    return str(x)


@dataclass
class Report:
    command: str
    seed: int
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    tool_version: str = TOOL_VERSION

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "tool_version": self.tool_version,
            "seed": self.seed,
            "inputs": jsonable(self.inputs),
            "outputs": jsonable(self.outputs),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"
