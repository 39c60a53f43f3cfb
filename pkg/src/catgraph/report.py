from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Pass/fail outcome of a check, with an optional concrete witness."""

    passed: bool
    message: str = ""
    witness: Any = None
    data: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out = {"passed": self.passed, "message": self.message}
        if self.witness is not None:
            out["witness"] = to_jsonable(self.witness)
        if self.data:
            out["data"] = to_jsonable(self.data)
        return out


def to_jsonable(obj: Any) -> Any:
    """Recursively convert library values into JSON-ready structures."""
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(v) for v in obj)
    return obj
