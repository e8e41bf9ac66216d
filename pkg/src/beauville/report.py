"""Run reports: one object per command, rendered as JSON or text.

The JSON form is canonical (schema 1, keys sorted, two-space indent) and
is byte-stable for identical inputs except for the wall_time_s field.
The text form is derived from the same object, so the two views cannot
disagree.  Verdicts are "pass", "fail" or "skipped"; a failing condition
must carry a witness element or reason.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

TOOL_VERSION = "0.1.0"
REPORT_SCHEMA = 1

VERDICTS = ("pass", "fail", "skipped")


@dataclass(frozen=True)
class GroupIdentity:
    """How a run identifies the group it operated on."""

    spec: str
    order: int
    degree: int


@dataclass(frozen=True)
class ReportCondition:
    name: str
    verdict: str
    witness: str = ""

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}")
        if self.verdict == "fail" and not self.witness:
            raise ValueError(f"failing condition {self.name!r} needs a witness")


@dataclass
class Report:
    """Everything a command run produced, in renderable form.

    ``result`` holds operation-specific scalars (counts, orders, element
    strings); values must be JSON-serializable and deterministic for a
    fixed seed and flag set.
    """

    operation: str
    group: GroupIdentity | None = None
    conditions: tuple[ReportCondition, ...] = ()
    types: tuple[str, ...] = ()
    nu: tuple[int, int] | None = None
    seed: int | None = None
    result: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()
    wall_time_s: float = 0.0

    def status(self) -> str:
        verdicts = [c.verdict for c in self.conditions]
        if "fail" in verdicts:
            return "fail"
        if verdicts and all(v == "skipped" for v in verdicts):
            return "skipped"
        return "pass"

    def exit_status(self, strict: bool = False) -> int:
        if any(c.verdict == "fail" for c in self.conditions):
            return 1
        if strict and any(c.verdict == "skipped" for c in self.conditions):
            return 1
        return 0

    def to_payload(self) -> dict:
        group = None
        if self.group is not None:
            group = {
                "spec": self.group.spec,
                "order": self.group.order,
                "degree": self.group.degree,
            }
        return {
            "schema": REPORT_SCHEMA,
            "tool_version": TOOL_VERSION,
            "operation": self.operation,
            "group": group,
            "conditions": [
                {"name": c.name, "verdict": c.verdict, "witness": c.witness}
                for c in self.conditions
            ],
            "types": list(self.types),
            "nu": list(self.nu) if self.nu is not None else None,
            "seed": self.seed,
            "result": self.result,
            "notes": list(self.notes),
            "status": self.status(),
            "wall_time_s": round(self.wall_time_s, 6),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"operation: {self.operation}"]
        if self.group is not None:
            lines.append(
                f"group: {self.group.spec}  "
                f"order {self.group.order}  degree {self.group.degree}"
            )
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        if self.conditions:
            lines.append("conditions:")
            width = max(len(c.name) for c in self.conditions)
            for c in self.conditions:
                if c.witness:
                    lines.append(
                        f"  [{c.verdict:^7s}] {c.name:<{width}s}  {c.witness}"
                    )
                else:
                    lines.append(f"  [{c.verdict:^7s}] {c.name}")
        if self.types:
            lines.append("types: " + " ".join(self.types))
        if self.nu is not None:
            lines.append(f"nu: {self.nu[0]}, {self.nu[1]}")
        for key in sorted(self.result):
            lines.append(f"{key}: {_render(self.result[key])}")
        for note in self.notes:
            lines.append(f"note: {note}")
        lines.append(f"status: {self.status()}  ({self.wall_time_s:.3f} s)")
        return "\n".join(lines)


def _render(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, dict):
        return " ".join(f"{k}={_render(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return "; ".join(_render(v) for v in value)
    return str(value)
