"""Result records shared by the verification routines."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of one check on one scenario.

    ``passed`` is ``None`` when the check ran but nothing was asserted (for
    instance when a hypothesis on n is not met).  ``elapsed_ms`` is only
    filled in when timing is requested, so reports stay reproducible.
    """

    check: str
    scenario: str
    epsilon: int
    n: int
    r: int
    passed: bool | None = None
    sides: list[dict] = field(default_factory=list)
    equal: bool | None = None
    per_level: list[dict] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    elapsed_ms: float | None = None

    @property
    def asserted(self) -> bool:
        return self.passed is not None

    def add_side(self, name: str, dim: int):
        self.sides.append({"name": name, "dim": dim})

    def fail(self, message: str):
        self.passed = False
        self.notes.append(message)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "scenario": self.scenario,
            "epsilon": self.epsilon,
            "n": self.n,
            "r": self.r,
            "passed": self.passed,
            "sides": self.sides,
            "equal": self.equal,
            "per_level": self.per_level,
            "details": self.details,
            "notes": self.notes,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary(self) -> str:
        status = {True: "PASS", False: "FAIL", None: "N/A"}[self.passed]
        dims = ", ".join(f"{s['name']}={s['dim']}" for s in self.sides)
        return f"[{status}] {self.check} {self.scenario}" + (f" ({dims})" if dims else "")


def scenario_name(kind: str, n: int, r: int) -> str:
    return ("O" if kind == "orthogonal" else "Sp") + f"({n}), r={r}"
