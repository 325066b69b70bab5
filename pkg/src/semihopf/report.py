"""Check reports shared by every verifier in the package."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Witness:
    law: str
    inputs: tuple
    lhs: Any
    rhs: Any

    def describe(self) -> str:
        args = ", ".join(_show(x) for x in self.inputs)
        return f"{self.law} at ({args}): {_show(self.lhs)} != {_show(self.rhs)}"

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "inputs": [_show(x) for x in self.inputs],
            "lhs": _show(self.lhs),
            "rhs": _show(self.rhs),
        }


@dataclass
class CheckReport:
    """Outcome of a law check.

    ``checked`` counts verified instances per law; a failing report always
    carries at least one witness.
    """

    name: str
    bound: int | None = None
    checked: dict[str, int] = field(default_factory=dict)
    witnesses: list[Witness] = field(default_factory=list)
    seed: int | None = None
    notes: list[str] = field(default_factory=list)
    max_witnesses: int = 8

    @property
    def passed(self) -> bool:
        return not self.witnesses

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self) -> bool:
        return self.passed

    def tick(self, law: str, n: int = 1) -> None:
        self.checked[law] = self.checked.get(law, 0) + n

    def expect(self, law: str, inputs: tuple, lhs, rhs, equal=None) -> bool:
        ok = equal(lhs, rhs) if equal is not None else lhs == rhs
        self.tick(law)
        if not ok and len(self.witnesses) < self.max_witnesses:
            self.witnesses.append(Witness(law, tuple(inputs), lhs, rhs))
        return ok

    def fail(self, law: str, inputs: tuple, lhs, rhs) -> None:
        self.tick(law)
        if len(self.witnesses) < self.max_witnesses:
            self.witnesses.append(Witness(law, tuple(inputs), lhs, rhs))

    def merge(self, other: CheckReport) -> CheckReport:
        for law, n in other.checked.items():
            self.tick(law, n)
        room = self.max_witnesses - len(self.witnesses)
        self.witnesses.extend(other.witnesses[: max(room, 0)])
        self.notes.extend(other.notes)
        return self

    def summary(self) -> str:
        total = sum(self.checked.values())
        bound = "" if self.bound is None else f" (degree <= {self.bound})"
        line = f"{self.name}: {self.verdict.upper()}{bound}, {total} instances"
        if self.seed is not None:
            line += f", seed {self.seed}"
        return line

    def render(self) -> str:
        lines = [self.summary()]
        for law in sorted(self.checked):
            lines.append(f"  {law}: {self.checked[law]}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        for w in self.witnesses:
            lines.append(f"  witness: {w.describe()}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "checked_bound": self.bound,
            "checked": dict(sorted(self.checked.items())),
            "witnesses": [w.to_json() for w in self.witnesses],
            "seed": self.seed,
            "notes": list(self.notes),
        }


def _show(x) -> str:
    if hasattr(x, "pretty"):
        return x.pretty()
    if isinstance(x, tuple):
        return "(" + ", ".join(_show(y) for y in x) + ")"
    return str(x)
