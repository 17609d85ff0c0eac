"""Pass/fail reports shared by the verification suites and the CLI."""

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    name: str
    passed: bool
    scale: str
    counterexample: str | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "scale": self.scale,
            "counterexample": self.counterexample,
        }
