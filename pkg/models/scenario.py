"""Scenario configuration and reports."""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from models.errors import HyperstretchError

EX81 = 'ex81'
EX91 = 'ex91'
EX94 = 'ex94'
EX97 = 'ex97'
EX98 = 'ex98'
SCENARIOS = (EX81, EX91, EX94, EX97, EX98)


@dataclass(frozen=True)
class ScenarioConfig:
    """Parameters of one scenario run; fields a scenario does not use are ignored."""
    scenario: str
    k_max: int = 4               # ex97
    n: int = 40                  # ex91: first generator index N
    m: int = 2                   # ex91: generators N … N + m
    length: Optional[int] = None  # word-ball length, scenario default when None
    grid: int = 20               # ex94: base-line samples; the interior grid has grid²/2 points
    t: float = 2.0               # ex81
    T: float = 1.0               # ex81
    delta: float = 0.1           # ex98
    k_values: tuple = (1, 2, 3, 4)  # ex98
    seed: int = 0

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise HyperstretchError(f"Unknown scenario {self.scenario!r}; expected one of {', '.join(SCENARIOS)}")
        if self.length is not None and self.length < 1:
            raise HyperstretchError(f"Word length must be positive, got {self.length}")
        if self.grid < 2:
            raise HyperstretchError(f"Grid density must be at least 2, got {self.grid}")
        if self.t <= 0 or self.T <= 0 or self.delta <= 0:
            raise HyperstretchError("t, T and delta must be positive")


@dataclass
class CheckResult:
    """One verified claim; ``value`` is compared with ``expected`` up to ``tolerance``."""
    name: str
    passed: bool
    value: Any
    expected: Any
    tolerance: float


@dataclass
class ScenarioReport:
    scenario: str
    parameters: Dict[str, Any]
    checks: List[CheckResult] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, passed: bool, value: Any, expected: Any, tolerance: float = 0.0) -> bool:
        self.checks.append(CheckResult(name, bool(passed), value, expected, tolerance))
        return bool(passed)

    def close_to(self, name: str, value: float, expected: float, tolerance: float) -> bool:
        return self.check(name, abs(value - expected) <= tolerance, value, expected, tolerance)

    def at_most(self, name: str, value: float, bound: float, tolerance: float = 0.0) -> bool:
        return self.check(name, value <= bound + tolerance, value, bound, tolerance)

    def at_least(self, name: str, value: float, bound: float, tolerance: float = 0.0) -> bool:
        return self.check(name, value >= bound - tolerance, value, bound, tolerance)
