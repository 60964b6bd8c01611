import os
from dataclasses import dataclass
from typing import Optional

from kegraph.errors import DomainError, WorkBudget

DEFAULT_BUDGET = 10_000_000
DEFAULT_SEED = 0
OUTPUT_FORMATS = ("text", "json", "csv")


@dataclass
class SearchLimits:
    """Vertex-count thresholds above which the exhaustive cross-checks are skipped or sampled."""
    enumerate_matchings_max_n: int
    matching_samples: int
    bruteforce_critical_max_n: int
    cycle_enumeration_max_n: int
    omega_enumeration_max_n: int


SEARCH_DEPTHS = {
    "quick": SearchLimits(
        enumerate_matchings_max_n=8,
        matching_samples=10,
        bruteforce_critical_max_n=10,
        cycle_enumeration_max_n=10,
        omega_enumeration_max_n=10,
    ),
    "standard": SearchLimits(
        enumerate_matchings_max_n=12,
        matching_samples=50,
        bruteforce_critical_max_n=16,
        cycle_enumeration_max_n=16,
        omega_enumeration_max_n=16,
    ),
    "thorough": SearchLimits(
        enumerate_matchings_max_n=14,
        matching_samples=200,
        bruteforce_critical_max_n=20,
        cycle_enumeration_max_n=16,
        omega_enumeration_max_n=20,
    ),
}


def get_search_limits(depth: str) -> SearchLimits:
    return SEARCH_DEPTHS.get(depth, SEARCH_DEPTHS["standard"])


@dataclass
class RunConfig:
    command: str
    source: str = "-"
    seed: int = DEFAULT_SEED
    count: int = 1
    budget: int = DEFAULT_BUDGET
    output_format: str = "text"
    jobs: int = 1
    strict: bool = False
    depth: str = "standard"

    def __post_init__(self):
        if self.budget <= 0:
            raise DomainError(f"budget must be positive, got {self.budget}")
        if self.output_format not in OUTPUT_FORMATS:
            raise DomainError(f"unknown output format {self.output_format!r}")
        if self.jobs < 1:
            raise DomainError(f"jobs must be at least 1, got {self.jobs}")
        if self.count < 0:
            raise DomainError(f"count must be non-negative, got {self.count}")

    @property
    def limits(self) -> SearchLimits:
        return get_search_limits(self.depth)


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default


def env_value_is_valid(name: str) -> bool:
    """True when the variable is unset or holds a positive integer."""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return True
    try:
        return int(raw) > 0
    except ValueError:
        return False


def default_budget() -> int:
    return _env_int("KEGRAPH_BUDGET", DEFAULT_BUDGET)


def default_jobs() -> int:
    return _env_int("KEGRAPH_JOBS", 1)


def ensure_budget(budget: Optional[WorkBudget]) -> WorkBudget:
    """Return the caller's budget, or a fresh one sized from the environment."""
    if budget is None:
        return WorkBudget(default_budget())
    return budget
