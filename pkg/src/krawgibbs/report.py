"""Pass/fail summaries for exhaustive identity sweeps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Tuple

__all__ = ["IdentityReport", "sweep"]


@dataclass(frozen=True)
class IdentityReport:
    name: str
    bounds: str
    all_passed: bool
    checked: int
    first_failure: Optional[Tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.all_passed and self.first_failure is not None:
            raise ValueError("a passing report cannot carry a failure index")

    def __bool__(self) -> bool:
        return self.all_passed


def sweep(
    name: str,
    bounds: str,
    cases: Iterable[Tuple[int, ...]],
    check: Callable[..., bool],
) -> IdentityReport:
    """Run ``check(*index)`` over ``cases`` in order, stopping at the first failure."""
    checked = 0
    for index in cases:
        checked += 1
        if not check(*index):
            return IdentityReport(name, bounds, False, checked, tuple(index))
    return IdentityReport(name, bounds, True, checked)
