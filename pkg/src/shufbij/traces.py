"""Replayable bijection traces.

A step rewrites one side of a pair of disjoint permutations and carries
everything needed to replay the corresponding bijection on any single
interleaving of the source pair: the step kind, its indices, the full
(source, target) pairs, and the termination measure after the step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .perm import Perm, format_perm

STEP_KINDS = (
    "t_swap",
    "phi",
    "phi_tilde",
    "theta_des",
    "theta_maj_first",
    "theta_pk",
    "theta_lpk",
    "theta_rpk_inverse",
)


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    params: dict[str, Any] = field(default_factory=dict)
    source_pi: Perm = ()
    source_sigma: Perm = ()
    target_pi: Perm = ()
    target_sigma: Perm = ()
    measure_after: int = 0

    def __post_init__(self):
        if self.kind not in STEP_KINDS:
            raise ValueError(f"unknown step kind {self.kind!r}")

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "params": dict(self.params),
            "source": {"pi": format_perm(self.source_pi), "sigma": format_perm(self.source_sigma)},
            "target": {"pi": format_perm(self.target_pi), "sigma": format_perm(self.target_sigma)},
            "measure_after": self.measure_after,
        }


@dataclass(frozen=True)
class ReductionTrace:
    statistic: Any
    steps: tuple[ReductionStep, ...]
    start_pi: Perm
    start_sigma: Perm
    final_pi: Perm
    final_sigma: Perm
    start_measure: int

    @property
    def measure_values(self) -> tuple[int, ...]:
        """Measure after each step; strictly below ``start_measure`` and
        decreasing when every step claims progress."""
        return tuple(s.measure_after for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> dict:
        from .stats import format_stat

        return {
            "statistic": format_stat(self.statistic),
            "start": {"pi": format_perm(self.start_pi), "sigma": format_perm(self.start_sigma)},
            "final": {"pi": format_perm(self.final_pi), "sigma": format_perm(self.final_sigma)},
            "start_measure": self.start_measure,
            "steps": [s.to_json() for s in self.steps],
        }
