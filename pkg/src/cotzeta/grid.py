"""Deterministic sampling plans for the open unit interval."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .numerics import DomainError


class Refinement(enum.Enum):
    UNIFORM = "uniform"
    GEOMETRIC_ENDPOINTS = "geometric_endpoints"


@dataclass(frozen=True)
class GridSpec:
    """Sample points in ``[epsilon, 1 - epsilon]``.

    With geometric refinement, ``n_points`` is split between a uniform core
    and the points ``epsilon * 2**j`` and ``1 - epsilon * 2**j``
    (``j = 1 .. J``, stopping below 1/2) that resolve both endpoints.
    """

    n_points: int = 10_000
    epsilon: float = 1e-4
    refinement: Refinement = Refinement.GEOMETRIC_ENDPOINTS

    def __post_init__(self):
        object.__setattr__(self, "refinement", Refinement(self.refinement))
        if not isinstance(self.n_points, (int, np.integer)) or self.n_points < 2:
            raise DomainError(f"a grid needs at least 2 points, got {self.n_points!r}")
        if not 0.0 < self.epsilon <= 0.5:
            raise DomainError(f"grid epsilon must lie in (0, 0.5], got {self.epsilon!r}")

    def _geometric_levels(self) -> int:
        if self.refinement is Refinement.UNIFORM:
            return 0
        levels = max(0, math.ceil(math.log2(0.5 / self.epsilon)) - 1)
        # keep at least two uniform points
        return min(levels, max(0, (self.n_points - 2) // 2))

    def points(self) -> np.ndarray:
        eps = self.epsilon
        J = self._geometric_levels()
        core = np.linspace(eps, 1.0 - eps, self.n_points - 2 * J)
        if J:
            left = eps * 2.0 ** np.arange(1, J + 1)
            core = np.concatenate([core, left, 1.0 - left])
        return np.unique(core)

    def to_dict(self) -> dict:
        return {"n_points": int(self.n_points), "epsilon": self.epsilon, "refinement": self.refinement.value}
