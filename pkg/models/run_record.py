"""
Results of solver tries and of multi-try runs on one instance
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from models.activity import ActivityStats
from models.formula import Assignment
from models.solver_config import SolverConfig


@dataclass(frozen=True)
class TryResult:
    """Outcome of one try"""
    solved: bool
    flips_used: int
    final_unsat: int
    assignment: Optional[Assignment] = None
    trajectory: Tuple[int, ...] = ()
    activity: Optional[ActivityStats] = field(default=None, compare=False)

    def __post_init__(self):
        if self.solved and self.final_unsat != 0:
            raise ValueError(f"Solved try reports {self.final_unsat} violated clauses")
        if self.flips_used < 0:
            raise ValueError(f"flips_used must be >= 0, got {self.flips_used}")

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'solved': self.solved,
            'flips_used': self.flips_used,
            'final_unsat': self.final_unsat,
        }
        if self.trajectory:
            data['trajectory'] = list(self.trajectory)
        return data


@dataclass(frozen=True)
class RunRecord:
    """All tries of one configuration on one instance"""
    instance_id: str
    num_vars: int
    num_clauses: int
    config: SolverConfig
    tries: Tuple[TryResult, ...]
    activity: ActivityStats = field(default_factory=ActivityStats, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'tries', tuple(self.tries))
        if len(self.tries) != self.config.max_tries:
            raise ValueError(
                f"Run on '{self.instance_id}' holds {len(self.tries)} tries, "
                f"config asks for {self.config.max_tries}")

    @property
    def num_solved(self) -> int:
        return sum(1 for t in self.tries if t.solved)

    @property
    def success_fraction(self) -> float:
        return self.num_solved / len(self.tries)

    def solved_flips(self) -> List[int]:
        """flips_used of every solved try"""
        return [t.flips_used for t in self.tries if t.solved]

    def first_solution(self) -> Optional[TryResult]:
        for t in self.tries:
            if t.solved:
                return t
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'instance_id': self.instance_id,
            'num_vars': self.num_vars,
            'num_clauses': self.num_clauses,
            'config': self.config.to_dict(),
            'num_solved': self.num_solved,
            'tries': [t.to_dict() for t in self.tries],
            'activity': self.activity.to_dict(),
        }
