"""
GWSAT - GSAT with random walk
"""

from typing import Optional

from models.solver_config import Heuristic
from solvers.base_solver import BaseSolver, SearchState
from solvers.gsat import step_gsat
from solvers.walksat import greedy_member


def step_gwsat(state: SearchState, p: float, wp: float) -> int:
    """
    With probability p a GSAT step over all variables; otherwise a walk
    step in a random violated clause (random member with probability wp,
    else its highest-gain member).
    """
    if state.chance(p):
        return step_gsat(state)
    clause = state.random_violated_clause()
    if state.chance(wp):
        return state.random_member(clause)
    return greedy_member(state, clause)


class GwsatSolver(BaseSolver):
    """GSAT steps interleaved with random-walk steps in violated clauses"""

    heuristic = Heuristic.GWSAT

    def select_flip(self, state: SearchState) -> int:
        return step_gwsat(state, self.config.walk_p, self.config.gwsat_wp)

    def tuning_parameter(self) -> Optional[str]:
        return 'walk_p'
