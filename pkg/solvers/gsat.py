"""
GSAT - greedy flip of the highest-gain variable
"""

from models.solver_config import Heuristic
from solvers.base_solver import BaseSolver, SearchState


def step_gsat(state: SearchState) -> int:
    """Flip index: argmax of g over all variables (no noise)"""
    return state.select(state.gain)


class GsatSolver(BaseSolver):
    """GSAT on the gain datapath"""

    heuristic = Heuristic.GSAT

    def select_flip(self, state: SearchState) -> int:
        return step_gsat(state)

