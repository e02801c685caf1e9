"""
WalkSAT variants - focused random walk over the members of a violated clause
"""

from typing import Optional

import numpy as np

from models.solver_config import Heuristic
from solvers.base_solver import BaseSolver, SearchState


def greedy_member(state: SearchState, clause: int) -> int:
    """Member of `clause` with the highest gain (WTA over the clause's columns)"""
    members = state.members(clause)
    return int(members[state.select(state.gain[members])])


def step_walksat(state: SearchState, p: float) -> int:
    """
    WalkSAT as run on the accelerator

    A violated clause is picked uniformly; with probability p a random
    member is flipped, otherwise the member with the highest gain.
    """
    clause = state.random_violated_clause()
    if state.chance(p):
        return state.random_member(clause)
    return greedy_member(state, clause)


def step_walksat_skc(state: SearchState, p: float) -> int:
    """
    WalkSAT-SKC

    A member with break 0 is flipped whenever the chosen clause has one.
    Otherwise, with probability p a random member, else the member with
    the lowest break.
    """
    clause = state.random_violated_clause()
    members = state.members(clause)
    breaks = state.brk[members]
    freebies = members[breaks == 0]
    if freebies.size:
        return int(freebies[state.select(np.zeros(freebies.size))])
    if state.chance(p):
        return state.random_member(clause)
    return int(members[state.select(-breaks)])


class WalkSatSolver(BaseSolver):
    """WalkSAT with greedy-in-clause selection by gain"""

    heuristic = Heuristic.WALKSAT

    def select_flip(self, state: SearchState) -> int:
        return step_walksat(state, self.config.walk_p)

    def tuning_parameter(self) -> Optional[str]:
        return 'walk_p'


class WalkSatSkcSolver(WalkSatSolver):
    """Selman-Kautz-Cohen WalkSAT (break-only scoring)"""

    heuristic = Heuristic.WALKSAT_SKC

    def select_flip(self, state: SearchState) -> int:
        return step_walksat_skc(state, self.config.walk_p)
