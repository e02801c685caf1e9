"""
Noise-injected greedy heuristics: GNSAT (gain) and MNSAT (make only)

Noise is added to every line before the WTA, so the search escapes local
minima without a random-walk decision.
"""

from typing import Optional

from accelerator.datapath import KlimaDatapath
from models.solver_config import Heuristic
from rng.noise import NoiseSource
from solvers.base_solver import BaseSolver, SearchState


def step_gnsat(state: SearchState) -> int:
    """Flip index: WTA over g' = g + noise"""
    return state.select(state.add_noise(state.gain))


def step_mnsat(state: SearchState) -> int:
    """Flip index: WTA over m' = m + noise"""
    return state.select(state.add_noise(state.make))


class GnsatSolver(BaseSolver):
    """Gain-based noisy SAT (KLIMA-G); uniform or Gaussian noise"""

    heuristic = Heuristic.GNSAT

    def select_flip(self, state: SearchState) -> int:
        return step_gnsat(state)

    def tuning_parameter(self) -> Optional[str]:
        return 'sigma_rel'

    def noise_source(self, datapath: KlimaDatapath) -> Optional[NoiseSource]:
        """Noise scaled to d_max, the largest variable fan-in"""
        return NoiseSource(self.config.noise, datapath.image.max_fan_in)


class MnsatSolver(GnsatSolver):
    """Make-based noisy SAT (KLIMA-M): no break pass, single threshold"""

    heuristic = Heuristic.MNSAT
    uses_break = False

    def select_flip(self, state: SearchState) -> int:
        return step_mnsat(state)
