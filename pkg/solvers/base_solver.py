"""
Abstract base class for all local search heuristics (GSAT, WalkSAT, GNSAT, ...)
Defines the per-try search state and the winner-take-all selection they share
"""

from abc import ABC, abstractmethod
from typing import Optional, Sequence

import numpy as np

from accelerator.datapath import KlimaDatapath, DatapathOutputs
from models.activity import ActivityStats
from models.formula import Assignment
from models.solver_config import Heuristic, SolverConfig, TieBreak
from rng.noise import NoiseSource
from rng.xorshift import XorShiftRng


class SolverError(RuntimeError):
    """Raised when a search step is illegal or an invariant check fails"""


def wta_select(values: Sequence[float], tie_break: TieBreak, rng: XorShiftRng) -> int:
    """
    Winner-take-all: index of the largest value

    Args:
        values: Nonempty sequence of line values
        tie_break: RANDOM picks uniformly among the maxima, LOWEST_INDEX the first
        rng: Consumed only for a RANDOM tie

    Returns:
        0-based index of the winner
    """
    values = np.asarray(values)
    if values.size == 0:
        raise SolverError("WTA over an empty set of lines")
    if tie_break is TieBreak.LOWEST_INDEX:
        return int(np.argmax(values))
    winners = np.flatnonzero(values == values.max())
    if winners.size == 1:
        return int(winners[0])
    return int(winners[rng.randbelow(winners.size)])


class SearchState:
    """
    Mutable state of one try: assignment, ML vector and the last datapath outputs

    Every datapath evaluation is recorded in `activity` for the energy model.
    """

    def __init__(self, datapath: KlimaDatapath, bits: np.ndarray, rng: XorShiftRng,
                 config: SolverConfig, noise: Optional[NoiseSource] = None,
                 uses_break: bool = True):
        image = datapath.image
        self.datapath = datapath
        self.bits = np.asarray(bits, dtype=np.int64).copy()
        self.rng = rng
        self.config = config
        self.noise = noise
        self.uses_break = uses_break
        self.flips = 0
        self.activity = ActivityStats(num_vars=image.num_vars, num_clauses=image.num_clauses)
        self.outputs: DatapathOutputs = datapath.evaluate(self.bits)
        self._record(self.outputs)

    def _record(self, out: DatapathOutputs):
        lengths = self.datapath.clause_lengths
        self.activity.cycles += 1
        self.activity.ml_cells += int(out.ml.sum())
        self.activity.make_cells += int(lengths[out.mlm].sum())
        self.activity.comparator_fires += int(out.mlm.sum())
        if self.uses_break:
            self.activity.break_cells += int(lengths[out.mlb].sum())
            self.activity.comparator_fires += int(out.mlb.sum())

    @property
    def unsat_count(self) -> int:
        return self.outputs.unsat_count

    @property
    def satisfied(self) -> bool:
        return self.outputs.satisfied

    @property
    def make(self) -> np.ndarray:
        return self.outputs.make

    @property
    def brk(self) -> np.ndarray:
        return self.outputs.brk

    @property
    def gain(self) -> np.ndarray:
        return self.outputs.gain

    def chance(self, probability: float) -> bool:
        """True with the given probability (one fresh uniform draw)"""
        return self.rng.next_unit() < probability

    def random_violated_clause(self) -> int:
        violated = np.flatnonzero(self.outputs.mlm)
        if violated.size == 0:
            raise SolverError("No violated clause to pick from")
        return int(violated[self.rng.randbelow(violated.size)])

    def members(self, clause: int) -> np.ndarray:
        return self.datapath.clause_members[clause]

    def random_member(self, clause: int) -> int:
        members = self.members(clause)
        return int(members[self.rng.randbelow(members.size)])

    def select(self, values: Sequence[float]) -> int:
        return wta_select(values, self.config.tie_break, self.rng)

    def add_noise(self, values: np.ndarray) -> np.ndarray:
        """values plus this try's noise; a silent source leaves values unchanged"""
        if self.noise is None or self.noise.silent:
            return values
        self.activity.noise_samples += values.size
        return self.noise.perturb(values, self.rng)

    def flip(self, variable: int):
        """Invert one variable and re-run the datapath"""
        old_value = int(self.bits[variable])
        before = self.outputs
        self.bits[variable] = 1 - old_value
        ml = self.datapath.update_distances(before.ml, variable, old_value)
        self.outputs = self.datapath.evaluate(self.bits, ml)
        self.flips += 1
        self.activity.register_writes += 1
        self._record(self.outputs)

        if self.config.check_invariants:
            expected = before.unsat_count - int(before.make[variable]) + int(before.brk[variable])
            if self.outputs.unsat_count != expected:
                raise SolverError(
                    f"Flip identity violated at flip {self.flips} (x{variable + 1}): "
                    f"w={self.outputs.unsat_count}, expected {expected}")
            if not np.array_equal(ml, self.datapath.distances(self.bits)):
                raise SolverError(f"Incremental ML update diverged at flip {self.flips}")

    def assignment(self) -> Assignment:
        return Assignment.from_values(self.bits)


class BaseSolver(ABC):
    """Abstract base class for local search heuristics"""

    heuristic: Heuristic = None
    uses_break = True
    """Whether the heuristic needs the break pass of the DPE."""

    def __init__(self, config: SolverConfig):
        self.config = config

    @abstractmethod
    def select_flip(self, state: SearchState) -> int:
        """
        Choose the variable to flip

        Args:
            state: Current search state, with at least one violated clause

        Returns:
            0-based variable index
        """
        pass

    def tuning_parameter(self) -> Optional[str]:
        """
        Name of the hyperparameter tuned for this heuristic
        Can be overridden by subclasses

        Returns:
            'sigma_rel', 'walk_p' or None
        """
        return None

    def noise_source(self, datapath: KlimaDatapath) -> Optional[NoiseSource]:
        return None

    def step(self, state: SearchState) -> int:
        """Pick a flip; illegal once the formula is satisfied"""
        if state.satisfied:
            raise SolverError(f"{self.config.label} step called on a satisfied state")
        state.activity.wta_selections += 1
        return self.select_flip(state)

    def __repr__(self):
        return f"{type(self).__name__}({self.config.label})"
