"""
Walker alias method tables and the discretized Gaussian noise generator

The hardware GPRNG keeps three look-up tables: a probability table H, an
alias table A and a non-alias table N. An index k and a threshold h are
drawn; N(k) is output when h < H(k), A(k) otherwise.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import stats

from rng.xorshift import XorShiftRng

logger = logging.getLogger(__name__)

DEFAULT_GAUSSIAN_LEVELS = 64
DEFAULT_GAUSSIAN_SPAN = 4.0


class AliasTableError(ValueError):
    """Raised for weight lists the alias construction cannot use"""


@dataclass(frozen=True, eq=False)
class AliasTable:
    """H, A, N tables plus the real value attached to each level"""
    probability: np.ndarray  # H, thresholds in [0, 1]
    alias: np.ndarray        # A, level indices
    non_alias: np.ndarray    # N, level indices
    levels: np.ndarray       # level values

    def __len__(self):
        return int(self.probability.size)

    def level_probabilities(self) -> np.ndarray:
        """Exact output distribution over level indices implied by the tables"""
        size = len(self)
        probs = np.zeros(size)
        np.add.at(probs, self.non_alias, self.probability / size)
        np.add.at(probs, self.alias, (1.0 - self.probability) / size)
        return probs


def build_alias_table(weights: Sequence[float], levels: Sequence[float] = None) -> AliasTable:
    """
    Vose's construction of Walker alias tables

    Args:
        weights: Nonnegative weights, not all zero
        levels: Value emitted for each weight (defaults to the index)

    Returns:
        AliasTable reproducing the normalized weights exactly in expectation
    """
    w = np.asarray(weights, dtype=np.float64)
    if w.ndim != 1 or w.size == 0:
        raise AliasTableError("weights must be a nonempty 1-D sequence")
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise AliasTableError("weights must be finite and nonnegative")
    total = w.sum()
    if total <= 0:
        raise AliasTableError("weights are all zero")

    size = w.size
    if levels is None:
        level_values = np.arange(size, dtype=np.float64)
    else:
        level_values = np.asarray(levels, dtype=np.float64)
        if level_values.shape != w.shape:
            raise AliasTableError("levels and weights must have the same length")

    scaled = list(w * size / total)
    probability = np.ones(size)
    alias = np.arange(size, dtype=np.int64)

    small = [i for i, p in enumerate(scaled) if p < 1.0]
    large = [i for i, p in enumerate(scaled) if p >= 1.0]
    while small and large:
        s = small.pop()
        g = large.pop()
        probability[s] = scaled[s]
        alias[s] = g
        scaled[g] = (scaled[g] + scaled[s]) - 1.0
        if scaled[g] < 1.0:
            small.append(g)
        else:
            large.append(g)
    # Leftovers are 1 up to rounding
    for i in small + large:
        probability[i] = 1.0
        alias[i] = i

    return AliasTable(
        probability=np.clip(probability, 0.0, 1.0),
        alias=alias,
        non_alias=np.arange(size, dtype=np.int64),
        levels=level_values,
    )


def sample_alias(table: AliasTable, rng: XorShiftRng) -> float:
    """Draw one level value: index k, then threshold h against H(k)"""
    k = rng.randbelow(len(table))
    h = rng.next_unit()
    if h < table.probability[k]:
        return float(table.levels[table.non_alias[k]])
    return float(table.levels[table.alias[k]])


def sample_alias_array(table: AliasTable, rng: XorShiftRng, n: int) -> np.ndarray:
    """Vectorized sample_alias (index block drawn before threshold block)"""
    k = rng.randbelow_array(len(table), n)
    h = rng.random_units(n)
    chosen = np.where(h < table.probability[k], table.non_alias[k], table.alias[k])
    return table.levels[chosen]


def discretized_gaussian(levels: int = DEFAULT_GAUSSIAN_LEVELS,
                         span: float = DEFAULT_GAUSSIAN_SPAN) -> AliasTable:
    """
    Alias table for a standard normal discretized on equispaced levels

    Args:
        levels: Number of table entries
        span: Levels cover [-span, +span] standard deviations

    Returns:
        AliasTable whose level values are in units of sigma
    """
    if levels < 2:
        raise AliasTableError(f"Gaussian table needs at least 2 levels, got {levels}")
    points = np.linspace(-span, span, levels)
    table = build_alias_table(stats.norm.pdf(points), levels=points)
    logger.debug("Built %d-level Gaussian alias table over ±%.1f sigma", levels, span)
    return table
