"""
Hardware-faithful noise sampling: DAC-quantized uniform and alias-method Gaussian
"""

import math

import numpy as np

from models.solver_config import NoiseConfig, NoiseDistribution
from rng.alias import discretized_gaussian, sample_alias_array, DEFAULT_GAUSSIAN_SPAN
from rng.xorshift import XorShiftRng


def quantized_uniform_levels(n_bits: int, amplitude: float) -> np.ndarray:
    """The 2^n_bits equispaced DAC output levels spanning [-amplitude, +amplitude]"""
    if n_bits < 1:
        raise ValueError(f"n_bits must be >= 1, got {n_bits}")
    if amplitude < 0:
        raise ValueError(f"amplitude must be >= 0, got {amplitude}")
    return np.linspace(-amplitude, amplitude, 1 << n_bits)


def _level_indices(words: np.ndarray, n_bits: int) -> np.ndarray:
    # Top n_bits of each PNRG word drive the DAC
    return (words >> np.uint64(64 - n_bits)).astype(np.int64)


def quantized_uniform_noise(n_bits: int, amplitude: float, rng: XorShiftRng) -> float:
    """One DAC output chosen uniformly among its 2^n_bits levels"""
    levels = quantized_uniform_levels(n_bits, amplitude)
    return float(levels[rng.next_u64() >> (64 - n_bits)])


def quantized_uniform_array(n_bits: int, amplitude: float, rng: XorShiftRng, n: int) -> np.ndarray:
    levels = quantized_uniform_levels(n_bits, amplitude)
    return levels[_level_indices(rng.random_u64(n), n_bits)]


def quantized_uniform_std(n_bits: int, amplitude: float) -> float:
    """Standard deviation of the discrete uniform over the DAC levels"""
    count = 1 << n_bits
    if count == 1:
        return 0.0
    return amplitude / math.sqrt(3.0) * math.sqrt((count + 1) / (count - 1))


def amplitude_for_std(std: float, n_bits: int) -> float:
    """DAC amplitude giving the requested standard deviation"""
    count = 1 << n_bits
    return std * math.sqrt(3.0) * math.sqrt((count - 1) / (count + 1))


class NoiseSource:
    """
    Per-variable noise generator for one try

    Adds sigma_N-scaled samples to a make or gain vector. Silent configs
    draw nothing from the rng.
    """

    def __init__(self, config: NoiseConfig, scale: float):
        """
        Args:
            config: Noise profile
            scale: Full-scale reference d_max; sigma_N = relative_sigma * scale
        """
        self.config = config
        self.sigma = config.relative_sigma * scale
        self._table = None
        self._amplitude = 0.0
        if config.distribution is NoiseDistribution.NORMAL:
            self._table = discretized_gaussian(config.gaussian_levels, DEFAULT_GAUSSIAN_SPAN)
        elif config.distribution is NoiseDistribution.UNIFORM:
            self._amplitude = amplitude_for_std(self.sigma, config.dac_bits)

    @property
    def silent(self) -> bool:
        return self.config.distribution is NoiseDistribution.NONE or self.sigma == 0

    def sample(self, rng: XorShiftRng, n: int) -> np.ndarray:
        if self.silent:
            return np.zeros(n)
        if self.config.distribution is NoiseDistribution.UNIFORM:
            return quantized_uniform_array(self.config.dac_bits, self._amplitude, rng, n)
        return self.sigma * sample_alias_array(self._table, rng, n)

    def perturb(self, values: np.ndarray, rng: XorShiftRng) -> np.ndarray:
        """values + noise, as floats"""
        if self.silent:
            return values.astype(np.float64)
        return values + self.sample(rng, values.size)
