"""
Solver configuration - heuristic choice, noise profile and search limits
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict

# Alias table size limit of the vectorized index draw (rng.xorshift.MAX_VECTOR_BOUND)
MAX_GAUSSIAN_LEVELS = 1 << 11
MAX_DAC_BITS = 16


class Heuristic(Enum):
    GSAT = 'GSAT'
    WALKSAT = 'WALKSAT'
    WALKSAT_SKC = 'WALKSAT_SKC'
    GWSAT = 'GWSAT'
    MNSAT = 'MNSAT'
    GNSAT = 'GNSAT'

    @classmethod
    def parse(cls, name: str) -> 'Heuristic':
        """Case-insensitive lookup; accepts '-' for '_'"""
        key = name.strip().upper().replace('-', '_')
        try:
            return cls[key]
        except KeyError:
            valid = ', '.join([h.value for h in cls] + ['GNSAT-N', 'GNSAT-U'])
            raise ValueError(f"Unknown heuristic '{name}'. Valid names: {valid}") from None

    @property
    def uses_noise(self) -> bool:
        return self in (Heuristic.MNSAT, Heuristic.GNSAT)

    @property
    def uses_walk_probability(self) -> bool:
        return self in (Heuristic.WALKSAT, Heuristic.WALKSAT_SKC, Heuristic.GWSAT)


class NoiseDistribution(Enum):
    NONE = 'NONE'
    UNIFORM = 'UNIFORM'
    NORMAL = 'NORMAL'


class TieBreak(Enum):
    RANDOM = 'RANDOM'
    LOWEST_INDEX = 'LOWEST_INDEX'


@dataclass(frozen=True)
class NoiseConfig:
    """
    Noise injected on the make/gain currents before the WTA

    The absolute standard deviation is sigma_N = relative_sigma * d_max,
    with d_max the largest number of clauses any variable appears in.
    """

    distribution: NoiseDistribution = NoiseDistribution.NORMAL
    """Noise profile."""

    relative_sigma: float = 0.1
    """Standard deviation relative to the full-scale line current."""

    dac_bits: int = 4
    """Resolution of the DACs producing uniform noise."""

    gaussian_levels: int = 64
    """Entries of the Gaussian alias table (levels over ±4 sigma)."""

    def __post_init__(self):
        if self.relative_sigma < 0:
            raise ValueError(f"relative_sigma must be >= 0, got {self.relative_sigma}")
        if not 1 <= self.dac_bits <= MAX_DAC_BITS:
            raise ValueError(f"dac_bits must be in [1, {MAX_DAC_BITS}], got {self.dac_bits}")
        if not 2 <= self.gaussian_levels <= MAX_GAUSSIAN_LEVELS:
            raise ValueError(f"gaussian_levels must be in [2, {MAX_GAUSSIAN_LEVELS}], got {self.gaussian_levels}")

    @property
    def is_silent(self) -> bool:
        return self.distribution is NoiseDistribution.NONE or self.relative_sigma == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'distribution': self.distribution.value,
            'relative_sigma': self.relative_sigma,
            'dac_bits': self.dac_bits,
            'gaussian_levels': self.gaussian_levels,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'NoiseConfig':
        opts = cls().to_dict()
        opts.update(data or {})
        return cls(
            distribution=NoiseDistribution(str(opts['distribution']).upper()),
            relative_sigma=float(opts['relative_sigma']),
            dac_bits=int(opts['dac_bits']),
            gaussian_levels=int(opts['gaussian_levels']),
        )


@dataclass(frozen=True)
class SolverConfig:
    """Everything a try needs besides the formula"""

    heuristic: Heuristic = Heuristic.GNSAT
    """Local search heuristic."""

    noise: NoiseConfig = field(default_factory=NoiseConfig)
    """Noise profile (MNSAT and GNSAT only)."""

    max_flips: int = 10000
    """Flips per try before giving up (MAX_flips). 0 only checks the initial assignment."""

    max_tries: int = 100
    """Independent tries per instance (MAX_tries)."""

    walk_p: float = 0.5
    """WalkSAT noise p (random member probability); GWSAT GSAT-step probability."""

    gwsat_wp: float = 0.5
    """GWSAT random member probability within the walk step."""

    seed: int = 0
    """Master seed; try i uses stream i."""

    tie_break: TieBreak = TieBreak.RANDOM
    """WTA tie policy."""

    record_trajectory: bool = False
    """Keep the flipped indices of every try."""

    check_invariants: bool = False
    """Assert the flip identity every step and re-verify solutions."""

    def __post_init__(self):
        if self.max_flips < 0:
            raise ValueError(f"max_flips must be >= 0, got {self.max_flips}")
        if self.max_tries < 1:
            raise ValueError(f"max_tries must be >= 1, got {self.max_tries}")
        for name in ('walk_p', 'gwsat_wp'):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")
        if self.heuristic is Heuristic.MNSAT and self.noise.distribution is NoiseDistribution.NORMAL:
            raise ValueError("MNSAT noise comes from the uniform DAC; use distribution UNIFORM or NONE")

    def with_options(self, **changes) -> 'SolverConfig':
        return replace(self, **changes)

    @property
    def label(self) -> str:
        """Short name used in reports (GNSAT-N, GNSAT-U, ...)"""
        if self.heuristic is Heuristic.GNSAT and self.noise.distribution is not NoiseDistribution.NONE:
            return f"GNSAT-{self.noise.distribution.value[0]}"
        return self.heuristic.value.replace('_', '-')

    @classmethod
    def from_label(cls, label: str, **changes) -> 'SolverConfig':
        """
        Config from a heuristic name or a report label such as GNSAT-N / GNSAT-U

        MNSAT always gets the uniform DAC noise of its datapath.
        """
        key = label.strip().upper()
        variants = {'GNSAT-N': NoiseDistribution.NORMAL, 'GNSAT-U': NoiseDistribution.UNIFORM}
        if key in variants:
            noise = replace(changes.pop('noise', NoiseConfig()), distribution=variants[key])
            return cls(heuristic=Heuristic.GNSAT, noise=noise, **changes)
        heuristic = Heuristic.parse(label)
        if heuristic is Heuristic.MNSAT:
            noise = changes.pop('noise', NoiseConfig())
            if noise.distribution is NoiseDistribution.NORMAL:
                noise = replace(noise, distribution=NoiseDistribution.UNIFORM)
            changes['noise'] = noise
        return cls(heuristic=heuristic, **changes)

    @staticmethod
    def get_default_options() -> Dict[str, Any]:
        """Default option values, keyed as in the config file 'solver' section"""
        return SolverConfig().to_dict()

    def to_dict(self) -> Dict[str, Any]:
        return {
            'heuristic': self.heuristic.value,
            'noise': self.noise.to_dict(),
            'max_flips': self.max_flips,
            'max_tries': self.max_tries,
            'walk_p': self.walk_p,
            'gwsat_wp': self.gwsat_wp,
            'seed': self.seed,
            'tie_break': self.tie_break.value,
            'record_trajectory': self.record_trajectory,
            'check_invariants': self.check_invariants,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SolverConfig':
        """Merge `data` over the defaults and build a validated config"""
        opts = cls.get_default_options()
        if data:
            opts.update(data)
        return cls.from_label(
            str(opts['heuristic']),
            noise=NoiseConfig.from_dict(opts['noise']),
            max_flips=int(opts['max_flips']),
            max_tries=int(opts['max_tries']),
            walk_p=float(opts['walk_p']),
            gwsat_wp=float(opts['gwsat_wp']),
            seed=int(opts['seed']),
            tie_break=TieBreak(str(opts['tie_break']).upper()),
            record_trajectory=bool(opts['record_trajectory']),
            check_invariants=bool(opts['check_invariants']),
        )
