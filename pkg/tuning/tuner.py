"""
Hyperparameter tuning on a held-out split of the instances

For every sampled value of the heuristic's hyperparameter (relative noise
sigma for the noisy heuristics, walk probability for the WalkSAT family)
each tuning instance is run for tune_max_iters flips. The per-instance
optimum is the (value, MAX_flips) pair with the smallest ITS, and the
tuned parameters are the medians of these optima across instances.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Sequence, Tuple, TypeVar, Union

import pandas as pd

from metrics.its import ItsError, its_curve, lower_median, optimal_flips
from models.formula import CnfFormula
from models.solver_config import Heuristic, SolverConfig
from rng.xorshift import XorShiftRng
from solvers.runner import create_solver, run_instance

logger = logging.getLogger(__name__)

T = TypeVar('T')

# rng streams of the tuning master seed
SPLIT_STREAM = 0
SAMPLE_STREAM = 1


class TuningError(RuntimeError):
    """Raised when tuning cannot produce parameters"""


@dataclass(frozen=True)
class TuneConfig:
    """Settings of the held-out tuning procedure"""

    split_fraction: float = 0.2
    """Fraction of instances used for tuning."""

    n_noise_samples: int = 20
    """Hyperparameter values sampled uniformly from the range."""

    noise_range: Tuple[float, float] = (0.01, 2.0)
    """Sampling range of the relative noise sigma."""

    walk_p_range: Tuple[float, float] = (0.0, 1.0)
    """Sampling range of the walk probability p."""

    tune_max_iters: int = 50000
    """Flips per tuning try; the ITS curve spans 1..tune_max_iters."""

    max_tries: int = 1000
    """Tries per (instance, value) grid point."""

    seed: int = 0
    """Seed of the split, the samples and the tuning runs."""

    samples: Optional[Tuple[float, ...]] = None
    """Explicit hyperparameter values, replacing the random samples."""

    def __post_init__(self):
        if not 0.0 < self.split_fraction < 1.0:
            raise ValueError(f"split_fraction must be in (0, 1), got {self.split_fraction}")
        if self.n_noise_samples < 1:
            raise ValueError(f"n_noise_samples must be >= 1, got {self.n_noise_samples}")
        for name in ('noise_range', 'walk_p_range'):
            low, high = getattr(self, name)
            if not low < high:
                raise ValueError(f"{name} needs low < high, got ({low}, {high})")
        if self.tune_max_iters < 1:
            raise ValueError(f"tune_max_iters must be >= 1, got {self.tune_max_iters}")
        if self.max_tries < 1:
            raise ValueError(f"max_tries must be >= 1, got {self.max_tries}")
        if self.samples is not None:
            object.__setattr__(self, 'samples', tuple(float(s) for s in self.samples))
            if not self.samples:
                raise ValueError("samples must not be empty")

    @staticmethod
    def get_default_options() -> Dict[str, Any]:
        return TuneConfig().to_dict()

    def to_dict(self) -> Dict[str, Any]:
        return {
            'split_fraction': self.split_fraction,
            'n_noise_samples': self.n_noise_samples,
            'noise_range': list(self.noise_range),
            'walk_p_range': list(self.walk_p_range),
            'tune_max_iters': self.tune_max_iters,
            'max_tries': self.max_tries,
            'seed': self.seed,
            'samples': None if self.samples is None else list(self.samples),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'TuneConfig':
        opts = cls.get_default_options()
        if data:
            opts.update(data)
        return cls(
            split_fraction=float(opts['split_fraction']),
            n_noise_samples=int(opts['n_noise_samples']),
            noise_range=tuple(float(v) for v in opts['noise_range']),
            walk_p_range=tuple(float(v) for v in opts['walk_p_range']),
            tune_max_iters=int(opts['tune_max_iters']),
            max_tries=int(opts['max_tries']),
            seed=int(opts['seed']),
            samples=opts['samples'],
        )


@dataclass(frozen=True)
class TuningPoint:
    """Optimum of one (instance, value) grid point"""
    instance_id: str
    value: Optional[float]
    max_flips: int
    its: float


@dataclass(frozen=True)
class TunedParams:
    """Median optimum across the tuning instances"""
    parameter: Optional[str]
    value_median: Optional[float]
    max_flips_median: int
    best: Tuple[TuningPoint, ...]
    points: Tuple[TuningPoint, ...] = ()
    excluded: Tuple[str, ...] = ()

    @property
    def sigma_rel_median(self) -> Optional[float]:
        return self.value_median if self.parameter == 'sigma_rel' else None

    def apply(self, config: SolverConfig) -> SolverConfig:
        """config with the tuned MAX_flips and hyperparameter"""
        tuned = config.with_options(max_flips=self.max_flips_median)
        if self.parameter is not None:
            tuned = with_parameter(tuned, self.parameter, self.value_median)
        return tuned

    def to_dict(self) -> Dict[str, Any]:
        return {
            'parameter': self.parameter,
            'value_median': self.value_median,
            'max_flips_median': self.max_flips_median,
            'excluded': list(self.excluded),
            'best': [_point_dict(p) for p in self.best],
        }

    def points_frame(self) -> pd.DataFrame:
        """Every grid point, for the tuning report"""
        return pd.DataFrame([_point_dict(p) for p in self.points],
                            columns=['instance_id', 'value', 'max_flips', 'its'])


def _point_dict(point: TuningPoint) -> Dict[str, Any]:
    return {
        'instance_id': point.instance_id,
        'value': point.value,
        'max_flips': point.max_flips,
        'its': point.its if math.isfinite(point.its) else None,
    }


def with_parameter(config: SolverConfig, parameter: str, value: float) -> SolverConfig:
    if parameter == 'sigma_rel':
        return config.with_options(noise=replace(config.noise, relative_sigma=value))
    if parameter == 'walk_p':
        return config.with_options(walk_p=value)
    raise ValueError(f"Unknown tuning parameter '{parameter}'")


def split_instances(instances: Sequence[T], fraction: float, seed: int) -> Tuple[List[T], List[T]]:
    """
    Deterministic shuffled split into (tune set, benchmark set)

    The tune set holds round(fraction * n) instances; both sets keep the
    input order.
    """
    n = len(instances)
    if n < 2:
        raise ValueError(f"Need at least 2 instances to split, got {n}")
    n_tune = int(math.floor(fraction * n + 0.5))
    if n_tune == 0 or n_tune == n:
        raise ValueError(f"Split fraction {fraction} of {n} instances leaves an empty set")
    order = XorShiftRng(seed=seed, stream=SPLIT_STREAM).shuffle(list(range(n)))
    chosen = set(order[:n_tune])
    tune_set = [instances[i] for i in range(n) if i in chosen]
    bench_set = [instances[i] for i in range(n) if i not in chosen]
    return tune_set, bench_set


def sample_values(cfg: TuneConfig, parameter: Optional[str]) -> List[Optional[float]]:
    """Sorted hyperparameter values to try; [None] if nothing is tuned"""
    if parameter is None:
        return [None]
    if cfg.samples is not None:
        return sorted(cfg.samples)
    low, high = cfg.noise_range if parameter == 'sigma_rel' else cfg.walk_p_range
    rng = XorShiftRng(seed=cfg.seed, stream=SAMPLE_STREAM)
    return sorted(low + (high - low) * rng.next_unit() for _ in range(cfg.n_noise_samples))


def tune(tune_set: Sequence[CnfFormula], heuristic: Union[Heuristic, SolverConfig],
         cfg: TuneConfig = TuneConfig(), threads: int = 1) -> TunedParams:
    """
    Tune MAX_flips and the heuristic's hyperparameter

    Args:
        tune_set: Tuning instances
        heuristic: Heuristic, or a base SolverConfig (noise profile, tie policy)
        cfg: Tuning settings
        threads: Worker threads per grid point

    Returns:
        TunedParams; instances never solved are excluded from the medians
    """
    if not tune_set:
        raise TuningError("Empty tuning set")
    base = heuristic if isinstance(heuristic, SolverConfig) else SolverConfig.from_label(heuristic.value)
    base = base.with_options(max_flips=cfg.tune_max_iters, max_tries=cfg.max_tries, seed=cfg.seed)
    parameter = create_solver(base).tuning_parameter()
    values = sample_values(cfg, parameter)
    logger.info("Tuning %s on %d instance(s) over %d value(s) of %s",
                base.label, len(tune_set), len(values), parameter or 'MAX_flips only')

    points = []
    best = []
    excluded = []
    for formula in tune_set:
        instance_best = None
        for value in values:
            config = base if parameter is None else with_parameter(base, parameter, value)
            record = run_instance(formula, config, threads=threads)
            try:
                max_flips, its_value = optimal_flips(its_curve(record))
            except ItsError:
                max_flips, its_value = cfg.tune_max_iters, math.inf
            point = TuningPoint(instance_id=record.instance_id, value=value,
                                max_flips=max_flips, its=its_value)
            points.append(point)
            logger.debug("%s %s=%s: MAX_flips*=%d ITS*=%.1f", point.instance_id, parameter,
                         value, max_flips, its_value)
            if instance_best is None or its_value < instance_best.its:
                instance_best = point

        if math.isfinite(instance_best.its):
            best.append(instance_best)
            logger.info("Tuned %s: %s=%s MAX_flips=%d ITS=%.1f", instance_best.instance_id,
                        parameter, instance_best.value, instance_best.max_flips, instance_best.its)
        else:
            excluded.append(instance_best.instance_id)
            logger.warning("Instance %s was never solved while tuning; excluded from medians",
                           instance_best.instance_id)

    if not best:
        raise TuningError(f"No tuning instance was solved by {base.label} within {cfg.tune_max_iters} flips")

    return TunedParams(
        parameter=parameter,
        value_median=None if parameter is None else lower_median(p.value for p in best),
        max_flips_median=lower_median(p.max_flips for p in best),
        best=tuple(best),
        points=tuple(points),
        excluded=tuple(excluded),
    )
