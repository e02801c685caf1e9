"""
Iterations/time/energy to solution

ITS(t) = t ln(1 - P_target) / ln(1 - P(t)) is the number of iterations
needed to reach P_target with independent restarts of length t.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Sequence, Tuple

import numpy as np

from models.run_record import RunRecord

DEFAULT_P_TARGET = 0.99


class ItsError(ValueError):
    """Raised when a curve has no finite point or inputs are out of range"""


def success_probability(record: RunRecord, t: int) -> float:
    """Fraction of tries solved within t flips"""
    if t < 0:
        raise ItsError(f"t must be >= 0, got {t}")
    solved = sum(1 for f in record.solved_flips() if f <= t)
    return solved / len(record.tries)


def its(t: float, p: float, p_target: float = DEFAULT_P_TARGET) -> float:
    """
    Iterations to solution for restarts of length t succeeding with probability p

    Returns t when p equals p_target or 1, and inf when p = 0.
    """
    if not 0.0 < p_target < 1.0:
        raise ItsError(f"p_target must be in (0, 1), got {p_target}")
    if not 0.0 <= p <= 1.0:
        raise ItsError(f"success probability must be in [0, 1], got {p}")
    if p == 0.0:
        return math.inf
    if p == 1.0 or p == p_target:
        return float(t)
    return t * math.log1p(-p_target) / math.log1p(-p)


@dataclass(frozen=True, eq=False)
class ItsCurve:
    """P(t) and ITS(t) at t = 1..T"""
    flips: np.ndarray
    probability: np.ndarray
    its: np.ndarray
    p_target: float = DEFAULT_P_TARGET

    @property
    def defined(self) -> np.ndarray:
        return np.isfinite(self.its)

    def __len__(self):
        return int(self.flips.size)


def its_curve(record: RunRecord, max_flips: int = None, p_target: float = DEFAULT_P_TARGET) -> ItsCurve:
    """
    Exact ITS curve from the first-success flip of every try

    Args:
        record: Run with max_tries tries
        max_flips: Last t of the curve (defaults to the run's max_flips)
        p_target: Target success probability

    Returns:
        ItsCurve over t = 1..max(max_flips, 1)
    """
    if max_flips is None:
        max_flips = record.config.max_flips
    horizon = max(max_flips, 1)
    solved = np.asarray(record.solved_flips(), dtype=np.int64)
    solved = solved[solved <= horizon]
    counts = np.bincount(np.maximum(solved, 1), minlength=horizon + 1)[1:horizon + 1]
    probability = np.cumsum(counts) / len(record.tries)

    t = np.arange(1, horizon + 1, dtype=np.float64)
    with np.errstate(divide='ignore', invalid='ignore'):
        values = t * math.log1p(-p_target) / np.log1p(-probability)
    values = np.where(probability == 0.0, np.inf, values)
    values = np.where((probability == 1.0) | (probability == p_target), t, values)
    return ItsCurve(flips=np.arange(1, horizon + 1), probability=probability, its=values, p_target=p_target)


def optimal_flips(curve: ItsCurve) -> Tuple[int, float]:
    """(MAX_flips*, ITS*): argmin of the defined points, smallest t on ties"""
    defined = curve.defined
    if not defined.any():
        raise ItsError("ITS curve has no defined point (no try ever solved)")
    index = int(np.argmin(np.where(defined, curve.its, np.inf)))
    return int(curve.flips[index]), float(curve.its[index])


def tts(its_value: float, t_iter: float) -> float:
    """Time to solution (s)"""
    if its_value < 0:
        raise ItsError(f"ITS must be >= 0, got {its_value}")
    return its_value * t_iter


def ets(its_value: float, e_mean: float) -> float:
    """Energy to solution (J)"""
    if its_value < 0:
        raise ItsError(f"ITS must be >= 0, got {its_value}")
    return its_value * e_mean


def lower_median(values: Iterable[float]) -> float:
    """Median; the lower middle element for even lengths"""
    ordered = sorted(values)
    if not ordered:
        raise ItsError("median of an empty list")
    return ordered[(len(ordered) - 1) // 2]


def bootstrap_median(values: Sequence[float], n_resamples: int = 1000, seed: int = 0,
                     confidence: float = 0.95) -> Tuple[float, float]:
    """Percentile bootstrap interval of the lower median"""
    data = np.asarray(values, dtype=np.float64)
    if data.size == 0:
        raise ItsError("bootstrap of an empty list")
    if not 0.0 < confidence < 1.0:
        raise ItsError(f"confidence must be in (0, 1), got {confidence}")
    generator = np.random.default_rng(seed)
    samples = np.sort(data[generator.integers(0, data.size, size=(n_resamples, data.size))], axis=1)
    medians = samples[:, (data.size - 1) // 2]
    tail = (1.0 - confidence) / 2
    low, high = np.quantile(medians, [tail, 1.0 - tail], method='lower')
    return float(low), float(high)


@dataclass(frozen=True)
class InstanceMetrics:
    """ITS, TTS and ETS of one instance at a fixed MAX_flips"""
    instance_id: str
    max_flips: int
    success_probability: float
    its: float
    tts: float
    ets: float


def instance_metrics(record: RunRecord, max_flips: int, t_iter: float, e_mean: float,
                     p_target: float = DEFAULT_P_TARGET) -> InstanceMetrics:
    p = success_probability(record, max_flips)
    value = its(max_flips, p, p_target)
    return InstanceMetrics(instance_id=record.instance_id, max_flips=max_flips,
                           success_probability=p, its=value,
                           tts=tts(value, t_iter), ets=ets(value, e_mean))


@dataclass(frozen=True)
class BenchmarkSummary:
    """Per-instance metrics of one heuristic with their cross-instance medians"""
    label: str
    instances: Tuple[InstanceMetrics, ...]
    tuned_params: Dict[str, Any] = field(default_factory=dict)
    energy: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'instances', tuple(self.instances))
        if not self.instances:
            raise ItsError(f"Summary for {self.label} has no instances")

    @property
    def median_its(self) -> float:
        return lower_median(m.its for m in self.instances)

    @property
    def median_tts(self) -> float:
        return lower_median(m.tts for m in self.instances)

    @property
    def median_ets(self) -> float:
        return lower_median(m.ets for m in self.instances)

    @property
    def solved_instances(self) -> List[str]:
        return [m.instance_id for m in self.instances if math.isfinite(m.its)]

    def to_dict(self) -> Dict[str, Any]:
        def finite(value):
            return value if math.isfinite(value) else None

        return {
            'label': self.label,
            'num_instances': len(self.instances),
            'num_solved_instances': len(self.solved_instances),
            'median_its': finite(self.median_its),
            'median_tts_seconds': finite(self.median_tts),
            'median_ets_joules': finite(self.median_ets),
            'tuned_params': self.tuned_params,
            'energy': self.energy,
            'instances': [
                {
                    'instance_id': m.instance_id,
                    'max_flips': m.max_flips,
                    'success_probability': m.success_probability,
                    'its': finite(m.its),
                    'tts_seconds': finite(m.tts),
                    'ets_joules': finite(m.ets),
                }
                for m in self.instances
            ],
        }
