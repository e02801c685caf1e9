"""
Benchmark result rows - the results.csv schema
"""

from dataclasses import dataclass, asdict
from typing import Any, Dict, Optional

RESULT_SCHEMA_VERSION = 1

RESULT_COLUMNS = [
    'instance_id',
    'heuristic',
    'V',
    'C',
    'k',
    'seed',
    'max_flips',
    'sigma_rel',
    'median_its',
    'tts_seconds',
    'ets_joules',
    'energy_per_cycle_joules',
    'success_fraction',
]


@dataclass(frozen=True)
class ResultRow:
    """One benchmark instance under one heuristic"""
    instance_id: str
    heuristic: str
    num_vars: int
    num_clauses: int
    k: int
    seed: int
    max_flips: int
    sigma_rel: Optional[float]
    median_its: float
    tts_seconds: float
    ets_joules: float
    energy_per_cycle_joules: float
    success_fraction: float

    def to_dict(self) -> Dict[str, Any]:
        """Row keyed by the CSV column names"""
        data = asdict(self)
        data['V'] = data.pop('num_vars')
        data['C'] = data.pop('num_clauses')
        return {column: data[column] for column in RESULT_COLUMNS}
