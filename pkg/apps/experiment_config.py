"""
Benchmark experiment configuration file

JSON with sections mirroring the module configs:

    {
      "instances": {"glob": "uf20-91/*.cnf"}  or  {"generate": {"num_vars": 20, "k": 3, "count": 10}},
      "solvers": [{"heuristic": "GNSAT-N"}, {"heuristic": "MNSAT"}],
      "tune": {"n_noise_samples": 5, "tune_max_iters": 2000, "max_tries": 100},
      "energy_params": "params.json"  or  {"E_PNRG": 365},
      "output_dir": "results",
      "seed": 1,
      "threads": 4
    }

Relative paths are resolved against the config file's directory. Sections
are merged over the dataclass defaults.
"""

import json
import os
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional, Tuple

from energy.params import EnergyParams, load_energy_params, params_from_table
from generators.random_ksat import phase_transition_alpha
from models.solver_config import SolverConfig
from tuning.tuner import TuneConfig

SECTIONS = {'instances', 'solver', 'solvers', 'tune', 'energy_params', 'output_dir', 'seed',
            'threads', 'p_target'}


@dataclass(frozen=True)
class GeneratorSpec:
    """Random k-SAT instance set generated in memory"""
    num_vars: int
    k: int = 3
    alpha: Optional[float] = None
    count: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")
        if self.alpha is None:
            object.__setattr__(self, 'alpha', phase_transition_alpha(self.k))

    def to_dict(self) -> Dict[str, Any]:
        return {'num_vars': self.num_vars, 'k': self.k, 'alpha': self.alpha,
                'count': self.count, 'seed': self.seed}


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything cmd_benchmark needs"""

    solvers: Tuple[SolverConfig, ...]
    """Heuristics to tune and benchmark."""

    instance_glob: Optional[str] = None
    """DIMACS files to load (sorted by path)."""

    generator: Optional[GeneratorSpec] = None
    """Instance generator, used instead of files."""

    tune: TuneConfig = field(default_factory=TuneConfig)
    """Tuning split and grid."""

    energy_params: EnergyParams = field(default_factory=EnergyParams)
    """Circuit parameters of the energy model."""

    energy_params_path: Optional[str] = None
    """File the energy parameters were loaded from, if any."""

    output_dir: str = 'results'
    """Directory receiving results.csv, breakdown.json, summary.json, manifest.json."""

    seed: int = 0
    """Master seed of split, tuning and benchmark runs."""

    threads: int = 1
    """Worker threads for the tries of one run."""

    p_target: float = 0.99
    """Target success probability of ITS."""

    def __post_init__(self):
        object.__setattr__(self, 'solvers', tuple(self.solvers))
        if (self.instance_glob is None) == (self.generator is None):
            raise ValueError("Experiment needs exactly one instance source: 'glob' or 'generate'")
        if not self.solvers:
            raise ValueError("Experiment needs at least one solver")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if not 0.0 < self.p_target < 1.0:
            raise ValueError(f"p_target must be in (0, 1), got {self.p_target}")

    def with_options(self, **changes) -> 'ExperimentConfig':
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        """Echo of the effective configuration for the manifest"""
        if self.generator is not None:
            instances = {'generate': self.generator.to_dict()}
        else:
            instances = {'glob': self.instance_glob}
        return {
            'instances': instances,
            'solvers': [s.to_dict() for s in self.solvers],
            'tune': self.tune.to_dict(),
            'energy_params_path': self.energy_params_path,
            'output_dir': self.output_dir,
            'seed': self.seed,
            'threads': self.threads,
            'p_target': self.p_target,
        }


def _resolve(base_dir: str, path: str) -> str:
    return path if os.path.isabs(path) else os.path.normpath(os.path.join(base_dir, path))


def experiment_from_dict(data: Dict[str, Any], base_dir: str = '.') -> ExperimentConfig:
    """
    Build an ExperimentConfig from parsed JSON

    Args:
        data: Config object
        base_dir: Directory relative paths are resolved against

    Returns:
        Validated ExperimentConfig
    """
    unknown = sorted(set(data) - SECTIONS)
    if unknown:
        raise ValueError(f"Unknown config section(s): {', '.join(unknown)}")

    seed = int(data.get('seed', 0))

    source = data.get('instances') or {}
    instance_glob = None
    generator = None
    if 'glob' in source and 'generate' in source:
        raise ValueError("Experiment needs exactly one instance source: 'glob' or 'generate'")
    if 'glob' in source:
        instance_glob = _resolve(base_dir, source['glob'])
    elif 'generate' in source:
        opts = {'seed': seed}
        opts.update(source['generate'])
        generator = GeneratorSpec(**opts)

    if 'solvers' in data:
        solvers = tuple(SolverConfig.from_dict(s) for s in data['solvers'])
    else:
        solvers = (SolverConfig.from_dict(data.get('solver') or {}),)

    tune_opts = {'seed': seed}
    tune_opts.update(data.get('tune') or {})

    energy = data.get('energy_params')
    energy_path = None
    if isinstance(energy, str):
        energy_path = _resolve(base_dir, energy)
        if not os.path.isfile(energy_path):
            raise ValueError(f"Energy parameter file not found: {energy_path}")
        params = load_energy_params(energy_path)
    elif isinstance(energy, dict):
        params = params_from_table(energy)
    else:
        params = EnergyParams()

    return ExperimentConfig(
        solvers=solvers,
        instance_glob=instance_glob,
        generator=generator,
        tune=TuneConfig.from_dict(tune_opts),
        energy_params=params,
        energy_params_path=energy_path,
        output_dir=_resolve(base_dir, str(data.get('output_dir', 'results'))),
        seed=seed,
        threads=int(data.get('threads', 1)),
        p_target=float(data.get('p_target', 0.99)),
    )


def load_experiment_config(file_path: str) -> ExperimentConfig:
    with open(file_path, 'r', encoding='utf-8') as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise ValueError(f"{file_path}: experiment config must hold a JSON object")
    return experiment_from_dict(data, base_dir=os.path.dirname(os.path.abspath(file_path)))
