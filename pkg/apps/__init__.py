"""Command implementations package"""

from .experiment_config import ExperimentConfig, GeneratorSpec, experiment_from_dict, load_experiment_config
from .bench_app import cmd_generate, cmd_solve, cmd_benchmark, cmd_advantage, cmd_sweep

__all__ = ['ExperimentConfig', 'GeneratorSpec', 'experiment_from_dict', 'load_experiment_config',
           'cmd_generate', 'cmd_solve', 'cmd_benchmark', 'cmd_advantage', 'cmd_sweep']
