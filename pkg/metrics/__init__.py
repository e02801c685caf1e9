"""Solver quality metrics package"""

from .its import (ItsError, ItsCurve, InstanceMetrics, BenchmarkSummary, DEFAULT_P_TARGET,
                  success_probability, its, its_curve, optimal_flips, tts, ets,
                  lower_median, bootstrap_median, instance_metrics)
from .mapping import mapping_advantage, coupling_counts, advantage_grid

__all__ = ['ItsError', 'ItsCurve', 'InstanceMetrics', 'BenchmarkSummary', 'DEFAULT_P_TARGET',
           'success_probability', 'its', 'its_curve', 'optimal_flips', 'tts', 'ets',
           'lower_median', 'bootstrap_median', 'instance_metrics',
           'mapping_advantage', 'coupling_counts', 'advantage_grid']
