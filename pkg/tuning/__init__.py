"""Hyperparameter tuning package"""

from .tuner import (TuneConfig, TunedParams, TuningPoint, TuningError, split_instances,
                    sample_values, tune, with_parameter)

__all__ = ['TuneConfig', 'TunedParams', 'TuningPoint', 'TuningError', 'split_instances',
           'sample_values', 'tune', 'with_parameter']
