"""Accelerator model package"""

from .image import TernaryCell, AcceleratorImage, compile_formula
from .datapath import (Thresholds, MlVector, GradientVectors, DatapathOutputs, KlimaDatapath,
                       match_distances, violated_mask, single_sat_mask, make_values,
                       break_values, gain_values, MAKE_THRESHOLD)

__all__ = ['TernaryCell', 'AcceleratorImage', 'compile_formula',
           'Thresholds', 'MlVector', 'GradientVectors', 'DatapathOutputs', 'KlimaDatapath',
           'match_distances', 'violated_mask', 'single_sat_mask', 'make_values',
           'break_values', 'gain_values', 'MAKE_THRESHOLD']
