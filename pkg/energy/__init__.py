"""Energy and latency model package"""

from .params import (EnergyParams, TABLE_KEYS, params_from_table, params_to_table,
                     load_energy_params, dump_energy_params)
from .energy_model import (HardwareVariant, CrossbarShape, ArrayGeometry, ActivityLevels,
                           EnergyBreakdown, SweepPoint, row_capacitance, switching_capacitance,
                           row_power, tia_power, crossbar_energy, dac_current, dac_energy,
                           uniform_noise_energy, gaussian_noise_energy, wta_energy, noise_energy,
                           latency_per_iteration, iteration_energy, energy_sweep,
                           breakdowns_to_frame, sweep_to_frame)

__all__ = ['EnergyParams', 'TABLE_KEYS', 'params_from_table', 'params_to_table',
           'load_energy_params', 'dump_energy_params',
           'HardwareVariant', 'CrossbarShape', 'ArrayGeometry', 'ActivityLevels',
           'EnergyBreakdown', 'SweepPoint', 'row_capacitance', 'switching_capacitance',
           'row_power', 'tia_power', 'crossbar_energy', 'dac_current', 'dac_energy',
           'uniform_noise_energy', 'gaussian_noise_energy', 'wta_energy', 'noise_energy',
           'latency_per_iteration', 'iteration_energy', 'energy_sweep',
           'breakdowns_to_frame', 'sweep_to_frame']
