"""Random number generation package"""

from .xorshift import XorShiftRng, RngState, derive_stream_seed, splitmix64, xorshift64star
from .alias import (AliasTable, AliasTableError, build_alias_table, sample_alias,
                    sample_alias_array, discretized_gaussian)
from .noise import (NoiseSource, quantized_uniform_noise, quantized_uniform_levels,
                    quantized_uniform_std, amplitude_for_std)

__all__ = ['XorShiftRng', 'RngState', 'derive_stream_seed', 'splitmix64', 'xorshift64star',
           'AliasTable', 'AliasTableError', 'build_alias_table', 'sample_alias',
           'sample_alias_array', 'discretized_gaussian',
           'NoiseSource', 'quantized_uniform_noise', 'quantized_uniform_levels',
           'quantized_uniform_std', 'amplitude_for_std']
