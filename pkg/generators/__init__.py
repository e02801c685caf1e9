"""Instance generators package"""

from .random_ksat import PHASE_TRANSITION_ALPHA, generate_random_ksat, phase_transition_alpha

__all__ = ['PHASE_TRANSITION_ALPHA', 'generate_random_ksat', 'phase_transition_alpha']
