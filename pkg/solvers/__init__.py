"""Local search heuristics package"""

from .base_solver import BaseSolver, SearchState, SolverError, wta_select
from .gsat import GsatSolver, step_gsat
from .walksat import WalkSatSolver, WalkSatSkcSolver, step_walksat, step_walksat_skc
from .gwsat import GwsatSolver, step_gwsat
from .noisy import GnsatSolver, MnsatSolver, step_gnsat, step_mnsat
from .runner import SOLVERS, create_solver, run_try, run_instance

__all__ = ['BaseSolver', 'SearchState', 'SolverError', 'wta_select',
           'GsatSolver', 'step_gsat',
           'WalkSatSolver', 'WalkSatSkcSolver', 'step_walksat', 'step_walksat_skc',
           'GwsatSolver', 'step_gwsat',
           'GnsatSolver', 'MnsatSolver', 'step_gnsat', 'step_mnsat',
           'SOLVERS', 'create_solver', 'run_try', 'run_instance']
