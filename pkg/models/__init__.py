"""Data models package"""

from .formula import FormulaError, Literal, Clause, CnfFormula, Assignment, EvalResult, evaluate
from .solver_config import Heuristic, NoiseDistribution, TieBreak, NoiseConfig, SolverConfig
from .activity import ActivityStats
from .run_record import TryResult, RunRecord
from .experiment import ResultRow, RESULT_COLUMNS, RESULT_SCHEMA_VERSION

__all__ = ['FormulaError', 'Literal', 'Clause', 'CnfFormula', 'Assignment', 'EvalResult', 'evaluate',
           'Heuristic', 'NoiseDistribution', 'TieBreak', 'NoiseConfig', 'SolverConfig',
           'ActivityStats', 'TryResult', 'RunRecord',
           'ResultRow', 'RESULT_COLUMNS', 'RESULT_SCHEMA_VERSION']
