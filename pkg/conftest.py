"""
Shared fixtures: the running example formula and seeded random instances
"""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from generators.random_ksat import generate_random_ksat  # noqa: E402
from models.formula import CnfFormula  # noqa: E402

# (x1 ∨ ¬x2) ∧ (x2 ∨ x3) ∧ (¬x1 ∨ ¬x3)
F0_CLAUSES = [[1, -2], [2, 3], [-1, -3]]

# Every sign pattern over two variables: no model exists
UNSAT_CLAUSES = [[1, 2], [1, -2], [-1, 2], [-1, -2]]


def planted_formula(num_vars: int, num_clauses: int, k: int, seed: int, name: str = '') -> CnfFormula:
    """Random k-SAT formula keeping only clauses satisfied by a hidden assignment"""
    generator = np.random.default_rng(seed)
    hidden = generator.integers(0, 2, size=num_vars).astype(bool)
    clauses = []
    while len(clauses) < num_clauses:
        variables = generator.choice(num_vars, size=k, replace=False)
        negated = generator.integers(0, 2, size=k).astype(bool)
        if any(hidden[v] != n for v, n in zip(variables, negated)):
            clauses.append([-(v + 1) if n else v + 1 for v, n in zip(variables, negated)])
    return CnfFormula.from_dimacs(num_vars, clauses, name=name or f"planted-{seed}")


def is_satisfiable(formula: CnfFormula) -> bool:
    """Exhaustive check over all 2^V assignments (V <= 24)"""
    if formula.num_vars > 24:
        raise ValueError(f"Exhaustive check needs V <= 24, got {formula.num_vars}")
    candidates = np.arange(1 << formula.num_vars, dtype=np.uint32)
    for clause in formula.clauses:
        satisfied = np.zeros(candidates.size, dtype=bool)
        for literal in clause.literals:
            bit = (candidates >> np.uint32(literal.index)) & np.uint32(1)
            satisfied |= bit == (0 if literal.negated else 1)
        candidates = candidates[satisfied]
        if candidates.size == 0:
            return False
    return True


def satisfiable_random_ksat(num_vars: int, k: int, alpha: float, count: int, seed: int) -> list:
    """Satisfiable random k-SAT instances, filtered the way the uf suites are"""
    formulas = []
    index = 0
    while len(formulas) < count:
        formula = generate_random_ksat(num_vars, k, alpha, seed=seed * 100003 + index,
                                       name=f"uf{num_vars}-{index:03d}")
        if is_satisfiable(formula):
            formulas.append(formula)
        index += 1
    return formulas


@pytest.fixture
def f0() -> CnfFormula:
    return CnfFormula.from_dimacs(3, F0_CLAUSES, name='f0')


@pytest.fixture
def unsat_formula() -> CnfFormula:
    return CnfFormula.from_dimacs(2, UNSAT_CLAUSES, name='unsat')


@pytest.fixture
def easy_formulas():
    """Satisfiable 3-SAT instances, V=20, C=60"""
    return [planted_formula(20, 60, 3, seed) for seed in range(5)]
