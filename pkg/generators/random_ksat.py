"""
Uniform random k-SAT instance generator
"""

import math

from models.formula import CnfFormula, Clause, Literal, FormulaError
from rng.xorshift import XorShiftRng

# Literature clause ratios at the satisfiability threshold: most instances
# below are satisfiable, most above are not.
PHASE_TRANSITION_ALPHA = {
    2: 1.0,
    3: 4.267,
    4: 9.93,
    5: 21.117,
    6: 43.37,
    7: 87.79,
}


def round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


def phase_transition_alpha(k: int) -> float:
    try:
        return PHASE_TRANSITION_ALPHA[k]
    except KeyError:
        raise ValueError(f"No phase-transition ratio tabulated for k={k}; pass alpha explicitly") from None


def generate_random_ksat(num_vars: int, k: int, alpha: float, seed: int, name: str = '') -> CnfFormula:
    """
    Sample a formula from the uniform random k-SAT model

    Each of round(alpha * V) clauses picks k distinct variables uniformly
    without replacement and negates each with probability 1/2. Duplicate
    clauses are kept.

    Args:
        num_vars: V
        k: Literals per clause
        alpha: Clause-to-variable ratio
        seed: Generator seed

    Returns:
        CnfFormula, identical for identical arguments
    """
    if k < 1:
        raise FormulaError(f"k must be >= 1, got {k}")
    if num_vars < k:
        raise FormulaError(f"Need V >= k, got V={num_vars}, k={k}")
    if alpha <= 0:
        raise FormulaError(f"alpha must be > 0, got {alpha}")
    num_clauses = round_half_up(alpha * num_vars)
    if num_clauses < 1:
        raise FormulaError(f"alpha={alpha} gives no clauses for V={num_vars}")

    rng = XorShiftRng(seed=seed)
    pool = list(range(1, num_vars + 1))
    clauses = []
    for _ in range(num_clauses):
        # Partial Fisher-Yates: the first k slots become the sample
        for i in range(k):
            j = i + rng.randbelow(num_vars - i)
            pool[i], pool[j] = pool[j], pool[i]
        signs = rng.next_u64()
        clauses.append(Clause(tuple(
            Literal(variable=pool[i], negated=bool((signs >> i) & 1)) for i in range(k))))

    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses), name=name)
