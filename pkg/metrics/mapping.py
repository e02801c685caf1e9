"""
Mapping cost of KLIMA against a quadratic Hopfield network

KLIMA stores a k-SAT formula in 4CV cells for any k. A quadratic HNN needs
one auxiliary spin per clause and order beyond 2, and all-to-all couplings.
"""

from typing import Dict, Iterable, List, Tuple


def mapping_advantage(k: int, alpha: float) -> float:
    """Sigma = (2/4) [1 + (k - 2) alpha]^2 / alpha, the HNN/KLIMA coupling ratio"""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if alpha <= 0:
        raise ValueError(f"alpha must be > 0, got {alpha}")
    return 0.5 * (1 + (k - 2) * alpha) ** 2 / alpha


def coupling_counts(num_vars: int, num_clauses: int, k: int) -> Tuple[int, int]:
    """
    Returns:
        (M_KLIMA, M_HNN) = (4CV, 2 [V + (k - 2) C]^2)
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if num_vars < 1 or num_clauses < 1:
        raise ValueError(f"V and C must be >= 1, got V={num_vars}, C={num_clauses}")
    return 4 * num_clauses * num_vars, 2 * (num_vars + (k - 2) * num_clauses) ** 2


def advantage_grid(ks: Iterable[int], alphas: Dict[int, float],
                   num_vars: int = 100) -> List[Dict[str, float]]:
    """
    Sigma and coupling counts for each k at its clause ratio

    Args:
        ks: Clause orders (>= 2)
        alphas: Clause ratio per k
        num_vars: V used for the absolute coupling counts

    Returns:
        One row per k, in the order given
    """
    rows = []
    for k in ks:
        if k not in alphas:
            raise ValueError(f"No clause ratio given for k={k}")
        alpha = alphas[k]
        num_clauses = max(1, int(alpha * num_vars + 0.5))
        m_klima, m_hnn = coupling_counts(num_vars, num_clauses, k)
        rows.append({
            'k': k,
            'alpha': alpha,
            'sigma': mapping_advantage(k, alpha),
            'num_vars': num_vars,
            'num_clauses': num_clauses,
            'm_klima': m_klima,
            'm_hnn': m_hnn,
        })
    return rows
