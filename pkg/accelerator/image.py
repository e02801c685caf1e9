"""
Accelerator image - a formula compiled into TCAM rows and DPE membership matrices
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import List, Tuple

import numpy as np

from models.formula import CnfFormula


class TernaryCell(IntEnum):
    """State of one 2T2R TCAM cell"""
    ZERO = 0   # stores 0: positive literal
    ONE = 1    # stores 1: negative literal
    WILD = 2   # wildcard X: variable absent from the clause

    @property
    def symbol(self) -> str:
        return 'X' if self is TernaryCell.WILD else str(int(self))


@dataclass(frozen=True, eq=False)
class AcceleratorImage:
    """
    Immutable array contents for one formula

    Row i of every matrix is clause i, column j is variable j (0-based).
    The arrays are set read-only so one image can be shared by concurrent
    tries.
    """
    num_vars: int
    num_clauses: int
    order: int
    tcam: np.ndarray               # C x V, TernaryCell codes (int8)
    membership: np.ndarray         # C x V, bool (Q)
    signed_membership: np.ndarray  # C x V, int8 in {+1, -1, 0}
    name: str = ''

    @property
    def dims(self) -> Tuple[int, int, int]:
        """(C, V, k)"""
        return self.num_clauses, self.num_vars, self.order

    @property
    def positive(self) -> np.ndarray:
        """C x V bool: variable j appears as a positive literal in clause i"""
        return self.signed_membership > 0

    @property
    def negative(self) -> np.ndarray:
        return self.signed_membership < 0

    @property
    def clause_lengths(self) -> np.ndarray:
        return self.membership.sum(axis=1)

    @property
    def negative_counts(self) -> np.ndarray:
        """Per clause: number of negative literals (their cells match x_j = 0)"""
        return self.negative.sum(axis=1)

    @property
    def fan_in(self) -> np.ndarray:
        """Per variable: number of clauses it appears in"""
        return self.membership.sum(axis=0)

    @property
    def max_fan_in(self) -> int:
        """d_max, the full-scale make/gain current in cell units"""
        return int(self.fan_in.max())

    def cell(self, clause: int, variable: int) -> TernaryCell:
        return TernaryCell(int(self.tcam[clause, variable]))

    def tcam_row(self, clause: int) -> List[TernaryCell]:
        return [TernaryCell(int(c)) for c in self.tcam[clause]]

    def members(self, clause: int) -> np.ndarray:
        """0-based indices of the variables of a clause, in column order"""
        return np.flatnonzero(self.membership[clause])

    def literal_columns(self) -> np.ndarray:
        """
        Physical DPE layout: C x 2V bool matrix

        Columns [0, V) hold positive literals, [V, 2V) negative literals.
        """
        return np.hstack([self.positive, self.negative])

    def __repr__(self):
        return f"AcceleratorImage(name='{self.name}', C={self.num_clauses}, V={self.num_vars}, k={self.order})"


def compile_formula(formula: CnfFormula) -> AcceleratorImage:
    """
    Map each clause to a TCAM row and a membership row

    Args:
        formula: Validated formula (no tautologies, no repeated variables)

    Returns:
        AcceleratorImage with read-only arrays
    """
    shape = (formula.num_clauses, formula.num_vars)
    signed = np.zeros(shape, dtype=np.int8)
    for i, clause in enumerate(formula.clauses):
        for literal in clause.literals:
            signed[i, literal.index] = -1 if literal.negated else 1

    tcam = np.full(shape, TernaryCell.WILD, dtype=np.int8)
    tcam[signed > 0] = TernaryCell.ZERO
    tcam[signed < 0] = TernaryCell.ONE
    membership = signed != 0

    for array in (tcam, membership, signed):
        array.setflags(write=False)

    return AcceleratorImage(
        num_vars=formula.num_vars,
        num_clauses=formula.num_clauses,
        order=formula.order,
        tcam=tcam,
        membership=membership,
        signed_membership=signed,
        name=formula.name,
    )
