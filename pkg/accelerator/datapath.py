"""
Functional model of the KLIMA datapath

One iteration takes three clock cycles: the TCAM computes the match-line
distances ML, the sense amplifiers threshold them into the violated mask
MLm and the single-satisfied mask MLb, and the DPE accumulates the make and
break values over those masks.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

from accelerator.image import AcceleratorImage
from models.formula import Assignment, FormulaError

# ML < 1: clause fully matched, i.e. violated
MAKE_THRESHOLD = 1

# ML value sequence, one integer per clause
MlVector = np.ndarray

AssignmentLike = Union[Assignment, np.ndarray, list, tuple]


@dataclass(frozen=True)
class Thresholds:
    """Sense-amplifier window for MLb = (theta_l < ML < theta_h)"""
    theta_l: int = 0
    theta_h: int = 2

    def __post_init__(self):
        if self.theta_l >= self.theta_h:
            raise ValueError(f"theta_l must be < theta_h, got {self.theta_l} >= {self.theta_h}")


@dataclass(frozen=True, eq=False)
class GradientVectors:
    """make m, break b and gain g = m - b, one entry per variable"""
    make: np.ndarray
    brk: np.ndarray
    gain: np.ndarray

    def __post_init__(self):
        if np.any(self.make < 0) or np.any(self.brk < 0):
            raise ValueError("make and break values must be nonnegative")
        if not np.array_equal(self.gain, self.make - self.brk):
            raise ValueError("gain must equal make - break")


def as_bits(x: AssignmentLike, num_vars: int) -> np.ndarray:
    """Assignment or 0/1 sequence as an int64 vector of length V"""
    bits = np.asarray(x.bits if isinstance(x, Assignment) else x, dtype=np.int64)
    if bits.shape != (num_vars,):
        raise FormulaError(f"Assignment has {bits.size} values, image has {num_vars} variables")
    return bits


def match_distances(image: AcceleratorImage, x: AssignmentLike) -> MlVector:
    """
    Hamming distance of x to every TCAM row, wildcards excluded

    The distance of row i equals the number of literals of clause i that
    x satisfies.
    """
    bits = as_bits(x, image.num_vars)
    return image.signed_membership.astype(np.int64) @ bits + image.negative_counts


def violated_mask(ml: MlVector, theta_h: int = MAKE_THRESHOLD) -> np.ndarray:
    """MLm = (ML < theta_h)"""
    return np.asarray(ml) < theta_h


def single_sat_mask(ml: MlVector, thresholds: Thresholds = Thresholds()) -> np.ndarray:
    """MLb = (theta_l < ML < theta_h)"""
    ml = np.asarray(ml)
    return (ml > thresholds.theta_l) & (ml < thresholds.theta_h)


def make_values(image: AcceleratorImage, mlm: np.ndarray) -> np.ndarray:
    """Per variable: violated clauses it is a member of"""
    mlm = np.asarray(mlm, dtype=np.int64)
    if mlm.shape != (image.num_clauses,):
        raise ValueError(f"MLm has {mlm.size} entries, image has {image.num_clauses} clauses")
    return mlm @ image.membership.astype(np.int64)


def break_values(image: AcceleratorImage, mlb: np.ndarray, x: AssignmentLike) -> np.ndarray:
    """
    Per variable: MLb clauses whose only satisfied literal is on that variable

    The MLb-selected rows are accumulated separately over positive and
    negative literal columns; the state x then keeps the positive column
    where x_j = 1 and the negative one where x_j = 0.
    """
    bits = as_bits(x, image.num_vars)
    mlb = np.asarray(mlb, dtype=np.int64)
    if mlb.shape != (image.num_clauses,):
        raise ValueError(f"MLb has {mlb.size} entries, image has {image.num_clauses} clauses")
    pos = mlb @ image.positive.astype(np.int64)
    neg = mlb @ image.negative.astype(np.int64)
    return pos * bits + neg * (1 - bits)


def gain_values(m: np.ndarray, b: np.ndarray) -> np.ndarray:
    m = np.asarray(m)
    b = np.asarray(b)
    if m.shape != b.shape:
        raise ValueError(f"make and break lengths differ: {m.size} vs {b.size}")
    return m - b


@dataclass(frozen=True, eq=False)
class DatapathOutputs:
    """Everything one datapath iteration produces"""
    ml: MlVector
    mlm: np.ndarray
    mlb: np.ndarray
    make: np.ndarray
    brk: np.ndarray

    @property
    def gain(self) -> np.ndarray:
        return self.make - self.brk

    @property
    def unsat_count(self) -> int:
        """w, the number of violated clauses"""
        return int(self.mlm.sum())

    @property
    def satisfied(self) -> bool:
        return not self.mlm.any()

    def gradients(self) -> GradientVectors:
        return GradientVectors(make=self.make, brk=self.brk, gain=self.gain)


class KlimaDatapath:
    """
    Precomputed integer views of an image for repeated evaluation

    Holds no per-try state; a try keeps its own x and ML vector and
    calls evaluate() or update_distances() on it.
    """

    def __init__(self, image: AcceleratorImage, thresholds: Thresholds = Thresholds()):
        self.image = image
        self.thresholds = thresholds
        self._signed = image.signed_membership.astype(np.int64)
        self._membership = image.membership.astype(np.int64)
        self._positive = image.positive.astype(np.int64)
        self._negative = image.negative.astype(np.int64)
        self._negative_counts = image.negative_counts.astype(np.int64)
        self.clause_lengths = image.clause_lengths.astype(np.int64)
        self.clause_members = tuple(image.members(i) for i in range(image.num_clauses))

    def distances(self, bits: np.ndarray) -> MlVector:
        return self._signed @ bits + self._negative_counts

    def update_distances(self, ml: MlVector, variable: int, old_value: int) -> MlVector:
        """ML after flipping `variable` away from `old_value`, without a full match"""
        return ml + self._signed[:, variable] * (1 - 2 * old_value)

    def evaluate(self, bits: np.ndarray, ml: MlVector = None) -> DatapathOutputs:
        """
        Run the three datapath cycles for state `bits`

        Args:
            bits: int64 0/1 vector of length V
            ml: Match-line distances for `bits` if already known

        Returns:
            DatapathOutputs
        """
        if ml is None:
            ml = self.distances(bits)
        mlm = ml < MAKE_THRESHOLD
        mlb = (ml > self.thresholds.theta_l) & (ml < self.thresholds.theta_h)
        make = mlm.astype(np.int64) @ self._membership
        sel = mlb.astype(np.int64)
        brk = (sel @ self._positive) * bits + (sel @ self._negative) * (1 - bits)
        return DatapathOutputs(ml=ml, mlm=mlm, mlb=mlb, make=make, brk=brk)

    def evaluate_all(self, x: AssignmentLike) -> DatapathOutputs:
        """ML, MLm, MLb, m, b (and g, w) for an assignment"""
        return self.evaluate(as_bits(x, self.image.num_vars))
