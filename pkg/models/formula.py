"""
Formula data model - CNF problems, assignments and ground-truth evaluation
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple


class FormulaError(ValueError):
    """Raised when a literal, clause, formula or assignment breaks its invariants"""


@dataclass(frozen=True)
class Literal:
    """Signed occurrence of a variable (1-indexed, as in DIMACS)"""
    variable: int
    negated: bool = False

    def __post_init__(self):
        if self.variable < 1:
            raise FormulaError(f"Literal variable must be >= 1, got {self.variable}")

    @classmethod
    def from_dimacs(cls, value: int) -> 'Literal':
        """Build from a signed DIMACS integer (nonzero)"""
        if value == 0:
            raise FormulaError("0 is a clause terminator, not a literal")
        return cls(variable=abs(value), negated=value < 0)

    @property
    def index(self) -> int:
        """0-based variable index used by the accelerator model"""
        return self.variable - 1

    def to_dimacs(self) -> int:
        return -self.variable if self.negated else self.variable

    def is_true(self, value: bool) -> bool:
        """Truth value of the literal when its variable takes `value`"""
        return value != self.negated

    def __str__(self):
        return f"{'¬' if self.negated else ''}x{self.variable}"


@dataclass(frozen=True)
class Clause:
    """Disjunction of literals over distinct variables"""
    literals: Tuple[Literal, ...]

    def __post_init__(self):
        literals = tuple(self.literals)
        object.__setattr__(self, 'literals', literals)
        if not literals:
            raise FormulaError("Empty clause")

        seen = {}
        for literal in literals:
            previous = seen.get(literal.variable)
            if previous is not None:
                if previous.negated != literal.negated:
                    raise FormulaError(f"Tautological clause: contains {previous} and {literal}")
                raise FormulaError(f"Repeated literal {literal} in clause")
            seen[literal.variable] = literal

    @classmethod
    def from_dimacs(cls, values: Iterable[int]) -> 'Clause':
        return cls(tuple(Literal.from_dimacs(v) for v in values))

    @property
    def variables(self) -> Tuple[int, ...]:
        return tuple(l.variable for l in self.literals)

    def to_dimacs(self) -> List[int]:
        return [l.to_dimacs() for l in self.literals]

    def satisfied_count(self, bits: Sequence[bool]) -> int:
        """Number of literals made true by the assignment bits (0-indexed)"""
        return sum(1 for l in self.literals if l.is_true(bool(bits[l.index])))

    def __len__(self):
        return len(self.literals)

    def __str__(self):
        return '(' + ' ∨ '.join(str(l) for l in self.literals) + ')'


@dataclass(frozen=True)
class CnfFormula:
    """
    Conjunction of clauses over `num_vars` variables

    Immutable after construction, so instances can be shared read-only
    across concurrent workers.
    """
    num_vars: int
    clauses: Tuple[Clause, ...]
    name: str = field(default='', compare=False)

    def __post_init__(self):
        clauses = tuple(self.clauses)
        object.__setattr__(self, 'clauses', clauses)
        if self.num_vars < 1:
            raise FormulaError(f"Formula needs at least one variable, got {self.num_vars}")
        if not clauses:
            raise FormulaError("Formula needs at least one clause")
        for i, clause in enumerate(clauses):
            for literal in clause.literals:
                if literal.variable > self.num_vars:
                    raise FormulaError(
                        f"Clause {i + 1} uses variable {literal.variable} "
                        f"but the formula has only {self.num_vars}")

    @classmethod
    def from_dimacs(cls, num_vars: int, clauses: Iterable[Iterable[int]], name: str = '') -> 'CnfFormula':
        """Build from lists of signed DIMACS integers"""
        return cls(num_vars=num_vars, clauses=tuple(Clause.from_dimacs(c) for c in clauses), name=name)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    @property
    def order(self) -> int:
        """k: the maximum clause length"""
        return max(len(c) for c in self.clauses)

    @property
    def ratio(self) -> float:
        """Clause-to-variable ratio alpha = C/V"""
        return self.num_clauses / self.num_vars

    def __repr__(self):
        return f"CnfFormula(name='{self.name}', V={self.num_vars}, C={self.num_clauses}, k={self.order})"


@dataclass(frozen=True)
class Assignment:
    """Truth values of all variables; bit i is the value of variable i+1"""
    bits: Tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, 'bits', tuple(bool(b) for b in self.bits))

    @classmethod
    def from_values(cls, values: Iterable) -> 'Assignment':
        return cls(tuple(bool(v) for v in values))

    def for_formula(self, formula: CnfFormula) -> 'Assignment':
        """Return self after checking the length against the formula"""
        if len(self.bits) != formula.num_vars:
            raise FormulaError(
                f"Assignment has {len(self.bits)} values, formula has {formula.num_vars} variables")
        return self

    def flipped(self, index: int) -> 'Assignment':
        """Copy with the 0-based variable `index` inverted"""
        bits = list(self.bits)
        bits[index] = not bits[index]
        return Assignment(tuple(bits))

    def to_dimacs(self) -> List[int]:
        """Signed DIMACS model line values (v1 ... vV)"""
        return [i + 1 if b else -(i + 1) for i, b in enumerate(self.bits)]

    def __len__(self):
        return len(self.bits)


@dataclass(frozen=True)
class EvalResult:
    """Violated-clause count w and the per-clause violation mask"""
    unsat_count: int
    unsat_mask: Tuple[bool, ...]

    @property
    def satisfied(self) -> bool:
        return self.unsat_count == 0


def evaluate(formula: CnfFormula, x: Assignment) -> EvalResult:
    """
    Ground-truth clause evaluation

    A clause is violated iff every one of its literals is false under x.

    Args:
        formula: CNF formula
        x: Assignment with exactly formula.num_vars values

    Returns:
        EvalResult with the violated count and mask
    """
    x.for_formula(formula)
    mask = tuple(clause.satisfied_count(x.bits) == 0 for clause in formula.clauses)
    return EvalResult(unsat_count=sum(mask), unsat_mask=mask)
