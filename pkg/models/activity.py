"""
Activity statistics collected by the behavioral simulator for the energy model
"""

from dataclasses import dataclass, asdict, fields
from typing import Any, Dict, Iterable


@dataclass
class ActivityStats:
    """
    Event counts accumulated over datapath cycles

    A cycle is one full datapath evaluation (ML, thresholds, make/break,
    WTA). Cell counts are LRS cells conducting in that evaluation.
    """
    num_vars: int = 0
    num_clauses: int = 0
    cycles: int = 0
    ml_cells: int = 0            # sum of match-line distances
    make_cells: int = 0          # conducting DPE cells, make pass
    break_cells: int = 0         # conducting DPE cells, break pass
    comparator_fires: int = 0
    wta_selections: int = 0
    noise_samples: int = 0
    register_writes: int = 0

    @property
    def line_cells(self) -> int:
        """Cells per array: C rows of 2V literal columns"""
        return self.num_clauses * 2 * self.num_vars

    def _normalized(self, count: int) -> float:
        if self.cycles == 0 or self.line_cells == 0:
            return 0.0
        return count / (self.cycles * self.line_cells)

    @property
    def alpha_ml(self) -> float:
        """Mean fraction of conducting TCAM cells per cycle"""
        return self._normalized(self.ml_cells)

    @property
    def alpha_bl(self) -> float:
        """Mean fraction of conducting DPE cells per cycle (make pass)"""
        return self._normalized(self.make_cells)

    @property
    def alpha_bl_break(self) -> float:
        return self._normalized(self.break_cells)

    def merge(self, other: 'ActivityStats') -> 'ActivityStats':
        """Sum of two statistics; commutative and associative"""
        mine = (self.num_vars, self.num_clauses)
        theirs = (other.num_vars, other.num_clauses)
        if mine != (0, 0) and theirs != (0, 0) and mine != theirs:
            raise ValueError(
                f"Cannot merge activity of a {self.num_clauses}x{self.num_vars} image "
                f"with a {other.num_clauses}x{other.num_vars} image")
        num_vars, num_clauses = mine if mine != (0, 0) else theirs
        counts = {f.name: getattr(self, f.name) + getattr(other, f.name)
                  for f in fields(self) if f.name not in ('num_vars', 'num_clauses')}
        return ActivityStats(num_vars=num_vars, num_clauses=num_clauses, **counts)

    @classmethod
    def merge_all(cls, stats: Iterable['ActivityStats']) -> 'ActivityStats':
        total = cls()
        for s in stats:
            total = total.merge(s)
        return total

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['alpha_ml'] = self.alpha_ml
        data['alpha_bl'] = self.alpha_bl
        data['alpha_bl_break'] = self.alpha_bl_break
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ActivityStats':
        names = {f.name for f in fields(cls)}
        return cls(**{k: int(v) for k, v in data.items() if k in names})
