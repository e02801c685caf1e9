"""
DIMACS CNF parser and writer
"""

import io
import os
from typing import Iterable, List, Optional, TextIO, Union

from models.formula import CnfFormula, Clause, FormulaError


class DimacsParseError(ValueError):
    """Malformed DIMACS input, located by line number"""

    def __init__(self, message: str, line_number: int, source: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.line_number = line_number
        self.source = source

    def __str__(self):
        where = f"{self.source}:" if self.source else "line "
        return f"{where}{self.line_number}: {self.message}"


class DimacsParser:
    """Parser for DIMACS CNF files (SATLIB style included)"""

    def parse(self, file_path: str) -> CnfFormula:
        """
        Parse a DIMACS file and return a CnfFormula

        Args:
            file_path: Path to the .cnf file

        Returns:
            CnfFormula named after the file
        """
        name = os.path.splitext(os.path.basename(file_path))[0]
        with open(file_path, 'r', encoding='utf-8', errors='replace') as f:
            return self.parse_stream(f, name=name, source=os.path.basename(file_path))

    def parse_text(self, text: str, name: str = '') -> CnfFormula:
        return self.parse_stream(io.StringIO(text), name=name)

    def parse_stream(self, stream: TextIO, name: str = '', source: Optional[str] = None) -> CnfFormula:
        num_vars = None
        num_clauses = None
        clauses: List[Clause] = []
        pending: List[int] = []
        pending_line = 0
        line_number = 0

        for line_number, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line or line.startswith('c'):
                continue

            # SATLIB files end with a '%' line followed by a stray 0
            if line.startswith('%'):
                break

            if line.startswith('p'):
                if num_vars is not None:
                    raise DimacsParseError("Duplicate header line", line_number, source)
                num_vars, num_clauses = self._parse_header(line, line_number, source)
                continue

            if num_vars is None:
                raise DimacsParseError("Clause data before 'p cnf' header", line_number, source)

            for token in line.split():
                try:
                    value = int(token)
                except ValueError:
                    raise DimacsParseError(f"Non-integer token '{token}'", line_number, source) from None

                if value == 0:
                    clauses.append(self._make_clause(pending, num_vars, line_number, source))
                    pending = []
                    continue

                if abs(value) > num_vars:
                    raise DimacsParseError(
                        f"Literal {value} out of range for {num_vars} variables", line_number, source)
                if not pending:
                    pending_line = line_number
                pending.append(value)

        if pending:
            raise DimacsParseError("Last clause is not terminated by 0", pending_line, source)
        if num_vars is None:
            raise DimacsParseError("Missing 'p cnf' header", line_number, source)
        if len(clauses) != num_clauses:
            raise DimacsParseError(
                f"Header declares {num_clauses} clauses, found {len(clauses)}", line_number, source)

        try:
            return CnfFormula(num_vars=num_vars, clauses=tuple(clauses), name=name)
        except FormulaError as e:
            raise DimacsParseError(str(e), line_number, source) from e

    def _parse_header(self, line: str, line_number: int, source: Optional[str]):
        """Parse 'p cnf V C'"""
        fields = line.split()
        if len(fields) != 4 or fields[0] != 'p' or fields[1] != 'cnf':
            raise DimacsParseError(f"Bad header line '{line}'", line_number, source)
        try:
            num_vars = int(fields[2])
            num_clauses = int(fields[3])
        except ValueError:
            raise DimacsParseError(f"Bad header counts in '{line}'", line_number, source) from None
        if num_vars < 1 or num_clauses < 1:
            raise DimacsParseError(f"Header counts must be positive in '{line}'", line_number, source)
        return num_vars, num_clauses

    def _make_clause(self, values: List[int], num_vars: int, line_number: int,
                     source: Optional[str]) -> Clause:
        try:
            return Clause.from_dimacs(values)
        except FormulaError as e:
            raise DimacsParseError(str(e), line_number, source) from e


def parse_dimacs(text: Union[str, TextIO], name: str = '') -> CnfFormula:
    """Parse DIMACS CNF from a string or an open text stream"""
    parser = DimacsParser()
    if isinstance(text, str):
        return parser.parse_text(text, name=name)
    return parser.parse_stream(text, name=name)


def write_dimacs(formula: CnfFormula, comments: Iterable[str] = ()) -> str:
    """
    Serialize a formula as DIMACS CNF text

    parse_dimacs(write_dimacs(f)) == f for every valid formula.
    """
    lines = [f"c {comment}" for comment in comments]
    lines.append(f"p cnf {formula.num_vars} {formula.num_clauses}")
    for clause in formula.clauses:
        lines.append(' '.join(str(v) for v in clause.to_dimacs()) + ' 0')
    return '\n'.join(lines) + '\n'
