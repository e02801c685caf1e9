import pytest

from generators.random_ksat import generate_random_ksat
from models.formula import CnfFormula
from parsers.dimacs_parser import DimacsParseError, DimacsParser, parse_dimacs, write_dimacs

SATLIB_STYLE = """c This Formular is generated by mcnf
c
c    horn? no
p cnf 4 3
 1 -2 3 0
-1 2
 4 0
2 3 -4 0
%
0

"""


class TestDimacsParser:

    @staticmethod
    def test_parse_basic():
        formula = parse_dimacs("p cnf 3 2\n1 -2 0\n2 3 0\n")
        assert formula == CnfFormula.from_dimacs(3, [[1, -2], [2, 3]])

    @staticmethod
    def test_parse_comment_and_unit_clause():
        formula = parse_dimacs("c comment\np cnf 1 1\n1 0")
        assert formula.num_vars == 1
        assert [c.to_dimacs() for c in formula.clauses] == [[1]]

    @staticmethod
    def test_parse_satlib_trailer_and_split_clause():
        formula = parse_dimacs(SATLIB_STYLE)
        assert formula.num_clauses == 3
        assert formula.clauses[1].to_dimacs() == [-1, 2, 4]

    @staticmethod
    def test_parse_file_names_formula(tmp_path):
        path = tmp_path / 'uf4-01.cnf'
        path.write_text(SATLIB_STYLE)
        formula = DimacsParser().parse(str(path))
        assert formula.name == 'uf4-01'
        assert formula.order == 3

    @staticmethod
    @pytest.mark.parametrize('text, line, message', [
        ("p cnf 3 2\n1 -2 0\n2 4 0\n", 3, 'out of range'),
        ("p cnf 3 3\n1 -2 0\n2 3 0\n", 3, 'declares 3 clauses'),
        ("1 -2 0\n", 1, "before 'p cnf'"),
        ("p cnf 3 1\n1 x 0\n", 2, 'Non-integer'),
        ("p cnf 3 1\n1 -2\n", 2, 'not terminated'),
        ("p cnf 3 1\np cnf 3 1\n1 0\n", 2, 'Duplicate header'),
        ("p dnf 3 1\n1 0\n", 1, 'Bad header'),
        ("p cnf 3 1\n1 -1 0\n", 2, 'Tautological'),
    ])
    def test_errors_carry_line_numbers(text, line, message):
        with pytest.raises(DimacsParseError, match=message) as info:
            parse_dimacs(text)
        assert info.value.line_number == line

    @staticmethod
    def test_missing_header():
        with pytest.raises(DimacsParseError, match='Missing'):
            parse_dimacs("c only a comment\n")

    @staticmethod
    def test_error_names_source_file(tmp_path):
        path = tmp_path / 'broken.cnf'
        path.write_text("p cnf 2 1\n1 3 0\n")
        with pytest.raises(DimacsParseError) as info:
            DimacsParser().parse(str(path))
        assert str(info.value).startswith('broken.cnf:2:')


class TestDimacsWriter:

    @staticmethod
    def test_write_contains_header_and_clause():
        text = write_dimacs(CnfFormula.from_dimacs(2, [[1, -2]]), comments=['tiny'])
        assert text.splitlines() == ['c tiny', 'p cnf 2 1', '1 -2 0']

    @staticmethod
    def test_round_trip_random_formulas():
        for seed in range(100):
            k = 2 + seed % 4
            formula = generate_random_ksat(8 + seed % 13, k, 2.5 + (seed % 5), seed)
            assert parse_dimacs(write_dimacs(formula)) == formula
