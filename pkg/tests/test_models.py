import pytest

from models.activity import ActivityStats
from models.experiment import RESULT_COLUMNS, ResultRow
from models.formula import Assignment, Clause, CnfFormula, FormulaError, Literal, evaluate
from models.run_record import RunRecord, TryResult
from models.solver_config import (MAX_DAC_BITS, MAX_GAUSSIAN_LEVELS, Heuristic, NoiseConfig, NoiseDistribution,
                                  SolverConfig, TieBreak)
from rng.xorshift import MAX_VECTOR_BOUND


class TestFormula:

    @staticmethod
    def test_literal_from_dimacs():
        assert Literal.from_dimacs(-4) == Literal(variable=4, negated=True)
        assert Literal.from_dimacs(2).index == 1
        with pytest.raises(FormulaError):
            Literal.from_dimacs(0)

    @staticmethod
    def test_clause_rejects_tautology_and_repeats():
        with pytest.raises(FormulaError, match='Tautological'):
            Clause.from_dimacs([1, -1])
        with pytest.raises(FormulaError, match='Repeated'):
            Clause.from_dimacs([2, 2])
        with pytest.raises(FormulaError):
            Clause.from_dimacs([])

    @staticmethod
    def test_formula_properties(f0):
        assert f0.num_clauses == 3
        assert f0.order == 2
        assert f0.ratio == pytest.approx(1.0)
        assert [c.to_dimacs() for c in f0.clauses] == [[1, -2], [2, 3], [-1, -3]]

    @staticmethod
    def test_formula_rejects_out_of_range_variable():
        with pytest.raises(FormulaError, match='variable 4'):
            CnfFormula.from_dimacs(3, [[1, 4]])

    @staticmethod
    def test_name_does_not_affect_equality():
        assert CnfFormula.from_dimacs(2, [[1, 2]], name='a') == CnfFormula.from_dimacs(2, [[1, 2]], name='b')

    @staticmethod
    def test_evaluate_running_example(f0):
        result = evaluate(f0, Assignment.from_values([0, 1, 0]))
        assert result.unsat_mask == (True, False, False)
        assert result.unsat_count == 1
        assert not result.satisfied

    @staticmethod
    def test_evaluate_satisfying_and_unit():
        assert evaluate(CnfFormula.from_dimacs(1, [[1]]), Assignment.from_values([0])).unsat_count == 1
        assert evaluate(CnfFormula.from_dimacs(1, [[1]]), Assignment.from_values([1])).satisfied

    @staticmethod
    def test_evaluate_length_mismatch(f0):
        with pytest.raises(FormulaError):
            evaluate(f0, Assignment.from_values([0, 1]))

    @staticmethod
    def test_assignment_helpers():
        x = Assignment.from_values([1, 0, 1])
        assert x.flipped(1).bits == (True, True, True)
        assert x.bits == (True, False, True)
        assert x.to_dimacs() == [1, -2, 3]


class TestSolverConfig:

    @staticmethod
    def test_label_variants():
        assert SolverConfig.from_label('GNSAT-N').noise.distribution is NoiseDistribution.NORMAL
        assert SolverConfig.from_label('gnsat-u').label == 'GNSAT-U'
        assert SolverConfig.from_label('walksat_skc').label == 'WALKSAT-SKC'
        assert SolverConfig.from_label('MNSAT').label == 'MNSAT'

    @staticmethod
    def test_mnsat_uses_uniform_dac_noise():
        assert SolverConfig.from_label('MNSAT').noise.distribution is NoiseDistribution.UNIFORM
        config = SolverConfig.from_dict({'heuristic': 'MNSAT', 'noise': {'relative_sigma': 0.3}})
        assert config.noise.distribution is NoiseDistribution.UNIFORM
        assert config.noise.relative_sigma == 0.3
        silent = SolverConfig.from_label('MNSAT', noise=NoiseConfig(distribution=NoiseDistribution.NONE))
        assert silent.noise.distribution is NoiseDistribution.NONE
        with pytest.raises(ValueError, match='uniform'):
            SolverConfig(heuristic=Heuristic.MNSAT, noise=NoiseConfig(distribution=NoiseDistribution.NORMAL))

    @staticmethod
    def test_unknown_heuristic_lists_valid_names():
        with pytest.raises(ValueError, match='GNSAT-N'):
            SolverConfig.from_label('HNN')

    @staticmethod
    def test_from_label_keeps_noise_sigma():
        config = SolverConfig.from_label('GNSAT-U', noise=NoiseConfig(relative_sigma=0.7), max_flips=10)
        assert config.noise.relative_sigma == 0.7
        assert config.noise.distribution is NoiseDistribution.UNIFORM
        assert config.max_flips == 10

    @staticmethod
    def test_from_dict_merges_defaults():
        config = SolverConfig.from_dict({'heuristic': 'GWSAT', 'walk_p': 0.2, 'tie_break': 'lowest_index'})
        assert config.heuristic is Heuristic.GWSAT
        assert config.walk_p == 0.2
        assert config.tie_break is TieBreak.LOWEST_INDEX
        assert config.max_tries == SolverConfig().max_tries
        assert SolverConfig.from_dict(config.to_dict()) == config

    @staticmethod
    def test_validation():
        with pytest.raises(ValueError):
            SolverConfig(max_tries=0)
        with pytest.raises(ValueError):
            SolverConfig(walk_p=1.5)
        with pytest.raises(ValueError):
            NoiseConfig(relative_sigma=-0.1)
        assert NoiseConfig(relative_sigma=0.0).is_silent

    @staticmethod
    @pytest.mark.parametrize('options', [
        {'gaussian_levels': 1},
        {'gaussian_levels': MAX_GAUSSIAN_LEVELS + 1},
        {'dac_bits': 0},
        {'dac_bits': MAX_DAC_BITS + 1},
        {'dac_bits': 64},
    ])
    def test_noise_resolution_bounds(options):
        with pytest.raises(ValueError):
            NoiseConfig(**options)

    @staticmethod
    def test_noise_resolution_limits_are_usable():
        assert MAX_GAUSSIAN_LEVELS == MAX_VECTOR_BOUND
        NoiseConfig(gaussian_levels=MAX_GAUSSIAN_LEVELS, dac_bits=MAX_DAC_BITS)


class TestActivity:

    @staticmethod
    def test_merge_is_commutative():
        a = ActivityStats(num_vars=3, num_clauses=2, cycles=4, ml_cells=10, make_cells=3)
        b = ActivityStats(num_vars=3, num_clauses=2, cycles=1, ml_cells=2, noise_samples=6)
        assert a.merge(b) == b.merge(a)
        assert a.merge(b).cycles == 5
        assert ActivityStats().merge(a) == a

    @staticmethod
    def test_merge_rejects_other_dims():
        with pytest.raises(ValueError):
            ActivityStats(num_vars=3, num_clauses=2).merge(ActivityStats(num_vars=4, num_clauses=2))

    @staticmethod
    def test_normalized_activity():
        stats = ActivityStats(num_vars=2, num_clauses=3, cycles=2, ml_cells=6)
        assert stats.line_cells == 12
        assert stats.alpha_ml == pytest.approx(0.25)
        assert ActivityStats().alpha_bl == 0.0
        assert ActivityStats.from_dict(stats.to_dict()) == stats


class TestRunRecord:

    @staticmethod
    def test_record_counts():
        tries = (TryResult(True, 3, 0), TryResult(False, 10, 2), TryResult(True, 7, 0))
        record = RunRecord('inst', 5, 9, SolverConfig(max_tries=3, max_flips=10), tries)
        assert record.num_solved == 2
        assert record.success_fraction == pytest.approx(2 / 3)
        assert record.solved_flips() == [3, 7]
        assert record.first_solution().flips_used == 3

    @staticmethod
    def test_record_checks_try_count():
        with pytest.raises(ValueError):
            RunRecord('inst', 5, 9, SolverConfig(max_tries=2), (TryResult(True, 1, 0),))

    @staticmethod
    def test_solved_try_has_no_violations():
        with pytest.raises(ValueError):
            TryResult(solved=True, flips_used=2, final_unsat=1)


class TestResultRow:

    @staticmethod
    def test_row_uses_csv_columns():
        row = ResultRow('inst', 'GNSAT-N', 20, 91, 3, 7, 500, 0.3, 120.0, 7.2e-7, 1e-9, 1e-12, 0.9)
        data = row.to_dict()
        assert list(data) == RESULT_COLUMNS
        assert data['V'] == 20 and data['C'] == 91
