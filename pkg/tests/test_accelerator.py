import itertools

import numpy as np
import pytest

from accelerator.datapath import (KlimaDatapath, Thresholds, break_values, gain_values, make_values,
                                  match_distances, single_sat_mask, violated_mask)
from accelerator.image import TernaryCell, compile_formula
from generators.random_ksat import generate_random_ksat
from models.formula import Assignment, CnfFormula, FormulaError, evaluate


def brute_force_make_break(formula, bits):
    """Per variable: clauses newly satisfied and newly violated by flipping it"""
    x = Assignment.from_values(bits)
    before = evaluate(formula, x).unsat_mask
    make = []
    brk = []
    for j in range(formula.num_vars):
        after = evaluate(formula, x.flipped(j)).unsat_mask
        make.append(sum(b and not a for b, a in zip(before, after)))
        brk.append(sum(a and not b for b, a in zip(before, after)))
    return np.array(make), np.array(brk)


def oracle_cases(count, seed):
    generator = np.random.default_rng(seed)
    for n in range(count):
        k = (2, 3, 4, 5)[n % 4]
        num_vars = int(generator.integers(k, 17))
        alpha = float(generator.uniform(0.5, 4.0))
        formula = generate_random_ksat(num_vars, k, alpha, seed=seed * 100000 + n)
        yield formula, generator.integers(0, 2, size=num_vars)


class TestCompile:

    @staticmethod
    def test_running_example_rows(f0):
        image = compile_formula(f0)
        assert image.tcam_row(0) == [TernaryCell.ZERO, TernaryCell.ONE, TernaryCell.WILD]
        assert image.membership.astype(int).tolist() == [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
        assert image.signed_membership[2].tolist() == [-1, 0, -1]
        assert image.dims == (3, 3, 2)
        assert ''.join(c.symbol for c in image.tcam_row(1)) == 'X00'

    @staticmethod
    def test_fan_in_and_literal_columns(f0):
        image = compile_formula(f0)
        assert image.fan_in.tolist() == [2, 2, 2]
        assert image.max_fan_in == 2
        assert image.literal_columns().shape == (3, 6)
        assert image.literal_columns().sum() == 6

    @staticmethod
    def test_arrays_are_read_only(f0):
        image = compile_formula(f0)
        with pytest.raises(ValueError):
            image.tcam[0, 0] = TernaryCell.WILD


class TestDatapath:

    @staticmethod
    def test_running_example(f0):
        image = compile_formula(f0)
        x = Assignment.from_values([0, 1, 0])
        ml = match_distances(image, x)
        assert ml.tolist() == [0, 1, 2]
        mlm = violated_mask(ml)
        mlb = single_sat_mask(ml)
        assert mlm.tolist() == [True, False, False]
        assert mlb.tolist() == [False, True, False]
        assert list(mlm) == list(evaluate(f0, x).unsat_mask)
        m = make_values(image, mlm)
        b = break_values(image, mlb, x)
        assert m.tolist() == [1, 1, 0]
        assert b.tolist() == [0, 1, 0]
        assert gain_values(m, b).tolist() == [1, 0, 0]

    @staticmethod
    def test_threshold_rules():
        assert violated_mask([1, 2, 3]).tolist() == [False, False, False]
        assert single_sat_mask([1, 1, 1]).tolist() == [True, True, True]
        assert gain_values([2, 1], [2, 1]).tolist() == [0, 0]
        with pytest.raises(ValueError):
            Thresholds(theta_l=2, theta_h=2)

    @staticmethod
    def test_satisfied_unit_clause_is_single_sat():
        image = compile_formula(CnfFormula.from_dimacs(1, [[1]]))
        ml = match_distances(image, [1])
        assert single_sat_mask(ml).tolist() == [True]
        assert break_values(image, single_sat_mask(ml), [1]).tolist() == [1]

    @staticmethod
    def test_length_mismatch(f0):
        with pytest.raises(FormulaError):
            match_distances(compile_formula(f0), [0, 1])

    @staticmethod
    def test_evaluate_all_matches_functions(f0):
        out = KlimaDatapath(compile_formula(f0)).evaluate_all([0, 1, 0])
        assert out.unsat_count == 1
        assert out.gain.tolist() == [1, 0, 0]
        assert out.gradients().brk.tolist() == [0, 1, 0]

    @staticmethod
    def test_incremental_distances():
        formula = generate_random_ksat(12, 3, 4.0, seed=4)
        datapath = KlimaDatapath(compile_formula(formula))
        bits = np.random.default_rng(0).integers(0, 2, size=12)
        ml = datapath.distances(bits)
        for j in range(12):
            flipped = bits.copy()
            flipped[j] ^= 1
            assert np.array_equal(datapath.update_distances(ml, j, int(bits[j])), datapath.distances(flipped))

    @staticmethod
    def test_make_break_match_flip_oracle():
        for formula, bits in oracle_cases(250, seed=1):
            image = compile_formula(formula)
            out = KlimaDatapath(image).evaluate(bits)
            make, brk = brute_force_make_break(formula, bits)
            assert np.array_equal(out.make, make)
            assert np.array_equal(out.brk, brk)
            literal_truth = [[l.is_true(bool(bits[l.index])) for l in c.literals] for c in formula.clauses]
            assert out.ml.tolist() == [sum(t) for t in literal_truth]

    @staticmethod
    @pytest.mark.slow
    def test_make_break_match_flip_oracle_full():
        for formula, bits in oracle_cases(1000, seed=2):
            out = KlimaDatapath(compile_formula(formula)).evaluate(bits)
            make, brk = brute_force_make_break(formula, bits)
            assert np.array_equal(out.make, make)
            assert np.array_equal(out.brk, brk)

    @staticmethod
    def test_flip_identity_exhaustive():
        formula = generate_random_ksat(8, 3, 4.0, seed=12)
        image = compile_formula(formula)
        datapath = KlimaDatapath(image)
        lengths = image.clause_lengths
        for bits in itertools.product((0, 1), repeat=8):
            bits = np.array(bits)
            out = datapath.evaluate(bits)
            assert out.make.sum() == lengths[out.mlm].sum()
            assert out.brk.sum() == out.mlb.sum()
            for j in range(8):
                flipped = bits.copy()
                flipped[j] ^= 1
                after = datapath.evaluate(flipped)
                assert after.unsat_count == out.unsat_count - out.make[j] + out.brk[j]
