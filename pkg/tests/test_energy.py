import math

import pytest

from energy.energy_model import (ActivityLevels, ArrayGeometry, CrossbarShape, EnergyBreakdown, HardwareVariant,
                                 crossbar_energy, dac_energy, energy_sweep, gaussian_noise_energy, iteration_energy,
                                 latency_per_iteration, row_capacitance, row_power, switching_capacitance,
                                 sweep_to_frame, tia_power, uniform_noise_energy, wta_energy)
from energy.params import EnergyParams, dump_energy_params, load_energy_params, params_from_table, params_to_table
from generators.random_ksat import phase_transition_alpha
from models.activity import ActivityStats
from models.solver_config import NoiseDistribution, SolverConfig

FF = 1e-15
FJ = 1e-15
PARAMS = EnergyParams()
SIZES = (20, 50, 100, 250)


def breakdown(variant, num_vars, k=3):
    geometry = ArrayGeometry(num_vars, int(math.floor(phase_transition_alpha(k) * num_vars + 0.5)))
    return iteration_energy(variant, geometry, ActivityLevels.random_assignment(k, num_vars), PARAMS)


class TestCircuitTerms:

    @staticmethod
    def test_row_capacitance():
        assert row_capacitance(100, PARAMS) == pytest.approx(77.82 * FF, rel=1e-9)
        assert row_capacitance(200, PARAMS) == pytest.approx(2 * row_capacitance(100, PARAMS), rel=1e-12)
        with pytest.raises(ValueError):
            row_capacitance(0, PARAMS)

    @staticmethod
    def test_switching_capacitance_and_row_power():
        c_row = 77.82 * FF
        exact = c_row + 2 * math.sqrt(c_row * 0.35 * FF) + 2 * 0.35 * FF
        assert switching_capacitance(c_row, PARAMS) == pytest.approx(exact, rel=1e-12)
        assert switching_capacitance(c_row, PARAMS) == pytest.approx(88.96 * FF, rel=1e-3)
        assert row_power(c_row, PARAMS) == pytest.approx(29.64e-9, rel=1e-3)

    @staticmethod
    def test_tia_power():
        assert tia_power(PARAMS) == pytest.approx(1.8e-6, rel=1e-9)

    @staticmethod
    def test_wta_energy():
        assert wta_energy(20, PARAMS) == pytest.approx(226 * FJ, rel=1e-9)
        assert wta_energy(1, PARAMS) == pytest.approx(11.3 * FJ, rel=1e-9)
        with pytest.raises(ValueError):
            wta_energy(0, PARAMS)

    @staticmethod
    def test_latency():
        assert latency_per_iteration(PARAMS) == pytest.approx(6e-9, rel=1e-9)
        assert latency_per_iteration(PARAMS.with_options(t_clk=1e-9)) == pytest.approx(3e-9, rel=1e-9)

    @staticmethod
    def test_crossbar_energy_is_monotone():
        shape = CrossbarShape(91, 40)
        energies = [crossbar_energy(shape, a, PARAMS) for a in (0.0, 0.1, 0.5, 1.0)]
        assert energies == sorted(energies)
        assert crossbar_energy(CrossbarShape(92, 40), 0.1, PARAMS) > crossbar_energy(shape, 0.1, PARAMS)
        assert crossbar_energy(CrossbarShape(91, 41), 0.1, PARAMS) > crossbar_energy(shape, 0.1, PARAMS)
        with pytest.raises(ValueError):
            crossbar_energy(shape, 1.5, PARAMS)


class TestNoiseEnergy:

    @staticmethod
    def test_dac_and_uniform_noise():
        assert dac_energy(PARAMS) == pytest.approx(0.50625 * FJ, rel=1e-9)
        assert uniform_noise_energy(64, PARAMS) == pytest.approx(397.4 * FJ, rel=1e-9)
        assert uniform_noise_energy(1, PARAMS) == pytest.approx(dac_energy(PARAMS), rel=1e-12)
        values = [uniform_noise_energy(n, PARAMS) for n in range(1, 300)]
        assert values == sorted(values)

    @staticmethod
    def test_gaussian_noise():
        assert gaussian_noise_energy(64, PARAMS) == pytest.approx(3266.08 * FJ, rel=1e-9)
        for n in range(1, 300):
            assert gaussian_noise_energy(n, PARAMS) > uniform_noise_energy(n, PARAMS)
        with pytest.raises(ValueError):
            gaussian_noise_energy(0, PARAMS)


class TestIterationEnergy:

    @staticmethod
    def test_components_sum_to_total():
        b = breakdown(HardwareVariant.KLIMA_G_N, 50)
        assert b.total == pytest.approx(sum(b.components().values()), rel=1e-12)
        assert b.energy_per_cycle == pytest.approx(b.total / 3)
        assert all(v >= 0 for v in b.components().values())
        assert set(b.to_dict()) >= set(EnergyBreakdown.COMPONENTS) | {'total', 'energy_per_cycle'}

    @staticmethod
    def test_variant_ordering_across_sizes():
        for num_vars in SIZES:
            g_n = breakdown(HardwareVariant.KLIMA_G_N, num_vars)
            g_u = breakdown(HardwareVariant.KLIMA_G_U, num_vars)
            m = breakdown(HardwareVariant.KLIMA_M, num_vars)
            assert g_n.energy_per_cycle > g_u.energy_per_cycle > m.energy_per_cycle

    @staticmethod
    def test_gaussian_noise_dominates_at_fifty_variables():
        assert breakdown(HardwareVariant.KLIMA_G_N, 50).share('noise') >= 0.5

    @staticmethod
    def test_make_only_variant():
        geometry = ArrayGeometry(20, 85)
        levels = ActivityLevels.random_assignment(3, 20)
        m = iteration_energy(SolverConfig.from_label('MNSAT'), geometry, levels, PARAMS)
        g_u = iteration_energy(SolverConfig.from_label('GNSAT-U'), geometry, levels, PARAMS)
        assert m.variant is HardwareVariant.KLIMA_M
        assert m.noise == pytest.approx(uniform_noise_energy(85, PARAMS))
        assert m.comparators == pytest.approx(85 * PARAMS.e_comp)
        assert g_u.comparators == pytest.approx(2 * m.comparators)
        assert g_u.noise == m.noise

    @staticmethod
    def test_variant_mapping():
        assert HardwareVariant.from_config(SolverConfig.from_label('GNSAT-N')) is HardwareVariant.KLIMA_G_N
        assert HardwareVariant.from_config(SolverConfig.from_label('WALKSAT')) is HardwareVariant.KLIMA_WALK
        assert HardwareVariant.from_config(SolverConfig.from_label('GSAT')) is HardwareVariant.KLIMA_G
        assert not HardwareVariant.KLIMA_M.uses_break

    @staticmethod
    @pytest.mark.parametrize('label', ['MNSAT', 'GNSAT-U', 'GNSAT-N'])
    def test_simulated_noise_matches_billed_noise(label):
        config = SolverConfig.from_label(label)
        billed = iteration_energy(config, ArrayGeometry(20, 85), ActivityLevels.random_assignment(3, 20), PARAMS)
        expected = {
            NoiseDistribution.UNIFORM: uniform_noise_energy(85, PARAMS),
            NoiseDistribution.NORMAL: gaussian_noise_energy(85, PARAMS),
        }[config.noise.distribution]
        assert billed.noise == pytest.approx(expected)

    @staticmethod
    def test_deterministic_gsat_has_no_noise_block():
        levels = ActivityLevels.random_assignment(3, 20)
        gsat = iteration_energy(SolverConfig.from_label('GSAT'), ArrayGeometry(20, 85), levels, PARAMS)
        walksat = iteration_energy(SolverConfig.from_label('WALKSAT'), ArrayGeometry(20, 85), levels, PARAMS)
        assert gsat.noise == 0.0
        assert walksat.noise == pytest.approx(PARAMS.e_pnrg)
        assert gsat.total < walksat.total

    @staticmethod
    def test_measured_activity_is_accepted():
        stats = ActivityStats(num_vars=20, num_clauses=85, cycles=10, ml_cells=5000, make_cells=300, break_cells=400)
        from_stats = iteration_energy(HardwareVariant.KLIMA_G_U, ArrayGeometry(20, 85), stats, PARAMS)
        from_levels = iteration_energy(HardwareVariant.KLIMA_G_U, ArrayGeometry(20, 85),
                                       ActivityLevels.from_stats(stats), PARAMS)
        assert from_stats == from_levels

    @staticmethod
    def test_geometry():
        geometry = ArrayGeometry(20, 91)
        assert geometry.tcam == geometry.dpe == CrossbarShape(91, 40)
        assert geometry.cell_count == 4 * 91 * 20

    @staticmethod
    def test_sweep_frame():
        variants = [HardwareVariant.KLIMA_M, HardwareVariant.KLIMA_G_N]
        frame = sweep_to_frame(energy_sweep(variants, SIZES, 3, 4.267, PARAMS))
        assert len(frame) == 8
        assert frame['num_clauses'].tolist()[:2] == [85, 85]


class TestParamsFile:

    @staticmethod
    def test_round_trip(tmp_path):
        path = tmp_path / 'params.json'
        dump_energy_params(PARAMS.with_options(e_pnrg=400e-15), str(path))
        loaded = load_energy_params(str(path))
        table = params_to_table(loaded)
        assert table['E_PNRG'] == pytest.approx(400)
        for key, value in params_to_table(PARAMS).items():
            if key != 'E_PNRG':
                assert table[key] == pytest.approx(value, rel=1e-9)

    @staticmethod
    def test_partial_table_overrides_defaults():
        params = params_from_table({'E_GPRNG_LUT': 20, 'R_DAC': 2})
        assert params.e_gprng_lut == pytest.approx(20e-15)
        assert params.r_dac == pytest.approx(2e6)
        assert params.v_dd == PARAMS.v_dd

    @staticmethod
    def test_rejects_unknown_and_invalid_values():
        with pytest.raises(ValueError, match='Unknown energy parameter'):
            params_from_table({'E_FOO': 1})
        with pytest.raises(ValueError):
            EnergyParams(v_eo=0.3)
        with pytest.raises(ValueError):
            EnergyParams(t_clk=0.0)
