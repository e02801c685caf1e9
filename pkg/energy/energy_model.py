"""
Event-based energy and latency model of one solver iteration

Every iteration takes `cycles_per_iteration` clock cycles: the TCAM match,
the sense-amplifier thresholds, then the DPE accumulation with noise
injection and WTA selection. Components are evaluated from the array
geometry, the mean line activity measured by the behavioral simulator and
the circuit parameters.
"""

import math
from dataclasses import dataclass, asdict
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Union

import pandas as pd

from accelerator.image import AcceleratorImage
from energy.params import EnergyParams
from models.activity import ActivityStats
from models.solver_config import Heuristic, NoiseDistribution, SolverConfig


def round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


class HardwareVariant(Enum):
    """
    Datapath configuration an iteration is charged for

    GSAT (and GNSAT with silent noise) is pure gain + WTA: ties are settled by
    the WTA itself, so no random source is charged. The WalkSAT family draws
    one PNRG word per iteration for its walk decisions.
    """
    KLIMA_M = 'KLIMA-M'        # make only, DAC uniform noise
    KLIMA_G_U = 'KLIMA-G-U'    # gain, DAC uniform noise
    KLIMA_G_N = 'KLIMA-G-N'    # gain, alias-method Gaussian noise
    KLIMA_WALK = 'KLIMA-WALK'  # gain, digital walk decisions, no noise block
    KLIMA_G = 'KLIMA-G'        # gain only, no random source

    @classmethod
    def from_config(cls, config: SolverConfig) -> 'HardwareVariant':
        if config.heuristic is Heuristic.MNSAT:
            return cls.KLIMA_M
        if config.heuristic is Heuristic.GNSAT:
            if config.noise.distribution is NoiseDistribution.NORMAL:
                return cls.KLIMA_G_N
            if config.noise.distribution is NoiseDistribution.UNIFORM:
                return cls.KLIMA_G_U
            return cls.KLIMA_G
        if config.heuristic is Heuristic.GSAT:
            return cls.KLIMA_G
        return cls.KLIMA_WALK

    @property
    def uses_break(self) -> bool:
        return self is not HardwareVariant.KLIMA_M

    @property
    def thresholds_per_ml(self) -> int:
        return 2 if self.uses_break else 1


@dataclass(frozen=True)
class CrossbarShape:
    n_rows: int
    n_cols: int

    def __post_init__(self):
        if self.n_rows < 1 or self.n_cols < 1:
            raise ValueError(f"Crossbar needs >= 1 row and column, got {self.n_rows}x{self.n_cols}")

    @property
    def cells(self) -> int:
        return self.n_rows * self.n_cols


@dataclass(frozen=True)
class ArrayGeometry:
    """TCAM and DPE arrays, each C rows by 2V literal columns"""
    num_vars: int
    num_clauses: int

    def __post_init__(self):
        if self.num_vars < 1 or self.num_clauses < 1:
            raise ValueError(f"Geometry needs V >= 1 and C >= 1, got V={self.num_vars}, C={self.num_clauses}")

    @classmethod
    def from_image(cls, image: AcceleratorImage) -> 'ArrayGeometry':
        return cls(num_vars=image.num_vars, num_clauses=image.num_clauses)

    @property
    def tcam(self) -> CrossbarShape:
        return CrossbarShape(self.num_clauses, 2 * self.num_vars)

    @property
    def dpe(self) -> CrossbarShape:
        return CrossbarShape(self.num_clauses, 2 * self.num_vars)

    @property
    def cell_count(self) -> int:
        """Physical 1T1R cells, 4CV"""
        return self.tcam.cells + self.dpe.cells


@dataclass(frozen=True)
class ActivityLevels:
    """Mean conducting-cell fractions per cycle for each array pass"""
    alpha_ml: float
    alpha_bl: float
    alpha_bl_break: float

    def __post_init__(self):
        for name in ('alpha_ml', 'alpha_bl', 'alpha_bl_break'):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")

    @classmethod
    def from_stats(cls, stats: ActivityStats) -> 'ActivityLevels':
        return cls(stats.alpha_ml, stats.alpha_bl, stats.alpha_bl_break)

    @classmethod
    def random_assignment(cls, k: int, num_vars: int) -> 'ActivityLevels':
        """
        Expected activity of k-clauses under a uniformly random assignment

        A clause has k/2 satisfied literals on average, is violated with
        probability 2^-k and has exactly one satisfied literal with
        probability k 2^-k.
        """
        cols = 2 * num_vars
        return cls(alpha_ml=(k / 2) / cols,
                   alpha_bl=k * 2.0 ** -k / cols,
                   alpha_bl_break=k * k * 2.0 ** -k / cols)


@dataclass(frozen=True)
class EnergyBreakdown:
    """Joules per iteration, by component"""
    variant: HardwareVariant
    crossbar_tcam: float
    crossbar_dpe: float
    comparators: float
    noise: float
    wta: float
    xor_reg: float
    clock: float
    leakage: float
    cycles: int = 3

    COMPONENTS = ('crossbar_tcam', 'crossbar_dpe', 'comparators', 'noise',
                  'wta', 'xor_reg', 'clock', 'leakage')

    def __post_init__(self):
        for name in self.COMPONENTS:
            if getattr(self, name) < 0:
                raise ValueError(f"Energy component {name} is negative")

    def components(self) -> Dict[str, float]:
        return {name: getattr(self, name) for name in self.COMPONENTS}

    @property
    def total(self) -> float:
        return math.fsum(self.components().values())

    @property
    def energy_per_cycle(self) -> float:
        return self.total / self.cycles

    def share(self, component: str) -> float:
        return getattr(self, component) / self.total

    def to_dict(self) -> Dict[str, Any]:
        data = {'variant': self.variant.value, 'cycles': self.cycles}
        data.update(self.components())
        data['total'] = self.total
        data['energy_per_cycle'] = self.energy_per_cycle
        return data


def row_capacitance(n_cols: int, params: EnergyParams) -> float:
    """C_row = 2 N_cols (W_cell C_w + C_G)"""
    if n_cols < 1:
        raise ValueError(f"n_cols must be >= 1, got {n_cols}")
    return 2 * n_cols * (params.w_cell * params.c_w + params.c_g)


def switching_capacitance(c_row: float, params: EnergyParams) -> float:
    """Row capacitance seen by the driver chain: C_row + 2 sqrt(C_row C_inv) + 2 C_inv"""
    return c_row + 2 * math.sqrt(c_row * params.c_inv) + 2 * params.c_inv


def row_power(c_row: float, params: EnergyParams) -> float:
    """Driver leakage P_row = V_DD I_leak (1 + sqrt(C_row / C_inv))"""
    return params.v_dd * params.i_leak * (1 + math.sqrt(c_row / params.c_inv))


def tia_power(params: EnergyParams) -> float:
    return params.v_dd * params.i_tia_bias


def crossbar_energy(shape: CrossbarShape, alpha: float, params: EnergyParams) -> float:
    """
    Energy of one crossbar pass

    alpha N_rows C_row^SW V_DD^2 + cycles t_clk (N_cols (P_row + P_TIA) + N_rows P_row)

    The switching term is charged once per driven row.

    Args:
        shape: Array rows and columns
        alpha: Mean fraction of conducting cells per line, in [0, 1]
        params: Circuit parameters

    Returns:
        Joules
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    c_row = row_capacitance(shape.n_cols, params)
    p_row = row_power(c_row, params)
    switching = alpha * shape.n_rows * switching_capacitance(c_row, params) * params.v_dd ** 2
    static = params.cycles_per_iteration * params.t_clk * (
        shape.n_cols * (p_row + tia_power(params)) + shape.n_rows * p_row)
    return switching + static


def dac_current(params: EnergyParams) -> float:
    """I_EO = (V_read - V_EO) / R_DAC (1 - 2^-n_bDAC)"""
    return (params.v_read - params.v_eo) / params.r_dac * (1 - 2.0 ** -params.n_bdac)


def dac_energy(params: EnergyParams) -> float:
    return dac_current(params) * params.v_dd * params.t_clk


def uniform_noise_energy(n_rows: int, params: EnergyParams) -> float:
    """round(N_rows / 64) E_PNRG + N_rows E_DAC"""
    if n_rows < 1:
        raise ValueError(f"n_rows must be >= 1, got {n_rows}")
    return round_half_up(n_rows / params.pnrg_rows) * params.e_pnrg + n_rows * dac_energy(params)


def gaussian_noise_energy(n_rows: int, params: EnergyParams) -> float:
    """
    Alias-method GPRNG: LUT read and comparator per sample, PNRG draws for
    index and threshold, and the DAC driving the sample onto the line
    """
    if n_rows < 1:
        raise ValueError(f"n_rows must be >= 1, got {n_rows}")
    per_sample = params.e_gprng_lut + params.e_gprng_comp + dac_energy(params)
    draws = params.gaussian_pnrg_draws * round_half_up(n_rows / params.pnrg_rows)
    return n_rows * per_sample + draws * params.e_pnrg


def wta_energy(n_bls: int, params: EnergyParams) -> float:
    """N_BLs (E_VCDL + E_WTA_logic)"""
    if n_bls < 1:
        raise ValueError(f"n_bls must be >= 1, got {n_bls}")
    return n_bls * (params.e_vcdl + params.e_wta_logic)


def noise_energy(variant: HardwareVariant, n_rows: int, params: EnergyParams) -> float:
    if variant is HardwareVariant.KLIMA_G_N:
        return gaussian_noise_energy(n_rows, params)
    if variant in (HardwareVariant.KLIMA_G_U, HardwareVariant.KLIMA_M):
        return uniform_noise_energy(n_rows, params)
    if variant is HardwareVariant.KLIMA_G:
        return 0.0
    # walk decisions: one PNRG word per iteration
    return params.e_pnrg


def latency_per_iteration(params: EnergyParams = EnergyParams()) -> float:
    """Seconds per solver iteration (cycles_per_iteration x t_clk)"""
    return params.cycles_per_iteration * params.t_clk


ActivityLike = Union[ActivityStats, ActivityLevels]


def iteration_energy(config: Union[SolverConfig, HardwareVariant], geometry: ArrayGeometry,
                     activity: ActivityLike, params: EnergyParams = EnergyParams()) -> EnergyBreakdown:
    """
    Energy of one iteration of a hardware variant

    Args:
        config: Solver configuration or the variant it maps to
        geometry: Array dimensions of the instance
        activity: Measured ActivityStats or ActivityLevels
        params: Circuit parameters

    Returns:
        EnergyBreakdown whose components sum to its total
    """
    variant = config if isinstance(config, HardwareVariant) else HardwareVariant.from_config(config)
    levels = ActivityLevels.from_stats(activity) if isinstance(activity, ActivityStats) else activity

    tcam = crossbar_energy(geometry.tcam, levels.alpha_ml, params)
    dpe = crossbar_energy(geometry.dpe, levels.alpha_bl, params)
    if variant.uses_break:
        dpe += crossbar_energy(geometry.dpe, levels.alpha_bl_break, params)

    comparator_count = variant.thresholds_per_ml * geometry.num_clauses
    num_vars = geometry.num_vars
    return EnergyBreakdown(
        variant=variant,
        crossbar_tcam=tcam,
        crossbar_dpe=dpe,
        comparators=comparator_count * params.e_comp,
        noise=noise_energy(variant, geometry.dpe.n_rows, params),
        wta=wta_energy(num_vars, params),
        xor_reg=num_vars * (params.e_xor + params.e_reg),
        clock=(num_vars + comparator_count) * params.e_clk,
        leakage=num_vars * (params.p_leak_xor + params.p_leak_reg) * latency_per_iteration(params),
        cycles=params.cycles_per_iteration,
    )


@dataclass(frozen=True)
class SweepPoint:
    variant: str
    num_vars: int
    num_clauses: int
    total: float
    energy_per_cycle: float
    noise_share: float


def energy_sweep(variants: Iterable[HardwareVariant], sizes: Iterable[int], k: int, alpha: float,
                 params: EnergyParams = EnergyParams(),
                 activity: Optional[ActivityLevels] = None) -> List[SweepPoint]:
    """
    Per-iteration energy of each variant over problem sizes V

    C = round(alpha V). Without measured activity, the random-assignment
    expectation for k-clauses is used at every size.
    """
    points = []
    for num_vars in sizes:
        geometry = ArrayGeometry(num_vars=num_vars, num_clauses=round_half_up(alpha * num_vars))
        levels = activity or ActivityLevels.random_assignment(k, num_vars)
        for variant in variants:
            b = iteration_energy(variant, geometry, levels, params)
            points.append(SweepPoint(variant=variant.value, num_vars=num_vars,
                                     num_clauses=geometry.num_clauses, total=b.total,
                                     energy_per_cycle=b.energy_per_cycle,
                                     noise_share=b.share('noise')))
    return points


def breakdowns_to_frame(breakdowns: Dict[str, EnergyBreakdown]) -> pd.DataFrame:
    rows = []
    for label in sorted(breakdowns):
        row = {'label': label}
        row.update(breakdowns[label].to_dict())
        rows.append(row)
    return pd.DataFrame(rows)


def sweep_to_frame(points: Iterable[SweepPoint]) -> pd.DataFrame:
    return pd.DataFrame([asdict(p) for p in points],
                        columns=['variant', 'num_vars', 'num_clauses', 'total',
                                 'energy_per_cycle', 'noise_share'])
