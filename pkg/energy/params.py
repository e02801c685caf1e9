"""
Circuit parameters of the energy model and their parameter-file format

Attributes are SI (V, s, Ohm, A, F, F/m, m, J, W). The parameter file is a
JSON object keyed by the published parameter names, in the published units
(fF, fJ, nW, ...); load and dump convert between the two.
"""

import json
import logging
from dataclasses import dataclass, fields, replace
from typing import Any, Dict

logger = logging.getLogger(__name__)

FEMTO = 1e-15
NANO = 1e-9
MICRO = 1e-6


@dataclass(frozen=True)
class EnergyParams:
    """Circuit constants, 28nm CMOS with 2T2R RRAM cells"""

    v_dd: float = 0.9
    """Supply voltage (V)."""

    t_clk: float = 2 * NANO
    """Clock cycle (s)."""

    v_read: float = 0.3
    """Read voltage applied to the crossbar (V)."""

    r_lrs: float = 500e3
    """Low-resistance-state resistance (Ohm)."""

    i_leak: float = 2.07 * NANO
    """Row driver leakage current (A)."""

    i_tia_bias: float = 2 * MICRO
    """TIA bias current (A)."""

    c_inv: float = 0.35 * FEMTO
    """Input capacitance of a minimum inverter (F)."""

    c_w: float = 0.22 * FEMTO / MICRO
    """Wire capacitance per length (F/m)."""

    c_g: float = 0.3 * FEMTO
    """Access transistor gate capacitance (F)."""

    w_cell: float = 405 * NANO
    """Cell width (m)."""

    e_xor: float = 1.84 * FEMTO
    """XOR gate energy per operation (J)."""

    p_leak_xor: float = 7.2 * NANO
    """XOR gate leakage power (W)."""

    e_reg: float = 7.16 * FEMTO
    """State register energy per write (J)."""

    p_leak_reg: float = 41 * NANO
    """State register leakage power (W)."""

    e_comp: float = 5.5 * FEMTO
    """Sense-amplifier comparator energy (J)."""

    e_clk: float = 1.85 * FEMTO
    """Clock energy per clocked element (J)."""

    e_pnrg: float = 365 * FEMTO
    """64-bit xorshift PNRG energy per draw (J)."""

    e_vcdl: float = 7.9 * FEMTO
    """Voltage-controlled delay line energy (J)."""

    e_wta_logic: float = 3.4 * FEMTO
    """WTA first-arrival logic energy per line (J)."""

    e_gprng_lut: float = 11.12 * FEMTO
    """GPRNG look-up table energy per sample (J)."""

    e_gprng_comp: float = 28 * FEMTO
    """GPRNG integer comparator energy per sample (J)."""

    n_bdac: int = 4
    """Noise DAC resolution (bits)."""

    v_eo: float = 0.0
    """DAC output offset voltage (V). Not published; assumed 0."""

    r_dac: float = 1e6
    """DAC output resistance (Ohm). Not published; assumed 1 MOhm."""

    cycles_per_iteration: int = 3
    """Clock cycles per solver iteration (match, threshold, DPE/WTA)."""

    pnrg_rows: int = 64
    """Noise rows sharing one PNRG draw."""

    gaussian_pnrg_draws: int = 2
    """PNRG draws per GPRNG sample group (index and threshold)."""

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == 'v_eo':
                if value < 0:
                    raise ValueError(f"v_eo must be >= 0, got {value}")
            elif value <= 0:
                raise ValueError(f"{f.name} must be > 0, got {value}")
        if self.v_eo >= self.v_read:
            raise ValueError(f"v_eo ({self.v_eo} V) must be below v_read ({self.v_read} V)")

    def with_options(self, **changes) -> 'EnergyParams':
        return replace(self, **changes)


# Published name -> (attribute, unit, scale to SI)
TABLE_KEYS = {
    'V_DD': ('v_dd', 'V', 1.0),
    't_clk': ('t_clk', 'ns', NANO),
    'V_read': ('v_read', 'V', 1.0),
    'R_LRS': ('r_lrs', 'Ohm', 1.0),
    'I_leak': ('i_leak', 'nA', NANO),
    'I_TIA_bias': ('i_tia_bias', 'uA', MICRO),
    'C_inv': ('c_inv', 'fF', FEMTO),
    'C_w': ('c_w', 'fF/um', FEMTO / MICRO),
    'C_G': ('c_g', 'fF', FEMTO),
    'W_cell': ('w_cell', 'nm', NANO),
    'E_XOR': ('e_xor', 'fJ', FEMTO),
    'P_leak_XOR': ('p_leak_xor', 'nW', NANO),
    'E_REG': ('e_reg', 'fJ', FEMTO),
    'P_leak_REG': ('p_leak_reg', 'nW', NANO),
    'E_comp': ('e_comp', 'fJ', FEMTO),
    'E_CLK': ('e_clk', 'fJ', FEMTO),
    'E_PNRG': ('e_pnrg', 'fJ', FEMTO),
    'E_VCDL': ('e_vcdl', 'fJ', FEMTO),
    'E_WTA_logic': ('e_wta_logic', 'fJ', FEMTO),
    'E_GPRNG_LUT': ('e_gprng_lut', 'fJ', FEMTO),
    'E_GPRNG_comp': ('e_gprng_comp', 'fJ', FEMTO),
    'n_bDAC': ('n_bdac', 'bits', 1),
    'V_EO': ('v_eo', 'V', 1.0),
    'R_DAC': ('r_dac', 'MOhm', 1e6),
    'cycles_per_iteration': ('cycles_per_iteration', '', 1),
    'pnrg_rows': ('pnrg_rows', '', 1),
    'gaussian_pnrg_draws': ('gaussian_pnrg_draws', '', 1),
}

_INTEGER_KEYS = {'n_bDAC', 'cycles_per_iteration', 'pnrg_rows', 'gaussian_pnrg_draws'}


def params_from_table(data: Dict[str, Any], base: EnergyParams = None) -> EnergyParams:
    """
    Build params from published-unit values, over `base` (defaults if None)

    Unknown keys are rejected.
    """
    unknown = sorted(set(data) - set(TABLE_KEYS))
    if unknown:
        raise ValueError(f"Unknown energy parameter(s): {', '.join(unknown)}. "
                         f"Valid names: {', '.join(TABLE_KEYS)}")
    changes = {}
    for key, value in data.items():
        attr, _, scale = TABLE_KEYS[key]
        changes[attr] = int(value) if key in _INTEGER_KEYS else float(value) * scale
    return replace(base or EnergyParams(), **changes)


def params_to_table(params: EnergyParams) -> Dict[str, Any]:
    """Published-unit values keyed by published names"""
    table = {}
    for key, (attr, _, scale) in TABLE_KEYS.items():
        value = getattr(params, attr)
        table[key] = int(value) if key in _INTEGER_KEYS else float(f"{value / scale:.12g}")
    return table


def load_energy_params(file_path: str) -> EnergyParams:
    with open(file_path, 'r', encoding='utf-8') as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise ValueError(f"{file_path}: energy parameter file must hold a JSON object")
    params = params_from_table(data)
    logger.info("Loaded %d energy parameter override(s) from %s", len(data), file_path)
    return params


def dump_energy_params(params: EnergyParams, file_path: str):
    with open(file_path, 'w', encoding='utf-8') as f:
        json.dump(params_to_table(params), f, indent=2)
        f.write('\n')
