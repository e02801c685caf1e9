"""
Benchmark Application - KLIMA simulator command implementations
Instance generation, single-instance solving, tuned benchmarks and model tables
"""

import glob
import json
import logging
import math
import os
import sys
from typing import Any, Dict, Iterable, List, Optional, Sequence, TextIO

import pandas as pd

from apps.experiment_config import ExperimentConfig, GeneratorSpec
from energy.energy_model import (ArrayGeometry, HardwareVariant, breakdowns_to_frame, energy_sweep,
                                 iteration_energy, latency_per_iteration, sweep_to_frame)
from energy.params import EnergyParams
from generators.random_ksat import PHASE_TRANSITION_ALPHA, generate_random_ksat, phase_transition_alpha
from metrics.its import BenchmarkSummary, instance_metrics, lower_median
from metrics.mapping import advantage_grid
from models.experiment import RESULT_COLUMNS, RESULT_SCHEMA_VERSION, ResultRow
from models.formula import CnfFormula, FormulaError, evaluate
from models.solver_config import SolverConfig
from parsers.dimacs_parser import DimacsParser, write_dimacs
from rng.xorshift import derive_stream_seed
from solvers.base_solver import SolverError
from solvers.runner import run_instance
from tuning.tuner import split_instances, tune

logger = logging.getLogger(__name__)

SWEEP_SIZES = (20, 50, 100, 250)


def instance_seed(master_seed: int, index: int) -> int:
    """Seed of instance `index`, kept to 63 bits so it survives JSON and CSV"""
    return derive_stream_seed(master_seed, index) >> 1


def instance_name(num_vars: int, num_clauses: int, k: int, index: int) -> str:
    return f"rk{k}-v{num_vars}-c{num_clauses}-{index + 1:03d}"


def write_json(path: str, data: Any):
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write('\n')


def write_frame(path: str, frame: pd.DataFrame):
    frame.to_csv(path, index=False, lineterminator='\n')


def generate_instances(spec: GeneratorSpec) -> List[CnfFormula]:
    """The instance set of a generator spec, named as cmd_generate names files"""
    formulas = []
    num_clauses = int(math.floor(spec.alpha * spec.num_vars + 0.5))
    for i in range(spec.count):
        name = instance_name(spec.num_vars, num_clauses, spec.k, i)
        formulas.append(generate_random_ksat(spec.num_vars, spec.k, spec.alpha,
                                             instance_seed(spec.seed, i), name=name))
    return formulas


def load_instances(pattern: str) -> List[CnfFormula]:
    paths = sorted(glob.glob(pattern))
    parser = DimacsParser()
    formulas = []
    for n, path in enumerate(paths, start=1):
        logger.info("Loading instance %d/%d: %s", n, len(paths), os.path.basename(path))
        formulas.append(parser.parse(path))
    return formulas


def cmd_generate(num_vars: int, k: int, alpha: Optional[float], count: int, seed: int,
                 out_dir: str) -> List[str]:
    """
    Write `count` random k-SAT instances and a manifest listing their seeds

    Args:
        num_vars: V
        k: Clause order
        alpha: Clause ratio (phase-transition value for k if None)
        count: Number of instances
        seed: Master seed
        out_dir: Output directory (created if missing)

    Returns:
        Paths of the written .cnf files
    """
    if num_vars < k:
        raise FormulaError(f"Need V >= k, got V={num_vars}, k={k}")
    spec = GeneratorSpec(num_vars=num_vars, k=k,
                         alpha=phase_transition_alpha(k) if alpha is None else alpha,
                         count=count, seed=seed)
    os.makedirs(out_dir, exist_ok=True)

    paths = []
    entries = []
    for i, formula in enumerate(generate_instances(spec)):
        path = os.path.join(out_dir, formula.name + '.cnf')
        comments = [f"random {k}-SAT V={num_vars} C={formula.num_clauses} alpha={spec.alpha}",
                    f"seed {instance_seed(seed, i)}"]
        with open(path, 'w', encoding='utf-8') as f:
            f.write(write_dimacs(formula, comments))
        paths.append(path)
        entries.append({'file': os.path.basename(path), 'seed': instance_seed(seed, i),
                        'num_vars': formula.num_vars, 'num_clauses': formula.num_clauses})

    write_json(os.path.join(out_dir, 'manifest.json'),
               {'generator': spec.to_dict(), 'instances': entries})
    logger.info("Wrote %d instance(s) to %s", len(paths), out_dir)
    return paths


def cmd_solve(file_path: str, config: SolverConfig, params: EnergyParams = EnergyParams(),
              threads: int = 1, out_dir: Optional[str] = None,
              stream: Optional[TextIO] = None) -> Dict[str, Any]:
    """
    Solve one DIMACS file and report the outcome

    Prints a DIMACS-style result ('s SAT' plus a 'v' model line, or
    's UNKNOWN'). A model is printed only after it re-verifies.

    Returns:
        JSON-ready result, also written to out_dir/result.json when given
    """
    stream = stream or sys.stdout
    formula = DimacsParser().parse(file_path)
    logger.info("Solving %s (V=%d, C=%d, k=%d) with %s", formula.name, formula.num_vars,
                formula.num_clauses, formula.order, config.label)
    record = run_instance(formula, config, threads=threads)
    breakdown = iteration_energy(config, ArrayGeometry(formula.num_vars, formula.num_clauses),
                                 record.activity, params)

    first = record.first_solution()
    result = {
        'instance_id': formula.name,
        'heuristic': config.label,
        'num_vars': formula.num_vars,
        'num_clauses': formula.num_clauses,
        'k': formula.order,
        'config': config.to_dict(),
        'num_solved': record.num_solved,
        'max_tries': config.max_tries,
        'success_fraction': record.success_fraction,
        'solved': first is not None,
        'flips': first.flips_used if first is not None else None,
        'assignment': None,
        'energy_per_iteration_joules': breakdown.total,
        'energy': breakdown.to_dict(),
        'activity': record.activity.to_dict(),
    }

    print(f"c {formula.name}: V={formula.num_vars} C={formula.num_clauses} k={formula.order}", file=stream)
    print(f"c {config.label}: {record.num_solved}/{config.max_tries} tries solved", file=stream)
    if first is not None:
        if not evaluate(formula, first.assignment).satisfied:
            raise SolverError(f"Assignment for {formula.name} does not satisfy the formula")
        model = first.assignment.to_dimacs()
        result['assignment'] = model
        print(f"c first solution after {first.flips_used} flips", file=stream)
        print("s SAT", file=stream)
        print("v " + ' '.join(str(v) for v in model) + " 0", file=stream)
    else:
        print("s UNKNOWN", file=stream)

    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        write_json(os.path.join(out_dir, 'result.json'), result)
    return result


def cmd_benchmark(config: ExperimentConfig) -> Dict[str, BenchmarkSummary]:
    """
    Tune every configured heuristic on the tuning split and benchmark it on the rest

    Writes results.csv, breakdown.json, breakdown.csv, tuning.csv,
    sweep.csv, summary.json and manifest.json to config.output_dir.

    Returns:
        BenchmarkSummary per heuristic label
    """
    if config.generator is not None:
        instances = generate_instances(config.generator)
    else:
        instances = load_instances(config.instance_glob)
    if not instances:
        raise ValueError("Empty instance set")

    tune_idx, bench_idx = split_instances(list(range(len(instances))),
                                          config.tune.split_fraction, config.tune.seed)
    tune_set = [instances[i] for i in tune_idx]
    logger.info("Benchmark: %d instance(s), %d for tuning, %d for benchmarking",
                len(instances), len(tune_idx), len(bench_idx))

    params = config.energy_params
    t_iter = latency_per_iteration(params)
    rows: List[ResultRow] = []
    breakdowns: Dict[str, Dict[str, Any]] = {}
    flat_breakdowns = {}
    tuning_frames = []
    summaries: Dict[str, BenchmarkSummary] = {}

    for solver in config.solvers:
        label = solver.label
        tuned = tune(tune_set, solver, config.tune, threads=config.threads)
        tuned_config = tuned.apply(solver)
        frame = tuned.points_frame()
        frame.insert(0, 'heuristic', label)
        tuning_frames.append(frame)

        metrics = []
        energies = []
        breakdowns[label] = {}
        for n, i in enumerate(bench_idx, start=1):
            formula = instances[i]
            logger.info("Benchmarking %s %d/%d: %s", label, n, len(bench_idx), formula.name)
            run_config = tuned_config.with_options(seed=instance_seed(config.seed, i))
            record = run_instance(formula, run_config, threads=config.threads)
            breakdown = iteration_energy(run_config, ArrayGeometry(formula.num_vars, formula.num_clauses),
                                         record.activity, params)
            m = instance_metrics(record, tuned.max_flips_median, t_iter, breakdown.total, config.p_target)
            if not math.isfinite(m.its):
                logger.warning("%s never solved %s within %d flips", label, formula.name,
                               tuned.max_flips_median)
            metrics.append(m)
            energies.append(breakdown)
            breakdowns[label][formula.name] = breakdown.to_dict()
            flat_breakdowns[f"{label}:{formula.name}"] = breakdown
            rows.append(ResultRow(
                instance_id=formula.name,
                heuristic=label,
                num_vars=formula.num_vars,
                num_clauses=formula.num_clauses,
                k=formula.order,
                seed=run_config.seed,
                max_flips=tuned.max_flips_median,
                sigma_rel=tuned_config.noise.relative_sigma if solver.heuristic.uses_noise else None,
                median_its=m.its,
                tts_seconds=m.tts,
                ets_joules=m.ets,
                energy_per_cycle_joules=breakdown.energy_per_cycle,
                success_fraction=record.success_fraction,
            ))

        summaries[label] = BenchmarkSummary(
            label=label,
            instances=tuple(metrics),
            tuned_params=tuned.to_dict(),
            energy={
                'variant': HardwareVariant.from_config(solver).value,
                'mean_energy_per_iteration_joules': math.fsum(b.total for b in energies) / len(energies),
                'mean_energy_per_cycle_joules': math.fsum(b.energy_per_cycle for b in energies) / len(energies),
            },
        )
        logger.info("%s: median ITS %.1f over %d instance(s)", label, summaries[label].median_its,
                    len(metrics))

    out = config.output_dir
    os.makedirs(out, exist_ok=True)
    write_frame(os.path.join(out, 'results.csv'),
                pd.DataFrame([r.to_dict() for r in rows], columns=RESULT_COLUMNS))
    write_json(os.path.join(out, 'breakdown.json'), breakdowns)
    write_frame(os.path.join(out, 'breakdown.csv'), breakdowns_to_frame(flat_breakdowns))
    write_frame(os.path.join(out, 'tuning.csv'), pd.concat(tuning_frames, ignore_index=True))

    variants = sorted({HardwareVariant.from_config(s) for s in config.solvers}, key=lambda v: v.value)
    k = lower_median(f.order for f in instances)
    alpha = lower_median(f.ratio for f in instances)
    write_frame(os.path.join(out, 'sweep.csv'),
                sweep_to_frame(energy_sweep(variants, SWEEP_SIZES, k, alpha, params)))

    write_json(os.path.join(out, 'summary.json'), {
        'schema_version': RESULT_SCHEMA_VERSION,
        'summaries': {label: s.to_dict() for label, s in summaries.items()},
    })
    tune_members = set(tune_idx)
    write_json(os.path.join(out, 'manifest.json'), {
        'schema_version': RESULT_SCHEMA_VERSION,
        'config': config.to_dict(),
        'instances': [
            {
                'instance_id': f.name,
                'num_vars': f.num_vars,
                'num_clauses': f.num_clauses,
                'split': 'tune' if i in tune_members else 'benchmark',
                'seed': instance_seed(config.seed, i),
            }
            for i, f in enumerate(instances)
        ],
        'outputs': ['breakdown.csv', 'breakdown.json', 'results.csv', 'summary.json',
                    'sweep.csv', 'tuning.csv'],
    })
    logger.info("Results written to %s", out)
    return summaries


def cmd_advantage(k_values: Sequence[int], alphas: Optional[Dict[int, float]] = None,
                  num_vars: int = 100, out_file: Optional[str] = None) -> pd.DataFrame:
    """Mapping advantage and coupling counts over clause orders"""
    for k in k_values:
        if k < 2:
            raise ValueError(f"k must be >= 2, got {k}")
    frame = pd.DataFrame(advantage_grid(k_values, alphas or PHASE_TRANSITION_ALPHA, num_vars))
    if out_file:
        write_frame(out_file, frame)
    return frame


def cmd_sweep(labels: Iterable[str], sizes: Sequence[int], k: int, alpha: Optional[float] = None,
              params: EnergyParams = EnergyParams(), out_file: Optional[str] = None) -> pd.DataFrame:
    """Per-iteration energy of hardware variants over problem sizes"""
    variants = [HardwareVariant.from_config(SolverConfig.from_label(label)) for label in labels]
    points = energy_sweep(variants, sizes, k, phase_transition_alpha(k) if alpha is None else alpha, params)
    frame = sweep_to_frame(points)
    if out_file:
        write_frame(out_file, frame)
    return frame
