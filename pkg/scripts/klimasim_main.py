#!/usr/bin/env python3
"""
KLIMA Simulator - Command Line Entry Point
Generates instances, solves them on the accelerator model and runs tuned benchmarks
"""

import argparse
import logging
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

logger = logging.getLogger('klimasim')


def heuristic_name(value: str) -> str:
    """argparse type: a heuristic name or report label"""
    from models.solver_config import SolverConfig
    try:
        SolverConfig.from_label(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='klimasim', description='KLIMA in-memory SAT accelerator simulator')
    parser.add_argument('-v', '--verbose', action='store_true', help='Debug logging')
    parser.add_argument('-q', '--quiet', action='store_true', help='Warnings and errors only')
    commands = parser.add_subparsers(dest='command', required=True)

    gen = commands.add_parser('generate', help='Write random k-SAT instances in DIMACS format')
    gen.add_argument('-n', '--num-vars', type=int, required=True, help='Variables V')
    gen.add_argument('-k', type=int, default=3, help='Literals per clause')
    gen.add_argument('--alpha', type=float, default=None, help='Clause ratio C/V (phase transition if omitted)')
    gen.add_argument('--count', type=int, default=10, help='Number of instances')
    gen.add_argument('--seed', type=int, default=0, help='Master seed')
    gen.add_argument('--out', required=True, help='Output directory')

    solve = commands.add_parser('solve', help='Solve one DIMACS file')
    solve.add_argument('file', help='DIMACS .cnf file')
    solve.add_argument('--heuristic', type=heuristic_name, default='GNSAT-N',
                       help='GSAT, WALKSAT, WALKSAT_SKC, GWSAT, MNSAT, GNSAT-N or GNSAT-U')
    solve.add_argument('--max-flips', type=int, default=10000, help='Flips per try')
    solve.add_argument('--max-tries', type=int, default=100, help='Tries')
    solve.add_argument('--sigma-rel', type=float, default=0.1, help='Relative noise sigma (MNSAT, GNSAT)')
    solve.add_argument('--walk-p', type=float, default=0.5, help='Walk probability p (WalkSAT family, GWSAT)')
    solve.add_argument('--wp', type=float, default=0.5, help='GWSAT random member probability')
    solve.add_argument('--tie-break', choices=['random', 'lowest_index'], default='random')
    solve.add_argument('--seed', type=int, default=0, help='Master seed')
    solve.add_argument('--params', help='Energy parameter file (JSON)')
    solve.add_argument('--out', help='Directory for result.json')
    solve.add_argument('--threads', type=int, default=1, help='Worker threads for tries')
    solve.add_argument('--check-invariants', action='store_true', help='Verify the flip identity every step')

    bench = commands.add_parser('benchmark', help='Tune and benchmark heuristics from a config file')
    bench.add_argument('config', help='Experiment config (JSON)')
    bench.add_argument('--out', help='Override the output directory')
    bench.add_argument('--threads', type=int, help='Override the worker thread count')
    bench.add_argument('--seed', type=int, help='Override the master seed')
    bench.add_argument('--params', help='Override the energy parameter file')

    adv = commands.add_parser('advantage', help='Mapping advantage over Hopfield networks')
    adv.add_argument('--k-min', type=int, default=2)
    adv.add_argument('--k-max', type=int, default=7)
    adv.add_argument('--alpha', type=float, default=None, help='Fixed clause ratio (phase transition per k if omitted)')
    adv.add_argument('--num-vars', type=int, default=100, help='V for the absolute coupling counts')
    adv.add_argument('--out', help='CSV file (stdout if omitted)')

    sweep = commands.add_parser('sweep', help='Energy per iteration over problem sizes')
    sweep.add_argument('--heuristic', type=heuristic_name, nargs='+', default=['MNSAT', 'GNSAT-U', 'GNSAT-N'])
    sweep.add_argument('--sizes', type=int, nargs='+', default=[20, 50, 100, 250])
    sweep.add_argument('-k', type=int, default=3)
    sweep.add_argument('--alpha', type=float, default=None)
    sweep.add_argument('--params', help='Energy parameter file (JSON)')
    sweep.add_argument('--out', help='CSV file (stdout if omitted)')
    return parser


def run(args, parser) -> int:
    from apps import bench_app
    from energy.params import EnergyParams, load_energy_params
    from models.solver_config import NoiseConfig, SolverConfig, TieBreak

    params = load_energy_params(args.params) if getattr(args, 'params', None) else EnergyParams()

    if args.command == 'generate':
        if args.num_vars < args.k:
            parser.error(f"--num-vars ({args.num_vars}) must be >= -k ({args.k})")
        paths = bench_app.cmd_generate(args.num_vars, args.k, args.alpha, args.count, args.seed, args.out)
        for path in paths:
            print(path)

    elif args.command == 'solve':
        config = SolverConfig.from_label(
            args.heuristic,
            noise=NoiseConfig(relative_sigma=args.sigma_rel),
            max_flips=args.max_flips,
            max_tries=args.max_tries,
            walk_p=args.walk_p,
            gwsat_wp=args.wp,
            seed=args.seed,
            tie_break=TieBreak(args.tie_break.upper()),
            check_invariants=args.check_invariants,
        )
        bench_app.cmd_solve(args.file, config, params=params, threads=args.threads, out_dir=args.out)

    elif args.command == 'benchmark':
        from apps.experiment_config import load_experiment_config
        config = load_experiment_config(args.config)
        overrides = {}
        if args.out:
            overrides['output_dir'] = args.out
        if args.threads:
            overrides['threads'] = args.threads
        if args.seed is not None:
            overrides['seed'] = args.seed
        if args.params:
            overrides['energy_params'] = params
            overrides['energy_params_path'] = os.path.abspath(args.params)
        summaries = bench_app.cmd_benchmark(config.with_options(**overrides))
        for label, summary in summaries.items():
            print(f"{label}: median ITS {summary.median_its:.1f}, median TTS {summary.median_tts:.3e} s, "
                  f"median ETS {summary.median_ets:.3e} J")

    elif args.command == 'advantage':
        if args.k_min < 2 or args.k_max < args.k_min:
            parser.error("need 2 <= --k-min <= --k-max")
        ks = list(range(args.k_min, args.k_max + 1))
        alphas = {k: args.alpha for k in ks} if args.alpha is not None else None
        frame = bench_app.cmd_advantage(ks, alphas, num_vars=args.num_vars, out_file=args.out)
        if not args.out:
            print(frame.to_csv(index=False, lineterminator='\n'), end='')

    elif args.command == 'sweep':
        frame = bench_app.cmd_sweep(args.heuristic, args.sizes, args.k, args.alpha, params, out_file=args.out)
        if not args.out:
            print(frame.to_csv(index=False, lineterminator='\n'), end='')

    return 0


def main(argv=None) -> int:
    """Main application entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)

    from metrics.its import ItsError
    from parsers.dimacs_parser import DimacsParseError
    from solvers.base_solver import SolverError
    from tuning.tuner import TuningError

    try:
        return run(args, parser)
    except (DimacsParseError, ItsError, SolverError, TuningError, ValueError, OSError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
