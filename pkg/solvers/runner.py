"""
Try and restart orchestration

Try i of a run draws from XorShiftRng(config.seed, stream=i), so a run
gives the same tries whether they execute sequentially or on a thread pool.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Optional, Type

from accelerator.datapath import KlimaDatapath
from accelerator.image import AcceleratorImage, compile_formula
from models.activity import ActivityStats
from models.formula import CnfFormula, evaluate
from models.run_record import RunRecord, TryResult
from models.solver_config import Heuristic, SolverConfig
from rng.xorshift import XorShiftRng
from solvers.base_solver import BaseSolver, SearchState, SolverError
from solvers.gsat import GsatSolver
from solvers.gwsat import GwsatSolver
from solvers.noisy import GnsatSolver, MnsatSolver
from solvers.walksat import WalkSatSolver, WalkSatSkcSolver

logger = logging.getLogger(__name__)

SOLVERS: Dict[Heuristic, Type[BaseSolver]] = {
    Heuristic.GSAT: GsatSolver,
    Heuristic.WALKSAT: WalkSatSolver,
    Heuristic.WALKSAT_SKC: WalkSatSkcSolver,
    Heuristic.GWSAT: GwsatSolver,
    Heuristic.MNSAT: MnsatSolver,
    Heuristic.GNSAT: GnsatSolver,
}


def create_solver(config: SolverConfig) -> BaseSolver:
    return SOLVERS[config.heuristic](config)


def run_try(image: AcceleratorImage, config: SolverConfig, rng: XorShiftRng,
            datapath: Optional[KlimaDatapath] = None,
            formula: Optional[CnfFormula] = None) -> TryResult:
    """
    One try: random initial assignment, then flips until satisfied or max_flips

    Args:
        image: Compiled formula
        config: Solver configuration
        rng: Generator owned by this try
        datapath: Shared precomputed datapath for `image`, built if omitted
        formula: When given, a solution is re-verified against it

    Returns:
        TryResult; flips_used is the flip count at first satisfaction, or
        max_flips for an unsolved try
    """
    if datapath is None:
        datapath = KlimaDatapath(image)
    solver = create_solver(config)
    state = SearchState(
        datapath=datapath,
        bits=rng.random_bits(image.num_vars),
        rng=rng,
        config=config,
        noise=solver.noise_source(datapath),
        uses_break=solver.uses_break,
    )

    trajectory = []
    while not state.satisfied and state.flips < config.max_flips:
        variable = solver.step(state)
        state.flip(variable)
        if config.record_trajectory:
            trajectory.append(variable)

    solved = state.satisfied
    assignment = state.assignment()
    if solved and formula is not None and not evaluate(formula, assignment).satisfied:
        raise SolverError(f"{config.label} reported a non-satisfying assignment for '{formula.name}'")

    return TryResult(
        solved=solved,
        flips_used=state.flips if solved else config.max_flips,
        final_unsat=state.unsat_count,
        assignment=assignment,
        trajectory=tuple(trajectory),
        activity=state.activity,
    )


def run_instance(formula: CnfFormula, config: SolverConfig, threads: int = 1,
                 image: Optional[AcceleratorImage] = None) -> RunRecord:
    """
    Run config.max_tries independent tries on one formula

    Args:
        formula: Instance to solve
        config: Solver configuration; config.seed is the master seed
        threads: Worker threads for the tries (1 runs them inline)
        image: Precompiled image of `formula`

    Returns:
        RunRecord with the tries in index order and merged activity
    """
    if image is None:
        image = compile_formula(formula)
    datapath = KlimaDatapath(image)

    def one_try(index: int) -> TryResult:
        rng = XorShiftRng(seed=config.seed, stream=index)
        return run_try(image, config, rng, datapath=datapath, formula=formula)

    indices = range(config.max_tries)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            tries = list(pool.map(one_try, indices))
    else:
        tries = [one_try(i) for i in indices]

    record = RunRecord(
        instance_id=formula.name or 'instance',
        num_vars=formula.num_vars,
        num_clauses=formula.num_clauses,
        config=config,
        tries=tuple(tries),
        activity=ActivityStats.merge_all(t.activity for t in tries),
    )
    logger.debug("%s on %s: %d/%d tries solved", config.label, record.instance_id,
                 record.num_solved, config.max_tries)
    return record
