"""Monte-Carlo failure rate harness.

Every system and every trial draws from its own generator seeded with
``[seed, system]`` or ``[seed, system, trial]``, so the counts depend on the
master seed only, whatever the number of workers.
"""

import logging
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple

import numpy as np

from polsys.algebra.poly import one
from polsys.decoders import get_decoder
from polsys.oracle import ErrorPlan, adversarial_corrupt, black_box_outputs, sample_black_box
from polsys.signals import system_finished
from polsys.system import ReducedRationalSolution, choose_evaluation_points, generate_instance, usable_points
from polsys.system.generate import random_poly
from polsys.experiments.config import ExperimentConfig, ExperimentResult


logger = logging.getLogger(__name__)


class SystemTally(NamedTuple):
    index: int
    failures: int
    wrong: int


def alternative_solution(cfg: ExperimentConfig, rng):
    """Polynomial solution of another system, used by the adversarial channel."""
    return ReducedRationalSolution(tuple(random_poly(cfg.spec, cfg.df, rng) for _ in range(cfg.n)),
                                   one(cfg.spec.GF))


def run_trial(cfg: ExperimentConfig, system, solution, usable, rng):
    """One decoding attempt, returns ``(failed, wrong)``."""
    points = choose_evaluation_points(system, solution.g, cfg.L, seed=rng, usable=usable)
    plan = ErrorPlan.random(cfg.L, cfg.e, seed=rng)
    if cfg.adversarial:
        samples = adversarial_corrupt(system, solution, points, plan.errors, alternative_solution(cfg, rng))
    else:
        samples = sample_black_box(system, solution, points, plan)

    kwargs = {'verify': cfg.verify}
    if cfg.method == 'glz':
        kwargs['rng'] = rng
    outcome = get_decoder(cfg.method)(black_box_outputs(samples), cfg.n, cfg.df, cfg.dg, cfg.e, **kwargs)
    if not outcome:
        return True, False
    return False, outcome.solution != solution


def run_system(cfg: ExperimentConfig, index) -> SystemTally:
    system, solution = generate_instance(cfg.spec, cfg.n, cfg.m, cfg.deg_a, cfg.df, cfg.dg,
                                         seed=[cfg.seed, index], mode=cfg.generator, min_points=cfg.L)
    usable = usable_points(system, solution.g)
    failures = wrong = 0
    for trial in range(cfg.trials):
        failed, mistaken = run_trial(cfg, system, solution, usable, np.random.default_rng([cfg.seed, index, trial]))
        failures += failed
        wrong += mistaken
    return SystemTally(index, failures, wrong)


def _tallies(cfg: ExperimentConfig):
    if cfg.workers == 1:
        for index in range(cfg.systems):
            yield run_system(cfg, index)
        return
    # numba (under galois) aborts forked children once its OpenMP layer is up
    context = multiprocessing.get_context('spawn')
    with ProcessPoolExecutor(max_workers=cfg.workers, mp_context=context) as executor:
        yield from executor.map(run_system, [cfg] * cfg.systems, range(cfg.systems))


def run_experiment(cfg: ExperimentConfig, timing=False) -> ExperimentResult:
    """Decode ``cfg.trials`` fresh corruptions of each of ``cfg.systems`` random systems.

    :param timing: record the wall time in milliseconds (0 otherwise)
    """
    logger.info('experiment %s n=%d df=%d dg=%d e=%d L=%d (%s) method=%s', cfg.spec, cfg.n, cfg.df, cfg.dg, cfg.e,
                cfg.L, cfg.l_mode, cfg.method)
    start = time.perf_counter()
    failures = wrong = 0
    for tally in _tallies(cfg):
        failures += tally.failures
        wrong += tally.wrong
        logger.info('system %d: %d failures, %d wrong', tally.index, tally.failures, tally.wrong)
        system_finished.send(cfg, index=tally.index, failures=tally.failures, wrong=tally.wrong)
    ms = int((time.perf_counter() - start) * 1000) if timing else 0

    result = ExperimentResult(cfg, failures, wrong, ms)
    if cfg.method == 'glz' and not result.within_glz_bound:
        logger.warning('observed failure rate %.4g exceeds the bound %.4g', result.p_observed, result.p_glz)
    if wrong:
        logger.warning('%d decoded solutions differ from the planted one', wrong)
    return result
