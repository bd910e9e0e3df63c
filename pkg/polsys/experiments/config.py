import math
from dataclasses import dataclass, replace
from typing import Optional

from polsys import default_settings
from polsys.algebra.field import FieldSpec
from polsys.decoders import DECODERS
from polsys.decoders.bounds import l_bk, l_glz, l_star, p_bms, p_glz
from polsys.errors import UsageError
from polsys.system.generate import GENERATORS


L_MODES = ('glz', 'bk', 'star', 'explicit')


@dataclass(frozen=True)
class ExperimentConfig:
    """One row of the failure rate table."""

    spec: FieldSpec
    n: int = default_settings.EXPERIMENT_N
    m: int = default_settings.EXPERIMENT_M
    deg_a: int = default_settings.EXPERIMENT_DEG_A
    df: int = default_settings.EXPERIMENT_DF
    dg: int = default_settings.EXPERIMENT_DG
    e: int = default_settings.EXPERIMENT_ERRORS
    l_mode: str = 'glz'
    explicit_L: Optional[int] = None
    systems: int = default_settings.EXPERIMENT_SYSTEMS
    trials: int = default_settings.EXPERIMENT_TRIALS
    seed: int = default_settings.DEFAULT_SEED
    method: str = 'glz'
    generator: str = default_settings.EXPERIMENT_GENERATOR
    adversarial: bool = False
    workers: int = default_settings.EXPERIMENT_WORKERS
    verify: bool = default_settings.VERIFY_SOLUTIONS

    def __post_init__(self):
        if self.l_mode not in L_MODES:
            raise UsageError('unknown point count mode %r' % (self.l_mode,), {'modes': L_MODES})
        if self.method not in DECODERS:
            raise UsageError('unknown decoding method %r' % (self.method,), {'methods': sorted(DECODERS)})
        if self.generator not in GENERATORS:
            raise UsageError('unknown generator %r' % (self.generator,), {'generators': GENERATORS})
        if min(self.systems, self.trials, self.workers) < 1:
            raise UsageError('systems, trials and workers must be at least 1')
        if not self.m >= self.n >= 1:
            raise UsageError('need m >= n >= 1', {'m': self.m, 'n': self.n})
        if min(self.deg_a, self.df, self.dg, self.e) < 0:
            raise UsageError('degrees and error count must be non negative')
        if self.l_mode == 'explicit' and not self.explicit_L:
            raise UsageError('explicit point count mode needs L')

        L = self.L
        minimum = l_bk(self.df, self.dg, self.e) if self.method == 'bk' else l_star(self.n, self.df, self.dg, self.e)
        if L < minimum:
            raise UsageError('%d points are too few for the %s decoder, at least %d needed' % (L, self.method, minimum))
        if L > self.spec.order:
            raise UsageError('%s has only %d elements, %d points requested' % (self.spec, self.spec.order, L))

    @property
    def L(self):
        if self.l_mode == 'glz':
            return l_glz(self.n, self.df, self.dg, self.e)
        if self.l_mode == 'bk':
            return l_bk(self.df, self.dg, self.e)
        if self.l_mode == 'star':
            return l_star(self.n, self.df, self.dg, self.e)
        return self.explicit_L

    @property
    def total_trials(self):
        return self.systems * self.trials

    def with_changes(self, **changes):
        return replace(self, **changes)


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    failures: int
    wrong: int
    ms: int = 0

    @property
    def p_observed(self):
        return self.failures / self.config.total_trials

    @property
    def p_glz(self):
        return p_glz(self.config.spec.order, self.config.dg, self.config.e)

    @property
    def p_bms(self):
        return p_bms(self.config.spec.order, self.config.n)

    @property
    def glz_bound_slack(self):
        """Three standard deviations of a rate ``p_glz`` over the trial count."""
        return 3 * math.sqrt(self.p_glz / self.config.total_trials)

    @property
    def within_glz_bound(self):
        return self.p_observed <= self.p_glz + self.glz_bound_slack

    def row(self, digits=None):
        digits = digits or default_settings.FLOAT_DIGITS
        cfg = self.config

        def number(value):
            return format(value, '.%dg' % digits)

        return {
            'q': cfg.spec.order,
            'n': cfg.n,
            'm': cfg.m,
            'df': cfg.df,
            'dg': cfg.dg,
            'e': cfg.e,
            'L': cfg.L,
            'mode': cfg.l_mode,
            'method': cfg.method,
            'systems': cfg.systems,
            'trials': cfg.trials,
            'failures': self.failures,
            'wrong': self.wrong,
            'p_observed': number(self.p_observed),
            'p_glz': number(self.p_glz),
            'p_bms': number(self.p_bms),
            'seed': cfg.seed,
            'ms': self.ms,
        }


def experiment_grid(base: ExperimentConfig, fields=(), modes=(), errors=()):
    """Configs for every combination of field, point count mode and error count."""
    configs = []
    for spec in fields or (base.spec,):
        for l_mode in modes or (base.l_mode,):
            for e in errors or (base.e,):
                configs.append(base.with_changes(spec=spec, l_mode=l_mode, e=e))
    return configs
