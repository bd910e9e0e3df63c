import os
import pathlib


def env(variable, fallback_value=None):
    env_value = os.environ.get(variable)
    if env_value is None:
        return fallback_value
    elif env_value == '__EMPTY__':
        return ''
    return env_value


def strtobool(value):
    value = str(value).strip().lower()
    if value in ('y', 'yes', 't', 'true', 'on', '1'):
        return True
    if value in ('n', 'no', 'f', 'false', 'off', '0'):
        return False
    raise ValueError('invalid truth value %r' % (value,))


POLSYS_DIR = pathlib.Path(__file__).resolve().parent

DEBUG = strtobool(env('POLSYS_DEBUG', 'false'))

#: logging dictConfig file (yaml)
LOG_CONFIG_FILE = env('LOG_CONFIG_FILE', str(POLSYS_DIR / 'logging_config.yml'))

#: field used by the CLI when ``--field`` is not given
DEFAULT_FIELD = env('POLSYS_FIELD', 'GF(2^4; 1,1,0,0,1)')

#: master seed used by the CLI when ``--seed`` is not given
DEFAULT_SEED = int(env('POLSYS_SEED', 0))

#: primitive moduli for binary extension fields, ascending coefficients
DEFAULT_MODULI = {
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
}

#: rejection sampling retries per draw
RETRY_BUDGET = int(env('POLSYS_RETRY_BUDGET', 100))

#: evaluation points tried by the probabilistic full rank check
FULL_RANK_PROBES = int(env('POLSYS_FULL_RANK_PROBES', 4))

#: degree and residual checks on decoded solutions
VERIFY_SOLUTIONS = strtobool(env('POLSYS_VERIFY_SOLUTIONS', 'true'))

# experiment defaults, these are reproduction choices stamped into the csv
EXPERIMENT_N = 3
EXPERIMENT_M = 3
EXPERIMENT_DEG_A = 2
EXPERIMENT_DF = 2
EXPERIMENT_DG = 2
EXPERIMENT_ERRORS = 5
EXPERIMENT_SYSTEMS = 20
EXPERIMENT_TRIALS = 1000
EXPERIMENT_GENERATOR = 'planted'
EXPERIMENT_WORKERS = int(env('POLSYS_WORKERS', 1))
EXPERIMENT_RECORD_TIMING = strtobool(env('POLSYS_RECORD_TIMING', 'false'))

CSV_COLUMNS = [
    'q', 'n', 'm', 'df', 'dg', 'e', 'L', 'mode', 'method', 'systems', 'trials',
    'failures', 'wrong', 'p_observed', 'p_glz', 'p_bms', 'seed', 'ms',
]

#: significant digits of floating point columns
FLOAT_DIGITS = 6
