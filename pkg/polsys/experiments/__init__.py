from polsys.decoders.bounds import l_star  # noqa
from polsys.experiments.config import L_MODES, ExperimentConfig, ExperimentResult, experiment_grid  # noqa
from polsys.experiments.runner import run_experiment, run_system  # noqa
from polsys.experiments.output import format_result, write_result  # noqa
