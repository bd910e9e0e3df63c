"""Simulated black box returning possibly erroneous evaluations."""

from polsys.oracle.samples import (  # noqa
    BlackBoxOutput,
    ErrorPlan,
    EvaluationSample,
    black_box_outputs,
    corrupted_positions,
)
from polsys.oracle.channel import adversarial_corrupt, sample_black_box  # noqa
