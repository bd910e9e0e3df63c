"""Polynomial linear systems, their reduced rational solution and random instances.

The error free solver lives in :mod:`polsys.system.solve`; it depends on the
decoders and is imported from there directly.
"""

from polsys.system.model import PolySystem, ReducedRationalSolution, plant_solution, reduce_fraction  # noqa
from polsys.system.points import choose_evaluation_points, usable_points  # noqa
from polsys.system.generate import GENERATORS, generate_instance  # noqa
