import click
import numpy as np

from polsys.decoders.bounds import l_bk, l_glz, l_star
from polsys.errors import UsageError
from polsys.formats import InstanceFormat, SamplesDocument, SamplesFormat
from polsys.oracle import ErrorPlan, adversarial_corrupt, corrupted_positions, sample_black_box
from polsys.system import choose_evaluation_points, generate_instance
from .manager import current_seed, handle_errors, manager


POINT_COUNTS = {
    'glz': lambda n, df, dg, e: l_glz(n, df, dg, e),
    'bk': lambda n, df, dg, e: l_bk(df, dg, e),
    'star': lambda n, df, dg, e: l_star(n, df, dg, e),
}


@manager.command('corrupt')
@click.argument('instance', type=click.Path(exists=True, dir_okay=False))
@click.option('-e', 'e', type=int, default=0, help='Number of erroneous evaluations.')
@click.option('-L', 'L', type=int, default=None, help='Number of evaluation points.')
@click.option('--mode', type=click.Choice(sorted(POINT_COUNTS)), default='glz',
              help='Point count formula used when -L is not given.')
@click.option('--adversarial', is_flag=True, default=False,
              help='Answer with another system on the error positions instead of random values.')
@click.option('--out', required=True, type=click.Path(dir_okay=False, writable=True))
@handle_errors
def corrupt(instance, e, L, mode, adversarial, out):
    """Evaluate an instance with its SOLUTION block and corrupt e evaluations.

    Example:
    ::

        $ polsys --seed 3 corrupt system.polsys -e 2 --out system.samples

    """
    document = InstanceFormat().read(instance)
    system, solution = document.system, document.solution
    if solution is None:
        raise UsageError('%s has no SOLUTION block' % instance)
    if L is None:
        L = POINT_COUNTS[mode](system.n, max(solution.df, 0), solution.dg, e)

    rng = np.random.default_rng(current_seed())
    points = choose_evaluation_points(system, solution.g, L, seed=rng)
    plan = ErrorPlan.random(L, e, seed=rng)
    if adversarial:
        # honest answers of a second random system of the same shape
        _, alternative = generate_instance(system.spec, system.n, system.n, 0, max(solution.df, 0), 0, seed=rng)
        samples = adversarial_corrupt(system, solution, points, plan.errors, alternative)
    else:
        samples = sample_black_box(system, solution, points, plan)

    errors = corrupted_positions(samples)
    SamplesFormat().write(out, SamplesDocument(system.spec, system.m, system.n, tuple(samples), solution, errors))
    click.echo('%d samples written to %s, %d corrupted' % (L, out, len(errors)))
