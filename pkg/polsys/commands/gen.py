import click
from flask import current_app

from polsys.formats import InstanceDocument, InstanceFormat
from polsys.system import GENERATORS, generate_instance
from .manager import current_seed, current_spec, handle_errors, manager


@manager.command('gen')
@click.option('-n', 'n', type=int, default=None, help='Unknowns.')
@click.option('-m', 'm', type=int, default=None, help='Equations.')
@click.option('--deg-a', type=int, default=None, help='Degree bound of the random matrix entries.')
@click.option('--df', type=int, default=None, help='Numerator degree.')
@click.option('--dg', type=int, default=None, help='Denominator degree.')
@click.option('--generator', type=click.Choice(GENERATORS), default=None)
@click.option('--min-points', type=int, default=0, help='Redraw until this many evaluation points are usable.')
@click.option('--out', required=True, type=click.Path(dir_okay=False, writable=True))
@handle_errors
def gen(n, m, deg_a, df, dg, generator, min_points, out):
    """Write a random instance with its planted solution.

    Example:
    ::

        $ polsys --seed 1 gen -n 2 -m 3 --df 2 --dg 1 --out system.polsys

    """
    config = current_app.config
    n = config['EXPERIMENT_N'] if n is None else n
    m = max(n, config['EXPERIMENT_M']) if m is None else m
    system, solution = generate_instance(
        current_spec(), n, m,
        config['EXPERIMENT_DEG_A'] if deg_a is None else deg_a,
        config['EXPERIMENT_DF'] if df is None else df,
        config['EXPERIMENT_DG'] if dg is None else dg,
        seed=current_seed(),
        mode=generator or config['EXPERIMENT_GENERATOR'],
        min_points=min_points,
    )
    InstanceFormat().write(out, InstanceDocument(system, solution))
    click.echo('instance written to %s (df=%d, dg=%d)' % (out, solution.df, solution.dg))
