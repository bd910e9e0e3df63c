import click

from polsys.algebra.poly import format_poly
from polsys.decoders import DECODERS, get_decoder
from polsys.errors import UsageError
from polsys.formats import SamplesFormat
from .manager import current_seed, handle_errors, manager


def format_solution(solution):
    lines = ['F %d : %s' % (i, format_poly(f)) for i, f in enumerate(solution.f)]
    lines.append('G : %s' % format_poly(solution.g))
    return '\n'.join(lines)


@manager.command('solve')
@click.argument('samples', type=click.Path(exists=True, dir_okay=False))
@click.option('--method', type=click.Choice(sorted(DECODERS)), default='glz')
@click.option('--df', type=int, default=None, help='Numerator degree bound, defaults to the SOLUTION block.')
@click.option('--dg', type=int, default=None, help='Denominator degree, defaults to the SOLUTION block.')
@click.option('-e', 'e', type=int, default=None, help='Error bound, defaults to the ERRORS line.')
@click.pass_context
@handle_errors
def solve(ctx, samples, method, df, dg, e):
    """Decode a samples file, exit code 1 when decoding fails.

    Example:
    ::

        $ polsys solve system.samples --method bk -e 2

    """
    document = SamplesFormat().read(samples)
    known = document.solution
    if df is None or dg is None:
        if known is None:
            raise UsageError('--df and --dg are required without a SOLUTION block')
        df = max(known.df, 0) if df is None else df
        dg = known.dg if dg is None else dg
    if e is None:
        if document.errors is None:
            raise UsageError('-e is required without an ERRORS line')
        e = len(document.errors)

    kwargs = {'rng': current_seed()} if method == 'glz' else {}
    outcome = get_decoder(method)(document.outputs, document.n, df, dg, e, **kwargs)
    if not outcome:
        click.echo('FAIL %s' % outcome.reason.value)
        ctx.exit(1)
    click.echo(format_solution(outcome.solution))
    if known is not None and outcome.solution != known:
        click.echo('decoded solution differs from the SOLUTION block', err=True)
