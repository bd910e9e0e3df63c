import click

from polsys.decoders.bounds import l_bk, l_glz, l_star, p_bms, p_glz
from .manager import current_spec, handle_errors, manager


@manager.command('bounds')
@click.option('-n', 'n', type=int, required=True, help='Unknowns.')
@click.option('--df', type=int, required=True)
@click.option('--dg', type=int, required=True)
@click.option('-e', 'e', type=int, required=True)
@click.option('-t', 't', type=int, default=0, help='Rank drops allowed by the deterministic count.')
@click.option('-r', 'r', type=int, default=None, help='Interleaving degree for p_bms, defaults to n.')
@handle_errors
def bounds(n, df, dg, e, t, r):
    """Print the point counts and failure bounds.

    Example:
    ::

        $ polsys --field "GF(2^4;1,1,0,0,1)" bounds -n 3 --df 2 --dg 2 -e 5

    """
    q = current_spec().order
    click.echo('L_GLZ=%d' % l_glz(n, df, dg, e))
    click.echo('L_BK=%d' % l_bk(df, dg, e, t))
    click.echo('L*=%d' % l_star(n, df, dg, e))
    click.echo('p_glz=%.6g' % p_glz(q, dg, e))
    click.echo('p_bms=%.6g' % p_bms(q, r or n))
