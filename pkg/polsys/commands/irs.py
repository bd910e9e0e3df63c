import click

from polsys.irs import IRSParams, reference_bounds, spr_trial_rate
from .manager import current_seed, current_spec, handle_errors, manager


@manager.command('irs')
@click.option('--n-c', 'n_c', type=int, required=True, help='Code length.')
@click.option('-k', 'k', type=int, required=True, help='Code dimension.')
@click.option('-r', 'r', type=int, default=1, help='Interleaving degree.')
@click.option('-e', 'e', type=int, required=True, help='Erroneous columns.')
@click.option('--trials', type=int, default=100)
@handle_errors
def irs(n_c, k, r, e, trials):
    """Decode random interleaved Reed-Solomon words with e column errors.

    Example:
    ::

        $ polsys --field "GF(2^4)" irs --n-c 16 -k 4 -r 3 -e 7 --trials 2000

    """
    params = IRSParams(current_spec(), n_c, k, r)
    reference = reference_bounds(params, e)
    result = spr_trial_rate(params, e, trials, seed=current_seed())
    click.echo('unique_radius=%d e_max_collab=%d' % (params.unique_radius, reference.e_max_collab))
    click.echo('p_spr=%.6g p_bms=%.6g' % (reference.p_spr, reference.p_bms))
    click.echo('trials=%d successes=%d failures=%d wrong=%d success_rate=%.6g' % (
        result.trials, result.successes, result.failures, result.wrong, result.success_rate))
