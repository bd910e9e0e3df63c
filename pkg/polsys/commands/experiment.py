import click
from flask import current_app

from polsys.algebra.field import FieldSpec
from polsys.decoders import DECODERS
from polsys.experiments import L_MODES, ExperimentConfig, experiment_grid, format_result, run_experiment, write_result
from polsys.signals import system_finished
from polsys.system import GENERATORS
from .manager import current_seed, current_spec, handle_errors, manager


def report_progress(cfg, index, failures, wrong):
    click.echo('  system %d/%d: %d failures' % (index + 1, cfg.systems, failures), err=True)


@manager.command('experiment')
@click.option('--grid-field', 'fields', multiple=True, help='Field of a grid row, repeatable.')
@click.option('--mode', 'modes', multiple=True, type=click.Choice(L_MODES), help='Point count mode, repeatable.')
@click.option('-e', 'errors', multiple=True, type=int, help='Error count, repeatable.')
@click.option('-L', 'L', type=int, default=None, help='Point count of the explicit mode.')
@click.option('-n', 'n', type=int, default=None)
@click.option('-m', 'm', type=int, default=None)
@click.option('--deg-a', type=int, default=None)
@click.option('--df', type=int, default=None)
@click.option('--dg', type=int, default=None)
@click.option('--systems', type=int, default=None)
@click.option('--trials', type=int, default=None)
@click.option('--method', type=click.Choice(sorted(DECODERS)), default='glz')
@click.option('--generator', type=click.Choice(GENERATORS), default=None)
@click.option('--adversarial', is_flag=True, default=False)
@click.option('--workers', type=int, default=None)
@click.option('--timing', is_flag=True, default=False, help='Record the wall time in the ms column.')
@click.option('--out', required=True, type=click.Path(dir_okay=False, writable=True))
@handle_errors
def experiment(fields, modes, errors, L, n, m, deg_a, df, dg, systems, trials, method, generator, adversarial,
               workers, timing, out):
    """Run failure rate experiments over a grid and append one csv row each.

    Example:
    ::

        $ polsys --seed 7 experiment --grid-field "GF(2^4)" --grid-field "GF(2^5)" --grid-field "GF(2^6)" \\
              --mode glz --mode star --out table.csv

    """
    config = current_app.config

    def setting(value, key):
        return config[key] if value is None else value

    n = setting(n, 'EXPERIMENT_N')
    base = ExperimentConfig(
        spec=current_spec(),
        n=n,
        m=max(n, config['EXPERIMENT_M']) if m is None else m,
        deg_a=setting(deg_a, 'EXPERIMENT_DEG_A'),
        df=setting(df, 'EXPERIMENT_DF'),
        dg=setting(dg, 'EXPERIMENT_DG'),
        e=errors[0] if errors else config['EXPERIMENT_ERRORS'],
        l_mode='explicit' if L else (modes[0] if modes else 'glz'),
        explicit_L=L,
        systems=setting(systems, 'EXPERIMENT_SYSTEMS'),
        trials=setting(trials, 'EXPERIMENT_TRIALS'),
        seed=current_seed(),
        method=method,
        generator=setting(generator, 'EXPERIMENT_GENERATOR'),
        adversarial=adversarial,
        workers=setting(workers, 'EXPERIMENT_WORKERS'),
        verify=config['VERIFY_SOLUTIONS'],
    )
    configs = experiment_grid(base, [FieldSpec.parse(text) for text in fields], () if L else modes, errors)
    timing = timing or config['EXPERIMENT_RECORD_TIMING']

    for cfg in configs:
        if config.get('QUIET'):
            result = run_experiment(cfg, timing=timing)
        else:
            with system_finished.connected_to(report_progress):
                result = run_experiment(cfg, timing=timing)
        write_result(out, result, config['CSV_COLUMNS'])
        click.echo(format_result(result, config['CSV_COLUMNS']))
