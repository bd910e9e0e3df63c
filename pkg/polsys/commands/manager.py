import functools
import sys

import click
from flask import current_app
from flask.cli import ScriptInfo

from polsys.algebra.field import FieldSpec
from polsys.errors import PolsysError
from polsys.factory import get_app
from polsys.logging import set_quiet


class CommandError(click.ClickException):
    """Usage or parse error, exit code 2."""

    exit_code = 2


@click.group()
@click.option('--seed', type=int, default=None, help='Master seed, defaults to DEFAULT_SEED.')
@click.option('--field', default=None, help='Field such as "GF(2^4;1,1,0,0,1)" or "GF(101)".')
@click.option('--quiet', is_flag=True, default=False, help='Only log warnings.')
@click.pass_context
def manager(ctx, seed, field, quiet):
    """Polynomial linear systems with erroneous evaluations."""
    info = ctx.find_object(ScriptInfo)
    app = info.load_app() if info is not None else get_app()
    if seed is not None:
        app.config['DEFAULT_SEED'] = seed
    if field is not None:
        app.config['DEFAULT_FIELD'] = field
    app.config['QUIET'] = quiet
    set_quiet(quiet)
    ctx.with_resource(app.app_context())


def handle_errors(f):
    """Report :class:`PolsysError` as a command error."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except PolsysError as error:
            raise CommandError(str(error))
    return wrapper


def current_spec():
    return FieldSpec.parse(current_app.config['DEFAULT_FIELD'])


def current_seed():
    return current_app.config['DEFAULT_SEED']


def cli_main(argv=None) -> int:
    """Run a command, return 0 on success, 1 on decoding failure and 2 on usage errors."""
    try:
        rv = manager.main(args=argv, prog_name='polsys', standalone_mode=False)
    except click.ClickException as error:
        error.show()
        return error.exit_code
    except click.exceptions.Exit as error:
        return error.exit_code
    except click.Abort:
        click.echo('Aborted!', err=True)
        return 1
    return rv if isinstance(rv, int) else 0


def main():
    sys.exit(cli_main(sys.argv[1:]))
