"""Commands that generate catalog category files."""
import sys
import logging
import click

from ..futil import write_path
from ..pipeline import run_catalog

_logger = logging.getLogger(__name__)


@click.group(help='Commands for generating catalog category files.')
def catalog():
    pass


def _write(cfile, out):
    text = cfile.to_text()
    if out:
        write_path(out, text)
    else:
        click.echo(text, nl=False)


@catalog.command('nakayama')
@click.option('--n', 'n', help='Nilpotency degree of x in k[x]/(x^n), from 2 to 6.',
              type=int, default=4, show_default=True)
@click.option('--p', 'p', help='Order of the prime field (2, 3 or 5).', type=int,
              default=2, show_default=True)
@click.option('--rank-bound', '-r', help='Rank bound of the triangulation.',
              type=int, default=2, show_default=True)
@click.option('--seed', '-s', help='Seed of the triangulation.', type=int,
              default=0, show_default=True)
@click.option('--out', '-o', help='Optional path to a file where the category will '
              'be written. By default, it is printed to stdout.', type=str, default=None)
def nakayama(n, p, rank_bound, seed, out):
    """Get the stable category of k[x]/(x^n) over F_p with its standard triangles."""
    try:
        _write(run_catalog('nakayama', n, p, rank_bound, seed), out)
    except Exception as e:
        _logger.exception('Nakayama fixture failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)


@catalog.command('a2-costable')
@click.option('--p', 'p', help='Order of the prime field (2, 3 or 5).', type=int,
              default=2, show_default=True)
@click.option('--rank-bound', '-r', help='Rank bound of the triangulation.',
              type=int, default=2, show_default=True)
@click.option('--seed', '-s', help='Seed of the triangulation.', type=int,
              default=0, show_default=True)
@click.option('--out', '-o', help='Optional path to a file where the category will '
              'be written. By default, it is printed to stdout.', type=str, default=None)
def a2_costable(p, rank_bound, seed, out):
    """Get the injectively stable category of the quiver 1 -> 2 over F_p."""
    try:
        _write(run_catalog('a2_costable', None, p, rank_bound, seed), out)
    except Exception as e:
        _logger.exception('Quiver fixture failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)
