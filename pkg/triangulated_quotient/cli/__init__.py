"""triangulated-quotient command line interface.

Exit codes are 0 when every check passes, 1 for input or parse errors, 2 when
a check finds a violation and 3 when checks are only undecided.
"""
import sys
import logging
import click

from ..config import RunConfig, REPORT_FORMATS
from ..futil import write_path
from ..pipeline import run_validate, run_axioms, run_mutation_check, run_quotient, \
    run_report
from .catalog import catalog

_logger = logging.getLogger(__name__)


def _set_verbosity(ctx, param, value):
    level = {0: logging.WARNING, 1: logging.INFO}.get(value, logging.DEBUG)
    logging.basicConfig(format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger('triangulated_quotient').setLevel(level)


@click.group()
@click.version_option()
@click.option('--verbose', '-v', count=True, expose_value=False, is_eager=True,
              callback=_set_verbosity, help='Lower the log level. Repeat for debug '
              'messages.')
def main():
    pass


def emit(text, output_path=None):
    """Write text to a file atomically or, if no path is given, to stdout."""
    if output_path:
        write_path(output_path, text)
    else:
        click.echo(text, nl=False)


_category_file = click.argument(
    'category-file', type=click.Path(exists=True, file_okay=True, dir_okay=False,
                                     resolve_path=True))
_rank_bound = click.option(
    '--rank-bound', '-r', help='Largest number of summands of the objects that '
    'checks quantify over.', type=int, default=2, show_default=True)
_n_max = click.option(
    '--n-max', help='Largest power of the shift in the factor-through-epic check. '
    'By default, the length of the shift orbit of D.', type=int, default=None)
_levels = click.option(
    '--levels', '-l', help='Comma-separated axiom levels (tr0, tr1, tr2, tr3, tr4, '
    'tr5, exactness, derotation, iso_completion). By default, all of them.',
    type=str, default=None)
_seed = click.option(
    '--seed', '-s', help='Seed for sampled searches.', type=int, default=0,
    show_default=True)
_format = click.option(
    '--format', '-f', 'report_format', help='Format of the report.',
    type=click.Choice(REPORT_FORMATS), default='text', show_default=True)
_out = click.option(
    '--out', '-o', help='Optional path to a file where the report will be written. '
    'By default, it is printed to stdout.', type=str, default=None)
_z = click.option(
    '--z', 'z_text', help='The subcategory Z as comma-separated indecomposables, a '
    'subcategory name of the file or "all".', type=str, default='all',
    show_default=True)
_d = click.option(
    '--d', 'd_text', help='The subcategory D as comma-separated indecomposables or a '
    'subcategory name of the file. By default, the zero subcategory.',
    type=str, default='')


@main.command('validate')
@_category_file
@_rank_bound
@_n_max
@_levels
@_seed
@_format
@_out
def validate(category_file, rank_bound, n_max, levels, seed, report_format, out):
    """Validate a category file and run the axiom checks on its triangles.

    \b
    Args:
        category_file: Full path to a category JSON file.
    """
    try:
        config = RunConfig('validate', category_file, rank_bound, n_max, levels,
                           out, report_format, seed)
        report = run_validate(config)
        emit(report.render(config.report_format), config.output_path)
    except Exception as e:
        _logger.exception('Category validation failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(report.exit_code)


@main.command('axioms')
@_category_file
@_rank_bound
@_levels
@_seed
@_format
@_out
def axioms(category_file, rank_bound, levels, seed, report_format, out):
    """Check the axioms of a right triangulated category on a category file.

    \b
    Args:
        category_file: Full path to a category JSON file with triangles.
    """
    try:
        config = RunConfig('axioms', category_file, rank_bound, None, levels,
                           out, report_format, seed)
        report = run_axioms(config)
        emit(report.render(config.report_format), config.output_path)
    except Exception as e:
        _logger.exception('Axiom check failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(report.exit_code)


@main.command('mutation-check')
@_category_file
@_z
@_d
@_rank_bound
@_n_max
@_seed
@_format
@_out
def mutation_check(category_file, z_text, d_text, rank_bound, n_max, seed,
                   report_format, out):
    """Decide whether (Z, Z) is a D-mutation pair and list the witness triangles.

    \b
    Args:
        category_file: Full path to a category JSON file with triangles.
    """
    try:
        config = RunConfig('mutation-check', category_file, rank_bound, n_max, None,
                           out, report_format, seed)
        report = run_mutation_check(config, z_text, d_text)
        emit(report.render(config.report_format), config.output_path)
    except Exception as e:
        _logger.exception('Mutation check failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(report.exit_code)


@main.command('quotient')
@_category_file
@_z
@_d
@_rank_bound
@_n_max
@_levels
@_seed
@_format
@click.option('--out', '-o', help='Optional path to a file where the quotient '
              'category will be written.', type=str, default=None)
@click.option('--report-file', help='Optional path to a file where the report will '
              'be written. By default, it is printed to stdout.', type=str,
              default=None)
def quotient(category_file, z_text, d_text, rank_bound, n_max, levels, seed,
             report_format, out, report_file):
    """Build the quotient Z/D with its induced shift and triangles.

    The report ends with the verdict right-triangulated, triangulated or the
    first hypothesis that failed.

    \b
    Args:
        category_file: Full path to a category JSON file with triangles.
    """
    try:
        config = RunConfig('quotient', category_file, rank_bound, n_max, levels,
                           report_file, report_format, seed)
        report, result = run_quotient(config, z_text, d_text)
        if result is not None and out:
            write_path(out, result.to_text())
        emit(report.render(config.report_format), config.output_path)
    except Exception as e:
        _logger.exception('Quotient construction failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(report.exit_code)


@main.command('report')
@_category_file
@_rank_bound
@_levels
@_seed
@click.option('--format', '-f', 'report_format', help='Format of the report.',
              type=click.Choice(REPORT_FORMATS), default='markdown', show_default=True)
@_out
def report(category_file, rank_bound, levels, seed, report_format, out):
    """Summarize a category file with hom dimensions, triangles and verdicts.

    \b
    Args:
        category_file: Full path to a category JSON file.
    """
    try:
        config = RunConfig('report', category_file, rank_bound, None, levels,
                           out, report_format, seed)
        summary = run_report(config)
        emit(summary.render(config.report_format), config.output_path)
    except Exception as e:
        _logger.exception('Report failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(summary.exit_code)


main.add_command(catalog)

if __name__ == "__main__":
    main()
