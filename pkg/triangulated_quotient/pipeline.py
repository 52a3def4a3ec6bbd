# coding=utf-8
"""Runners behind the command line: each one takes a RunConfig and returns a Report."""
from __future__ import division
import itertools
import logging
import os

from .addcat.obj import Obj
from .addcat.functor import functor_full_on, functor_faithful_on
from .addcat.presentation import validate_presentation
from .rtstruct.axioms import check_axioms
from .approx import verify_mutation_pair
from .report import Report, CheckResult
from .catfile import CategoryFile, CategoryFileError
from .catalog import nakayama_stable, a2_costable, tau_orbit, CATALOG_KINDS
from .quotient import check_hypotheses, build_quotient, induced_triangulation, \
    check_sigma_equivalence, check_degeneration, check_vanishing_pullback

_logger = logging.getLogger(__name__)
RIGHT_TRIANGULATED = 'right-triangulated'
TRIANGULATED = 'triangulated'


def load_category(config):
    """Load the category file named by a RunConfig."""
    if config.input_path is None:
        raise CategoryFileError('No input category file was given.')
    return CategoryFile.from_file(config.input_path, config.rank_bound, config.seed)


def _triangulation(cfile):
    if cfile.triangulation is None:
        raise CategoryFileError('The category file has no "triangles" or "catalog" '
                                'entry.')
    return cfile.triangulation


def _title(command, config):
    name = os.path.basename(config.input_path) if config.input_path else 'catalog'
    return '{} {}'.format(command, name)


def _add_axioms(report, triangulation, config):
    axioms = check_axioms(
        triangulation, config.levels, config.morphism_budget, config.pair_budget,
        config.iso_completion_samples, config.seed)
    for chk in axioms.checks:
        report.add_check(chk)


def hom_table_lines(category, names=None):
    """Get markdown table lines with the hom dimensions between indecomposables."""
    names = category.indecomposables if names is None else names
    if not names:
        return ['(zero category)']
    lines = ['| Hom | {} |'.format(' | '.join(names)),
             '|---|{}'.format('---|' * len(names))]
    for x in names:
        dims = [str(category.hom_dim_names(x, y)) for y in names]
        lines.append('| {} | {} |'.format(x, ' | '.join(dims)))
    return lines


def shift_lines(category):
    """Get text lines describing the shift on objects and its fullness and faithfulness."""
    shift = category.shift
    if shift is None:
        return ['no shift functor']
    names = category.indecomposables
    lines = ['T {} = {}'.format(x, shift.image(x) if not shift.image(x).is_zero
                                else '0') for x in names]
    pairs = [(Obj((x,)), Obj((y,))) for x, y in itertools.product(names, repeat=2)]
    for label, test in (('full', functor_full_on), ('faithful', functor_faithful_on)):
        failures = []
        ok = test(shift, pairs, category, failures=failures)
        lines.append('T {}: {}'.format(label, 'yes' if ok else 'no, fails on Hom({}, {})'
                                       .format(*failures[0])))
    return lines


def triangle_lines(triangulation):
    """Get text lines listing the generating triangles of a triangulation."""
    lines = ['{} generating triangles, rank bound {}, cone builder: {}'.format(
        len(triangulation), triangulation.rank_bound,
        'yes' if triangulation.cone_builder is not None else 'no')]
    for tri in triangulation:
        lines.append('{} -> {} -> {} -> T{}'.format(tri.A, tri.B, tri.C, tri.A))
    return lines


def run_validate(config):
    """Validate the presentation of a category file and run its axiom checks."""
    cfile = load_category(config)
    report = Report(_title('validate', config), config.parameters())
    report.add_check(validate_presentation(cfile.category))
    report.add_section('shift', shift_lines(cfile.category))
    if cfile.triangulation is not None:
        _add_axioms(report, cfile.triangulation, config)
    else:
        report.add_check(CheckResult.skipped('axioms', 'no triangles in the file'))
    return report


def run_axioms(config):
    """Run the selected axiom levels on the triangulation of a category file."""
    cfile = load_category(config)
    report = Report(_title('axioms', config), config.parameters())
    report.parameters['levels'] = ','.join(config.levels)
    _add_axioms(report, _triangulation(cfile), config)
    return report


def _decision_check(name, decision, code, element_id):
    result = CheckResult(name)
    result.add_decision(decision, code, 'Hypothesis', 'Subcategory', element_id,
                        '{}:'.format(name))
    return result


def run_mutation_check(config, z_text='all', d_text=''):
    """Decide whether (Z, Z) is a D-mutation pair and list the witness triangles."""
    cfile = load_category(config)
    triangulation = _triangulation(cfile)
    z_sub, d_sub = cfile.subcat(z_text), cfile.subcat(d_text)
    report = Report(_title('mutation-check', config), config.parameters())
    report.parameters['z'] = ','.join(z_sub.members)
    report.parameters['d'] = ','.join(d_sub.members)
    decisions = check_hypotheses(z_sub, d_sub, triangulation, 'pair',
                                 config.morphism_budget, config.seed, config.n_max)
    failed = None
    for name, decision in decisions:
        report.add_check(_decision_check(name, decision, '030003', str(d_sub)))
        if name == 'mutation pair' and decision.is_yes:
            report.add_section('witness triangles', decision.witness.to_text())
        if failed is None and not decision.is_yes:
            failed = name
    provenance = cfile.category.provenance or {}
    if provenance.get('kind') == 'nakayama':
        images, fixed = tau_orbit(provenance['n'], provenance['p'])
        report.add_section('tau = syzygy squared', ['tau {} = {}'.format(k, v)
                                                    for k, v in sorted(images.items())]
                           + ['tau fixes every indecomposable: {}'.format(
                               'yes' if fixed else 'no')])
    report.verdict = 'mutation pair' if failed is None else \
        'hypothesis failed: {}'.format(failed)
    return report


def run_quotient(config, z_text='all', d_text=''):
    """Build the quotient Z/D, check it and decide whether it is triangulated.

    The hypotheses of the right triangulated quotient are checked in order
    and the first failure ends the run. Otherwise the quotient, its induced
    triangulation and the axiom checks on it are computed. The quotient is
    triangulated when (Z, Z) is a D-mutation pair, T is full on Z and sigma is
    an equivalence.

    Returns:
        A tuple with the Report and a CategoryFile of the quotient, which is
        None when a hypothesis fails.
    """
    cfile = load_category(config)
    triangulation = _triangulation(cfile)
    base = cfile.category
    z_sub, d_sub = cfile.subcat(z_text), cfile.subcat(d_text)
    report = Report(_title('quotient', config), config.parameters())
    report.parameters['z'] = ','.join(z_sub.members)
    report.parameters['d'] = ','.join(d_sub.members)
    for name, decision in check_hypotheses(z_sub, d_sub, triangulation, 'right',
                                           config.morphism_budget, config.seed,
                                           config.n_max):
        report.add_check(_decision_check(name, decision, '040003', str(d_sub)))
        if not decision.is_yes:
            report.verdict = 'hypothesis failed: {}'.format(name)
            return report, None

    quotient = build_quotient(base, z_sub, d_sub, triangulation, check=False)
    category = quotient.category
    report.add_check(validate_presentation(category))
    induced = induced_triangulation(quotient, triangulation, config.morphism_budget,
                                    config.seed)
    _add_axioms(report, induced, config)
    report.add_check(check_degeneration(quotient))
    report.add_check(check_vanishing_pullback(
        quotient, triangulation, config.morphism_budget, seed=config.seed))
    report.add_section('quotient indecomposables',
                       [', '.join(quotient.survivors) or '(none)'])
    report.add_section('quotient hom dimensions', hom_table_lines(category))
    report.add_section('sigma', shift_lines(category))

    equivalence = CheckResult('sigma equivalence')
    pair = verify_mutation_pair(z_sub, d_sub, triangulation)
    triangulated = False
    if not pair.is_yes:
        equivalence = CheckResult.skipped(
            'sigma equivalence', 'not a mutation pair: {}'.format(pair.reason))
    else:
        decision = check_sigma_equivalence(quotient, triangulation)
        equivalence.add_decision(decision, '040004', 'Equivalence', 'Functor',
                                 'sigma', 'sigma is not an equivalence:')
        triangulated = decision.is_yes
        if decision.is_no and decision.reason.startswith('hypothesis failed'):
            equivalence = CheckResult.skipped('sigma equivalence', decision.reason)
    report.add_check(equivalence)
    if report.status == 'Pass':
        report.verdict = TRIANGULATED if triangulated else RIGHT_TRIANGULATED
    _logger.info('quotient %s / %s: %s', z_sub, d_sub, report.verdict or report.status)

    sidecar = quotient.to_dict()['quotient']
    out = CategoryFile(category, induced, quotient=sidecar)
    return report, out


def run_report(config):
    """Summarize a category file: hom dimensions, triangles and verdicts."""
    cfile = load_category(config)
    category = cfile.category
    report = Report(_title('report', config), config.parameters())
    report.add_section('indecomposables', [', '.join(category.indecomposables)])
    report.add_section('hom dimensions', hom_table_lines(category))
    report.add_section('shift', shift_lines(category))
    report.add_check(validate_presentation(category))
    if cfile.triangulation is not None:
        report.add_section('triangles', triangle_lines(cfile.triangulation))
        _add_axioms(report, cfile.triangulation, config)
    if cfile.subcats:
        report.add_section('subcategories', ['{}: {}'.format(k, v) for k, v in
                                             sorted(cfile.subcats.items())])
    if cfile.quotient is not None:
        report.add_section('quotient of', [
            'Z = {}'.format(', '.join(cfile.quotient['z'])),
            'D = {}'.format(', '.join(cfile.quotient['d']) or '0')])
    if report.status == 'Pass' and cfile.triangulation is not None:
        report.verdict = RIGHT_TRIANGULATED
    return report


def run_catalog(kind, n=None, p=2, rank_bound=2, seed=0):
    """Generate a catalog fixture as a CategoryFile.

    Args:
        kind: Text for the fixture. Choose from nakayama, a2_costable.
        n: Integer for the nilpotency degree of the Nakayama fixture.
        p: The prime field order. (Default: 2).
        rank_bound: Integer for the rank bound of the triangulation. (Default: 2).
        seed: Integer seed of the triangulation. (Default: 0).
    """
    if kind == 'nakayama':
        category, triangulation = nakayama_stable(n, p, rank_bound, seed)
    elif kind == 'a2_costable':
        category, triangulation = a2_costable(p, rank_bound, seed)
    else:
        raise ValueError('"{}" is not a recognized catalog fixture. Choose from {}.'
                         .format(kind, CATALOG_KINDS))
    return CategoryFile(category, triangulation)
