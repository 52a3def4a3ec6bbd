# coding=utf-8
import json
import os

import pytest
from click.testing import CliRunner

from triangulated_quotient.cli import main


@pytest.fixture(scope='module')
def nakayama4_file(tmp_path_factory):
    """Category file of nakayama_stable(4, 2) written by the catalog command."""
    path = str(tmp_path_factory.mktemp('cli') / 'nakayama4.json')
    result = CliRunner().invoke(
        main, ['catalog', 'nakayama', '--n', '4', '--p', '2', '-o', path])
    assert result.exit_code == 0
    return path


def test_catalog_nakayama(nakayama4_file):
    """Test that the catalog command writes a readable category file."""
    assert os.path.isfile(nakayama4_file)
    with open(nakayama4_file) as inf:
        data = json.load(inf)
    assert data['indecomposables'] == ['M1', 'M2', 'M3']
    assert data['catalog'] == {'kind': 'nakayama', 'n': 4, 'p': 2}
    assert data['triangles']


def test_catalog_to_stdout():
    """Test that the catalog command prints JSON without an output path."""
    runner = CliRunner()
    result = runner.invoke(main, ['catalog', 'a2-costable', '--p', '2'])
    assert result.exit_code == 0
    assert json.loads(result.output)['indecomposables'] == ['S2']

    result = runner.invoke(main, ['catalog', 'nakayama', '--n', '9'])
    assert result.exit_code == 1


def test_validate(nakayama4_file):
    """Test that the Nakayama category file validates."""
    runner = CliRunner()
    result = runner.invoke(main, ['validate', nakayama4_file, '-l', 'tr0,tr1'])
    assert result.exit_code == 0
    assert 'status: Pass' in result.output

    result = runner.invoke(main, ['validate', nakayama4_file, '-l', 'tr1',
                                  '-f', 'json'])
    assert result.exit_code == 0
    assert json.loads(result.output)['status'] == 'Pass'


def test_validate_quiver(tmp_path):
    """Test that the quiver fixture fails de-rotation with exit code 2."""
    path = str(tmp_path / 'a2.json')
    runner = CliRunner()
    result = runner.invoke(main, ['catalog', 'a2-costable', '-o', path])
    assert result.exit_code == 0
    result = runner.invoke(main, ['axioms', path, '-l', 'derotation'])
    assert result.exit_code == 2
    assert '[Fail] derotation' in result.output


def test_input_errors(tmp_path):
    """Test the exit codes of missing and malformed category files."""
    runner = CliRunner()
    result = runner.invoke(main, ['validate', str(tmp_path / 'missing.json')])
    assert result.exit_code == 2

    bad = tmp_path / 'bad.json'
    bad.write_text('{"format": 1,')
    result = runner.invoke(main, ['validate', str(bad)])
    assert result.exit_code == 1


def test_mutation_check(nakayama4_file):
    """Test the mutation-pair command on k[x]/(x^4) with D = add(M2)."""
    result = CliRunner().invoke(
        main, ['mutation-check', nakayama4_file, '--z', 'all', '--d', 'M2'])
    assert result.exit_code == 0
    assert 'verdict: mutation pair' in result.output
    assert 'witness triangles' in result.output


def test_quotient(nakayama4_file, tmp_path):
    """Test that the quotient by add(M2) is triangulated and can be reported."""
    out = str(tmp_path / 'quotient.json')
    runner = CliRunner()
    result = runner.invoke(
        main, ['quotient', nakayama4_file, '--z', 'all', '--d', 'M2', '--out', out])
    assert result.exit_code == 0
    assert 'verdict: triangulated' in result.output
    assert '[Pass] vanishing pullback' in result.output
    assert os.path.isfile(out)
    with open(out) as inf:
        data = json.load(inf)
    assert data['indecomposables'] == ['M1', 'M3']
    assert data['quotient']['d'] == ['M2']

    result = runner.invoke(main, ['report', out, '-l', 'tr0,tr1'])
    assert result.exit_code == 0
    assert 'Z = M1, M2, M3' in result.output


def test_quotient_hypothesis_failure(nakayama4_file):
    """Test that a failed hypothesis is named in the verdict."""
    result = CliRunner().invoke(
        main, ['quotient', nakayama4_file, '--z', 'M1', '--d', ''])
    assert result.exit_code == 2
    assert 'hypothesis failed: extension-closed' in result.output


def test_runs_are_deterministic(nakayama4_file):
    """Test that identical settings give identical reports."""
    runner = CliRunner()
    args = ['mutation-check', nakayama4_file, '--d', 'M2', '-s', '5', '-f', 'json']
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == 0
    assert first.output == second.output
