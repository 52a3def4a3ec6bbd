# coding=utf-8
import pytest

from triangulated_quotient.config import RunConfig
from triangulated_quotient.rtstruct.axioms import ALL_LEVELS


def test_run_config_init():
    """Test the initialization of RunConfig and basic properties."""
    config = RunConfig('axioms', 'nakayama4.json')
    str(config)  # test the string representation

    assert config.command == 'axioms'
    assert config.input_path == 'nakayama4.json'
    assert config.rank_bound == 2
    assert config.n_max is None
    assert config.levels == ALL_LEVELS
    assert config.output_path is None
    assert config.report_format == 'text'
    assert config.seed == 0
    assert config.morphism_budget == 16


def test_run_config_setters():
    """Test that invalid settings are rejected."""
    config = RunConfig('validate')
    config.report_format = 'JSON'
    assert config.report_format == 'json'

    with pytest.raises(ValueError):
        RunConfig('draw')
    with pytest.raises(ValueError):
        config.report_format = 'html'
    with pytest.raises(AssertionError):
        config.rank_bound = 0
    with pytest.raises(AssertionError):
        config.n_max = 0
    with pytest.raises(AssertionError):
        config.seed = 1.5
    with pytest.raises(ValueError):
        config.levels = ['tr0', 'tr9']
    config.levels = 'iso_completion'
    assert config.levels == ('iso_completion',)


def test_levels_are_ordered():
    """Test that axiom levels are parsed and put in canonical order."""
    config = RunConfig('axioms', levels='tr3, TR0,tr1')
    assert config.levels == ('tr0', 'tr1', 'tr3')
    config.levels = ['exactness', 'tr0']
    assert config.levels[0] == 'tr0'
    assert set(config.levels) == {'tr0', 'exactness'}


def test_run_config_to_from_dict():
    """Test the round trip of RunConfig through its dictionary."""
    config = RunConfig('quotient', 'in.json', rank_bound=1, n_max=3,
                       levels='tr1', output_path='out.json', report_format='markdown',
                       seed=7)
    config.pair_budget = 10
    config_dict = config.to_dict()
    assert config_dict['type'] == 'RunConfig'
    assert config_dict['levels'] == ['tr1']
    new_config = RunConfig.from_dict(config_dict)
    assert new_config.to_dict() == config_dict
    assert config.duplicate().to_dict() == config_dict

    with pytest.raises(ValueError):
        RunConfig.from_dict(dict(config_dict, samples=100))
    new_config = RunConfig.from_dict(dict(config_dict, iso_completion_samples=7))
    assert new_config.iso_completion_samples == 7


def test_parameters():
    """Test the parameters that are printed in report headers."""
    config = RunConfig('mutation-check', seed=3)
    params = config.parameters()
    assert params['seed'] == 3
    assert params['n_max'] == 'orbit'
    assert params['rank_bound'] == 2
    config.n_max = 2
    assert config.parameters()['n_max'] == 2
