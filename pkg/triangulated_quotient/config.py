# coding=utf-8
"""Settings of a single command run."""
from .typing import int_in_range
from .rtstruct.axioms import ALL_LEVELS, PAIR_BUDGET, ISO_COMPLETION_SAMPLES
from .addcat.presentation import MORPHISM_BUDGET

COMMANDS = ('validate', 'axioms', 'mutation-check', 'quotient', 'report', 'catalog')
REPORT_FORMATS = ('text', 'json', 'markdown')
CONFIG_KEYS = ('type', 'command', 'input_path', 'rank_bound', 'n_max', 'levels',
               'output_path', 'report_format', 'seed', 'morphism_budget',
               'pair_budget', 'iso_completion_samples')


class RunConfig(object):
    """The settings of one run of a command.

    Identical settings, including the seed, give byte-identical reports.

    Args:
        command: Text for the command. Choose from validate, axioms,
            mutation-check, quotient, report, catalog.
        input_path: Optional text for the path to the input category file.
        rank_bound: Integer for the largest number of summands of objects that
            are quantified over. (Default: 2).
        n_max: Optional integer for the largest power of T in the
            factor-through-epic check. None uses the shift orbit of D. (Default: None).
        levels: An optional list of axiom levels. (Default: all levels).
        output_path: Optional text for the path where output is written. None
            writes to stdout. (Default: None).
        report_format: Text for the report format. Choose from text, json,
            markdown. (Default: text).
        seed: Integer seed for sampled searches. (Default: 0).

    Properties:
        * command
        * input_path
        * rank_bound
        * n_max
        * levels
        * output_path
        * report_format
        * seed
        * morphism_budget
        * pair_budget
        * iso_completion_samples
    """
    __slots__ = ('_command', '_input_path', '_rank_bound', '_n_max', '_levels',
                 '_output_path', '_report_format', '_seed', '_morphism_budget',
                 '_pair_budget', '_iso_completion_samples')

    def __init__(self, command, input_path=None, rank_bound=2, n_max=None,
                 levels=None, output_path=None, report_format='text', seed=0):
        self.command = command
        self.input_path = input_path
        self.rank_bound = rank_bound
        self.n_max = n_max
        self.levels = levels
        self.output_path = output_path
        self.report_format = report_format
        self.seed = seed
        self._morphism_budget = MORPHISM_BUDGET
        self._pair_budget = PAIR_BUDGET
        self._iso_completion_samples = ISO_COMPLETION_SAMPLES

    @classmethod
    def from_dict(cls, data):
        """Create a RunConfig from a dictionary.

        Args:
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "type": "RunConfig",
            "command": "axioms",
            "input_path": "nakayama4.json",
            "rank_bound": 2,
            "n_max": None,
            "levels": ["tr0", "tr1"],
            "output_path": None,
            "report_format": "text",
            "seed": 0,
            "morphism_budget": 16,
            "pair_budget": 120,
            "iso_completion_samples": 100
            }
        """
        assert data['type'] == 'RunConfig', \
            'Expected RunConfig. Got {}.'.format(data['type'])
        unknown = sorted(set(data) - set(CONFIG_KEYS))
        if unknown:
            raise ValueError('Unrecognized RunConfig keys: {}. Choose from {}.'.format(
                ', '.join(unknown), ', '.join(CONFIG_KEYS)))
        new_obj = cls(data['command'], data.get('input_path'),
                      data.get('rank_bound', 2), data.get('n_max'),
                      data.get('levels'), data.get('output_path'),
                      data.get('report_format', 'text'), data.get('seed', 0))
        if 'morphism_budget' in data:
            new_obj.morphism_budget = data['morphism_budget']
        if 'pair_budget' in data:
            new_obj.pair_budget = data['pair_budget']
        if 'iso_completion_samples' in data:
            new_obj.iso_completion_samples = data['iso_completion_samples']
        return new_obj

    @property
    def command(self):
        """Get or set text for the command of the run."""
        return self._command

    @command.setter
    def command(self, value):
        if value not in COMMANDS:
            raise ValueError('"{}" is not a recognized command. Choose from {}.'
                             .format(value, COMMANDS))
        self._command = value

    @property
    def input_path(self):
        return self._input_path

    @input_path.setter
    def input_path(self, value):
        self._input_path = None if value is None else str(value)

    @property
    def rank_bound(self):
        """Get or set an integer (>= 1) for the rank bound of the searches."""
        return self._rank_bound

    @rank_bound.setter
    def rank_bound(self, value):
        self._rank_bound = int_in_range(value, 1, None, 'rank_bound')

    @property
    def n_max(self):
        return self._n_max

    @n_max.setter
    def n_max(self, value):
        self._n_max = None if value is None else int_in_range(value, 1, None, 'n_max')

    @property
    def levels(self):
        """Get or set a tuple of axiom levels in canonical order."""
        return self._levels

    @levels.setter
    def levels(self, value):
        if value is None:
            self._levels = ALL_LEVELS
            return
        if isinstance(value, str):
            value = [v.strip() for v in value.split(',') if v.strip()]
        value = [v.lower() for v in value]
        for level in value:
            if level not in ALL_LEVELS:
                raise ValueError('"{}" is not a recognized axiom level. Choose '
                                 'from {}.'.format(level, ', '.join(ALL_LEVELS)))
        self._levels = tuple(lv for lv in ALL_LEVELS if lv in value)

    @property
    def output_path(self):
        return self._output_path

    @output_path.setter
    def output_path(self, value):
        self._output_path = None if value is None else str(value)

    @property
    def report_format(self):
        return self._report_format

    @report_format.setter
    def report_format(self, value):
        value = str(value).lower()
        if value not in REPORT_FORMATS:
            raise ValueError('"{}" is not a recognized report format. Choose from '
                             '{}.'.format(value, REPORT_FORMATS))
        self._report_format = value

    @property
    def seed(self):
        return self._seed

    @seed.setter
    def seed(self, value):
        assert isinstance(value, int), \
            'Expected integer for seed. Got {}.'.format(type(value))
        self._seed = value

    @property
    def morphism_budget(self):
        """Get or set the largest hom-space that is enumerated completely."""
        return self._morphism_budget

    @morphism_budget.setter
    def morphism_budget(self, value):
        self._morphism_budget = int_in_range(value, 1, None, 'morphism_budget')

    @property
    def pair_budget(self):
        """Get or set the largest number of triangle pairs of the pairwise axioms."""
        return self._pair_budget

    @pair_budget.setter
    def pair_budget(self, value):
        self._pair_budget = int_in_range(value, 1, None, 'pair_budget')

    @property
    def iso_completion_samples(self):
        return self._iso_completion_samples

    @iso_completion_samples.setter
    def iso_completion_samples(self, value):
        self._iso_completion_samples = \
            int_in_range(value, 1, None, 'iso_completion_samples')

    def parameters(self):
        """Get the settings that change the result of a run, for report headers."""
        return {
            'rank_bound': self._rank_bound,
            'n_max': 'orbit' if self._n_max is None else self._n_max,
            'seed': self._seed,
            'morphism_budget': self._morphism_budget,
            'pair_budget': self._pair_budget
        }

    def to_dict(self):
        """Get RunConfig as a dictionary."""
        return {
            'type': 'RunConfig',
            'command': self._command,
            'input_path': self._input_path,
            'rank_bound': self._rank_bound,
            'n_max': self._n_max,
            'levels': list(self._levels),
            'output_path': self._output_path,
            'report_format': self._report_format,
            'seed': self._seed,
            'morphism_budget': self._morphism_budget,
            'pair_budget': self._pair_budget,
            'iso_completion_samples': self._iso_completion_samples
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        return RunConfig.from_dict(self.to_dict())

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'RunConfig: {} {} (rank bound {}, seed {})'.format(
            self._command, self._input_path or '', self._rank_bound, self._seed)
