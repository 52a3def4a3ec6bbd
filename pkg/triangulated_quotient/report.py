# coding=utf-8
"""Check results and reports shared by the presentation, axiom and quotient checks."""
from __future__ import division
import json

from .decision import serialize_witness
from .futil import write_atomic

STATUSES = ('Pass', 'Fail', 'Undecided', 'Skipped')
EXIT_CODES = {'Pass': 0, 'Skipped': 0, 'Fail': 2, 'Undecided': 3}


def validation_error(code, error_type, element_type, element_id, message,
                     witness=None):
    """Get a dictionary describing a single violation.

    Args:
        code: Text for the 6-digit code of the violation.
        error_type: Text for the short name of the violated property.
        element_type: Text for the kind of element that violates the property
            (eg. Triangle, Morphism, Object).
        element_id: Text to identify the element.
        message: Text for a human readable description of the violation.
        witness: An optional object with a to_dict method (or a list or
            dictionary of them) that exhibits the violation.

    Returns:
        A dictionary with the violation.
    """
    err = {
        'type': 'ValidationError',
        'code': code,
        'error_type': error_type,
        'element_type': element_type,
        'element_id': str(element_id),
        'message': message
    }
    if witness is not None:
        err['witness'] = serialize_witness(witness)
    return err


def _witness_key(err):
    return (json.dumps(err.get('witness'), sort_keys=True),
            err['element_id'], err['message'])


class CheckResult(object):
    """The outcome of a single check over a finite set of cases.

    Args:
        name: Text for the name of the check (eg. tr3, exactness).

    Properties:
        * name
        * status
        * violations
        * undecided
        * checked
        * exhaustive
        * notes
    """
    __slots__ = ('_name', '_violations', '_undecided', '_checked', '_exhaustive',
                 '_notes', '_skipped')

    def __init__(self, name):
        self._name = str(name)
        self._violations = []
        self._undecided = []
        self._checked = 0
        self._exhaustive = True
        self._notes = []
        self._skipped = False

    @classmethod
    def skipped(cls, name, reason):
        """Get a CheckResult for a check that was not run."""
        result = cls(name)
        result._skipped = True
        result.note(reason)
        return result

    @classmethod
    def from_dict(cls, data):
        """Create a CheckResult from a dictionary."""
        result = cls(data['name'])
        result._violations = list(data.get('violations', []))
        result._undecided = list(data.get('undecided', []))
        result._checked = data.get('checked', 0)
        result._exhaustive = data.get('exhaustive', True)
        result._notes = list(data.get('notes', []))
        result._skipped = data.get('status') == 'Skipped'
        return result

    @property
    def name(self):
        return self._name

    @property
    def status(self):
        """Get text for the status of the check (Pass, Fail, Undecided, Skipped)."""
        if self._violations:
            return 'Fail'
        if self._undecided:
            return 'Undecided'
        return 'Skipped' if self._skipped else 'Pass'

    @property
    def violations(self):
        """Get a list of violation dictionaries sorted by witness."""
        return sorted(self._violations, key=_witness_key)

    @property
    def undecided(self):
        """Get a list of dictionaries for cases that could not be decided."""
        return sorted(self._undecided, key=_witness_key)

    @property
    def checked(self):
        """Get the number of cases that were checked."""
        return self._checked

    @property
    def exhaustive(self):
        """Get or set a boolean for whether every case within the bounds was searched."""
        return self._exhaustive

    @exhaustive.setter
    def exhaustive(self, value):
        self._exhaustive = bool(value)

    @property
    def notes(self):
        return tuple(self._notes)

    def count(self, number=1):
        self._checked += number

    def note(self, text):
        if text not in self._notes:
            self._notes.append(text)

    def add_violation(self, code, error_type, element_type, element_id, message,
                      witness=None):
        """Add a violation to this result."""
        self._violations.append(validation_error(
            code, error_type, element_type, element_id, message, witness))

    def add_undecided(self, code, error_type, element_type, element_id, message,
                      witness=None):
        """Add a case that could not be decided within the search budget."""
        self._exhaustive = False
        self._undecided.append(validation_error(
            code, error_type, element_type, element_id, message, witness))

    def add_decision(self, decision, code, error_type, element_type, element_id,
                     message, witness=None):
        """Record a Decision where No is a violation and Undecided is undecided.

        The witness of the record is the given witness or, if None, the
        witness of the decision.
        """
        self.count()
        witness = decision.witness if witness is None else witness
        if decision.is_no:
            self.add_violation(code, error_type, element_type, element_id,
                               '{} {}'.format(message, decision.reason or '').strip(),
                               witness)
        elif decision.is_undecided:
            self.add_undecided(code, error_type, element_type, element_id,
                               '{} {}'.format(message, decision.reason or '').strip(),
                               witness)

    def merge(self, other):
        """Add the cases of another CheckResult to this one."""
        self._violations.extend(other._violations)
        self._undecided.extend(other._undecided)
        self._checked += other._checked
        self._exhaustive = self._exhaustive and other._exhaustive
        for note in other._notes:
            self.note(note)

    def to_dict(self):
        """Get CheckResult as a dictionary."""
        return {
            'type': 'CheckResult',
            'name': self._name,
            'status': self.status,
            'checked': self._checked,
            'exhaustive': self._exhaustive,
            'violations': self.violations,
            'undecided': self.undecided,
            'notes': list(self._notes)
        }

    def to_text(self):
        """Get a list of text lines describing this result."""
        scope = 'exhaustive' if self._exhaustive else 'sampled'
        lines = ['[{}] {} ({} cases, {})'.format(
            self.status, self._name, self._checked, scope)]
        for err in self.violations:
            lines.append('  {} {}: {}'.format(err['code'], err['element_id'],
                                              err['message']))
            if 'witness' in err:
                lines.append('    witness: {}'.format(
                    json.dumps(err['witness'], sort_keys=True)))
        for err in self.undecided:
            lines.append('  undecided {}: {}'.format(err['element_id'], err['message']))
        for note in self._notes:
            lines.append('  note: {}'.format(note))
        return lines

    def __bool__(self):
        return self.status in ('Pass', 'Skipped')

    __nonzero__ = __bool__

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'CheckResult: {} [{}]'.format(self._name, self.status)


class Report(object):
    """A titled collection of CheckResults with the parameters that produced them.

    Args:
        title: Text for the title of the report.
        parameters: A dictionary of the parameters of the run (eg. rank_bound, seed).
        checks: An optional list of CheckResult objects. (Default: None).

    Properties:
        * title
        * parameters
        * checks
        * verdict
        * status
        * exit_code
    """
    __slots__ = ('_title', '_parameters', '_checks', '_verdict', '_sections')

    def __init__(self, title, parameters=None, checks=None):
        self._title = str(title)
        self._parameters = dict(parameters) if parameters else {}
        self._checks = list(checks) if checks else []
        self._verdict = None
        self._sections = []

    @classmethod
    def from_dict(cls, data):
        """Create a Report from a dictionary."""
        assert data['type'] == 'Report', \
            'Expected Report. Got {}.'.format(data['type'])
        report = cls(data['title'], data.get('parameters'),
                     [CheckResult.from_dict(c) for c in data.get('checks', [])])
        report._verdict = data.get('verdict')
        report._sections = [tuple(s) for s in data.get('sections', [])]
        return report

    @property
    def title(self):
        return self._title

    @property
    def parameters(self):
        return self._parameters

    @property
    def checks(self):
        return tuple(self._checks)

    @property
    def verdict(self):
        """Get or set an optional line of text with the overall verdict."""
        return self._verdict

    @verdict.setter
    def verdict(self, value):
        self._verdict = None if value is None else str(value)

    @property
    def sections(self):
        """Get a tuple of (heading, lines) for extra content of the report."""
        return tuple(self._sections)

    @property
    def status(self):
        """Get the most severe status across all checks."""
        statuses = [c.status for c in self._checks]
        for status in ('Fail', 'Undecided', 'Pass'):
            if status in statuses:
                return status
        return 'Pass'

    @property
    def exit_code(self):
        """Get the CLI exit code of this report (0 pass, 2 violation, 3 undecided)."""
        return EXIT_CODES[self.status]

    def add_check(self, check):
        assert isinstance(check, CheckResult), \
            'Expected CheckResult. Got {}.'.format(type(check))
        self._checks.append(check)

    def add_section(self, heading, lines):
        """Add a block of text lines under a heading."""
        self._sections.append((str(heading), [str(line) for line in lines]))

    def check(self, name):
        """Get a CheckResult by name or None if it is not in the report."""
        for chk in self._checks:
            if chk.name == name:
                return chk
        return None

    def to_dict(self):
        """Get Report as a dictionary."""
        base = {
            'type': 'Report',
            'title': self._title,
            'status': self.status,
            'exit_code': self.exit_code,
            'parameters': self._parameters,
            'checks': [c.to_dict() for c in self._checks]
        }
        if self._verdict is not None:
            base['verdict'] = self._verdict
        if self._sections:
            base['sections'] = [[h, list(lines)] for h, lines in self._sections]
        return base

    def to_text(self):
        """Get the report as plain text."""
        lines = [self._title, '=' * len(self._title)]
        for key in sorted(self._parameters):
            lines.append('{}: {}'.format(key, self._parameters[key]))
        for heading, body in self._sections:
            lines.append('')
            lines.append(heading)
            lines.extend('  {}'.format(line) for line in body)
        lines.append('')
        for chk in self._checks:
            lines.extend(chk.to_text())
        lines.append('')
        if self._verdict is not None:
            lines.append('verdict: {}'.format(self._verdict))
        lines.append('status: {}'.format(self.status))
        return '\n'.join(lines) + '\n'

    def to_markdown(self):
        """Get the report as a markdown document."""
        lines = ['# {}'.format(self._title), '']
        if self._parameters:
            lines.extend(['| parameter | value |', '|---|---|'])
            for key in sorted(self._parameters):
                lines.append('| {} | {} |'.format(key, self._parameters[key]))
            lines.append('')
        for heading, body in self._sections:
            lines.extend(['## {}'.format(heading), ''])
            lines.extend(body)
            lines.append('')
        if self._checks:
            lines.extend(['## Checks', '', '| check | status | cases | scope |',
                          '|---|---|---|---|'])
            for chk in self._checks:
                lines.append('| {} | {} | {} | {} |'.format(
                    chk.name, chk.status, chk.checked,
                    'exhaustive' if chk.exhaustive else 'sampled'))
            lines.append('')
            for chk in self._checks:
                for err in chk.violations:
                    lines.append('- **{}** `{}` {}'.format(
                        chk.name, err['code'], err['message']))
            lines.append('')
        if self._verdict is not None:
            lines.append('**Verdict:** {}'.format(self._verdict))
        lines.append('**Status:** {}'.format(self.status))
        return '\n'.join(lines) + '\n'

    def to_json(self, name, folder, indent=None):
        """Write the Report to JSON.

        Args:
            name: A text string for the name of the JSON file.
            folder: A text string for the directory where the JSON will be written.
            indent: A positive integer to set the indentation used in the resulting
                JSON file. (Default: None).
        """
        file_name = name if name.lower().endswith('.json') else '{}.json'.format(name)
        content = json.dumps(self.to_dict(), indent=indent)
        return write_atomic(folder, file_name, content)

    def render(self, report_format='text'):
        """Get the report as text in a given format (text, json, markdown)."""
        if report_format == 'json':
            return json.dumps(self.to_dict(), indent=2) + '\n'
        if report_format == 'markdown':
            return self.to_markdown()
        return self.to_text()

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'Report: {} [{}]'.format(self._title, self.status)
