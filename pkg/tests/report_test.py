# coding=utf-8
import json

from triangulated_quotient.decision import Decision
from triangulated_quotient.report import CheckResult, Report, EXIT_CODES
from triangulated_quotient.dictutil import dict_to_object


def _failed_check():
    result = CheckResult('tr1')
    result.count(3)
    result.add_violation('020001', 'TR1', 'Morphism', 'M1->M2', 'No triangle found.')
    return result


def test_check_result_init():
    """Test the initialization of CheckResult and basic properties."""
    result = CheckResult('tr0')
    str(result)  # test the string representation

    assert result.name == 'tr0'
    assert result.status == 'Pass'
    assert result
    assert result.exhaustive
    result.count(2)
    result.note('checked twice')
    result.note('checked twice')
    assert result.checked == 2
    assert result.notes == ('checked twice',)

    skipped = CheckResult.skipped('degeneration', 'D is not empty')
    assert skipped.status == 'Skipped'
    assert skipped


def test_check_result_decisions():
    """Test that decisions are recorded as violations or undecided cases."""
    result = CheckResult('tr3')
    result.add_decision(Decision.yes(), '020003', 'TR3', 'Pair', 'a', 'Square')
    assert result.status == 'Pass'
    result.add_decision(Decision.undecided('budget'), '020003', 'TR3', 'Pair', 'b',
                        'Square')
    assert result.status == 'Undecided'
    assert not result.exhaustive
    result.add_decision(Decision.no('does not complete', {'object': 'M1'}),
                        '020003', 'TR3', 'Pair', 'c', 'Square')
    assert result.status == 'Fail'
    assert result.checked == 3
    err = result.violations[0]
    assert err['code'] == '020003'
    assert err['message'] == 'Square does not complete'
    assert err['witness'] == {'object': 'M1'}
    assert any('020003' in line for line in result.to_text())


def test_report_status():
    """Test the most severe status of a report and its exit code."""
    report = Report('axioms', {'seed': 0})
    str(report)  # test the string representation
    assert report.status == 'Pass'
    assert report.exit_code == 0

    report.add_check(CheckResult.skipped('degeneration', 'D is not empty'))
    assert report.exit_code == 0
    undecided = CheckResult('tr5')
    undecided.add_undecided('020005', 'TR5', 'Pair', 'x', 'Budget exhausted.')
    report.add_check(undecided)
    assert report.status == 'Undecided'
    assert report.exit_code == EXIT_CODES['Undecided'] == 3
    report.add_check(_failed_check())
    assert report.status == 'Fail'
    assert report.exit_code == 2
    assert report.check('tr1').status == 'Fail'
    assert report.check('tr2') is None


def test_report_render():
    """Test the text, markdown and JSON renderings of a report."""
    report = Report('quotient', {'rank_bound': 2, 'seed': 0}, [_failed_check()])
    report.verdict = 'not triangulated'
    report.add_section('Survivors', ['M1', 'M3'])

    text = report.render('text')
    assert text.startswith('quotient\n========\n')
    assert 'rank_bound: 2' in text
    assert '020001 M1->M2: No triangle found.' in text
    assert text.endswith('status: Fail\n')

    markdown = report.render('markdown')
    assert markdown.startswith('# quotient')
    assert '| tr1 | Fail | 3 | exhaustive |' in markdown
    assert '**Verdict:** not triangulated' in markdown

    data = json.loads(report.render('json'))
    assert data['exit_code'] == 2
    assert data['sections'] == [['Survivors', ['M1', 'M3']]]
    assert report.render('text') == text


def test_report_to_from_dict():
    """Test the round trip of a report through its dictionary."""
    report = Report('axioms', {'seed': 1}, [_failed_check()])
    report.verdict = 'fails tr1'
    new_report = dict_to_object(report.to_dict())
    assert isinstance(new_report, Report)
    assert new_report.to_dict() == report.to_dict()
    assert new_report.render('text') == report.render('text')

    decision = dict_to_object(Decision.no('differs', {'object': 'M3'}).to_dict())
    assert decision.is_no
    assert dict_to_object({'type': 'Shape'}, raise_exception=False) is None
