import json

import pytest


def test_catalog_listing(capsys):
    from hypershell.cli import main
    assert main(['catalog', 'family=sporadic', 'tau=sigma10']) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    assert lines[0].startswith('S(3,sigma10)')


def test_catalog_filters():
    from hypershell.cli import filter_catalog, UsageError
    entries = filter_catalog(['family=thompson', 'failure=true'])
    assert {e.label for e in entries} == {'T(12,E2)', 'T(7,Hbar1)',
                                          'T(10,H2)', 'T(5,Hbar2)'}
    assert all(not e.arithmetic
               for e in filter_catalog(['arithmetic=false']))
    with pytest.raises(UsageError):
        filter_catalog(['colour=blue'])
    with pytest.raises(UsageError):
        filter_catalog(['cocompact=maybe'])


@pytest.mark.parametrize("argv", [['catalog', 'shape=round'],
                                  ['catalog', 'family=hyperbolic'],
                                  ['run', 'S(4,sigma99)'],
                                  ['run'],
                                  ['run', 'S(4,sigma1)', '--stages', 'volume'],
                                  ['screen', 'S(4,sigma1)'],
                                  ['frobnicate'],
                                  []])
def test_usage_errors(argv):
    from hypershell.cli import main
    assert main(argv) == 2


def test_screen_command(tmp_path, capsys):
    from hypershell.cli import main
    path = str(tmp_path / 'screen.json')
    assert main(['screen', 'S(4,sigmabar4)', 'S(6,sigmabar4)',
                 '--json', path]) == 0
    assert 'Distinguished' in capsys.readouterr().out
    with open(path) as f:
        report = json.load(f)
    assert report['verdict'] == 'Distinguished'
    assert report['groups'] == ['S(4,sigmabar4)', 'S(6,sigmabar4)']


def test_run_type_stage(tmp_path):
    from hypershell.cli import main
    path = str(tmp_path / 'report.json')
    assert main(['run', 'S(4,sigmabar4)', '--stages', 'type',
                 '--json', path]) == 0
    with open(path) as f:
        report = json.load(f)
    assert report['schema_version'] == 1
    assert report['group'] == 'S(4,sigmabar4)'
    assert report['type'] == '4,4,4;3,3,3;7'
    assert report['catalog']['field'] == 'Q(sqrt7)'
    assert report['shell'] is None
    assert all(e['ok'] for e in report['expectations'])


def test_run_from_family_flags(tmp_path):
    from hypershell.cli import main
    path = str(tmp_path / 'report.json')
    assert main(['run', '--family', 'sporadic', '--p', '4',
                 '--parameter', 'sigma4bar', '--stages', 'type',
                 '--json', path]) == 0
    with open(path) as f:
        assert json.load(f)['group'] == 'S(4,sigmabar4)'


def test_reports_are_reproducible():
    from hypershell.cli import dumps, run_group
    _, first, code = run_group('S(3,sigma10)', ['type', 'invariants'])
    _, second, _ = run_group('S(3,sigma10)', ['type', 'invariants'])
    assert code == 0
    assert dumps(first) == dumps(second)
    assert first['invariants']['trace_field']['name'] == 'Q(sqrt5)'


def test_exit_code_on_mismatch():
    import hypershell as hs
    from hypershell.cli import exit_code
    from hypershell.core.Stage import Expectation
    G = hs.build_group('S(4,sigmabar4)')
    context = hs.Pipeline().process(G, ['type'])
    assert exit_code(context) == 0
    context['expectations'].append(
            Expectation('type', 'type', 'a', 'b', False))
    assert exit_code(context) == 1


def test_exit_code_without_catalog_entry():
    from hypershell.cli import run_group
    _, report, code = run_group('S(7,sigma10)', ['type'])
    assert code == 0
    assert report['catalog'] is None
    assert report['expectations'] == []


@pytest.mark.slow
def test_known_failure_counts_as_expected():
    from hypershell.cli import run_group
    _, report, code = run_group('T(10,H2)', ['type', 'verify'])
    assert code == 0
    assert report['verification']['failure']['reproduced']


@pytest.mark.slow
def test_run_everything_with_svgs(tmp_path):
    from hypershell.cli import main
    svg = tmp_path / 'svg'
    assert main(['run', 'S(3,sigma10)', '--svg', str(svg)]) == 0
    assert len(list(svg.iterdir())) == 2
