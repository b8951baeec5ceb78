"""
Command line: output shapes and exit codes
"""
import json
from collections import Counter

import pytest

from bordlab.cli import EXIT_ERROR, EXIT_FAILED, EXIT_OK, resolve_path, run
from bordlab.errors import ValidationError
from bordlab.isomorphism import isomorphic
from bordlab.parsers import get_parser


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_euler(capsys):
    code, out, _ = _run(capsys, 'euler', 'w158')
    assert code == EXIT_OK
    assert out.strip() == "chi = 2"


def test_euler_json(capsys):
    code, out, _ = _run(capsys, 'euler', 'xprime.cplx', '--json')
    assert code == EXIT_OK
    assert json.loads(out) == {'euler_characteristic': 2}


def test_homology(capsys):
    code, out, _ = _run(capsys, 'homology', 'w158.cplx')
    assert code == EXIT_OK
    assert out.splitlines()[1] == "H1 = Z^1 (+) Z/3 (+) Z/3"


def test_homology_over_a_field(capsys):
    code, out, _ = _run(capsys, 'homology', 'v23', '--coefficients', 'Q')
    assert code == EXIT_OK
    assert out.splitlines()[1] == "H1 = Q^1"


def test_collar(capsys):
    code, out, _ = _run(capsys, 'collar', 'xprime.cplx')
    assert code == EXIT_OK
    assert out.splitlines()[0] == "nerve: S"


def test_collar_from_catalog_nerve(capsys):
    code, out, _ = _run(capsys, 'collar', '--nerve', 'T')
    assert code == EXIT_OK
    assert out.splitlines()[0] == "nerve: T"


def test_unknown_collar_prints_canonical_nerve(capsys):
    code, out, _ = _run(capsys, 'collar', 'w158', '--x', '0', '--y', '1')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "nerve: unknown"
    assert lines[4] == "canonical n=6"
    assert len(lines) == 4 + 1 + 9 + 1
    code, out, _ = _run(capsys, 'collar', 'w158', '--x', '0', '--y', '1', '--json')
    data = json.loads(out)
    assert data['type'] == 'unknown'
    assert data['canonical_nerve']['vertices'] == 6


def test_predicates(capsys):
    code, out, _ = _run(capsys, 'predicates', 'w158', '--x', '0', '--y', '1')
    assert code == EXIT_OK
    assert "boundary_injective: false" in out.splitlines()


def test_collar_needs_input(capsys):
    code, _, err = _run(capsys, 'collar')
    assert code == EXIT_ERROR
    assert any(line.startswith("error:") for line in err.splitlines())


def test_check_type_failure_exits_2(capsys):
    code, out, _ = _run(capsys, 'check-type', 'xpp.cplx', '--type', 'rank74')
    assert code == EXIT_FAILED
    assert out.splitlines()[0] == "type rank74: FAIL"
    assert "girth 5, match none" in out


def test_check_type_pass(capsys):
    code, out, _ = _run(capsys, 'check-type', 'xprime', '--type', 'rank74')
    assert code == EXIT_OK
    assert out.splitlines()[0] == "type rank74: pass"


def test_curvature(capsys):
    assert _run(capsys, 'curvature', 'xprime')[0] == EXIT_OK
    assert _run(capsys, 'curvature', 'xpp')[0] == EXIT_FAILED


def test_weights(capsys):
    code, out, _ = _run(capsys, 'weights', 'xprime')
    assert code == EXIT_OK
    assert "weight equation: pass" in out


def test_involution_none(capsys):
    code, out, _ = _run(capsys, 'involution', 'xpp')
    assert code == EXIT_FAILED
    assert out.strip() == "free involution: none"


def test_iso(capsys):
    code, out, _ = _run(capsys, 'iso', 'xprime', 'xpp')
    assert code == EXIT_FAILED
    assert out.strip() == "not isomorphic"
    code, out, _ = _run(capsys, 'iso', 'xprime', 'xprime')
    assert code == EXIT_OK
    assert out.splitlines()[0] == "isomorphic"


def test_fake_flip(capsys, xpp):
    code, out, _ = _run(capsys, 'surgery-flip', 'xprime', '--fake')
    assert code == EXIT_OK
    assert isomorphic(get_parser('complex').parse(out), xpp) is not None


def test_surgery_flip_needs_replacements(capsys):
    assert _run(capsys, 'surgery-flip', 'xprime')[0] == EXIT_ERROR


def test_st_enum(capsys):
    code, out, _ = _run(capsys, 'st-enum')
    assert code == EXIT_OK
    assert out.splitlines()[0] == "count: 2"


def test_split_then_compose(capsys, tmp_path, xprime):
    code, out, _ = _run(capsys, 'split', 'xprime', '--out-dir', str(tmp_path))
    assert code == EXIT_OK
    assert out.startswith("# minus\n")
    assert (tmp_path / 'minus.cob').exists()
    code, out, _ = _run(capsys, 'compose', str(tmp_path / 'minus.cob'), str(tmp_path / 'plus.cob'), '--charts')
    assert code == EXIT_OK
    doc = get_parser('cobordism').parse(out)
    assert Counter(doc.faces.words) == Counter(xprime.words)


def test_compose_defaults_to_charts(capsys, tmp_path, xprime):
    _run(capsys, 'split', 'xprime', '--out-dir', str(tmp_path))
    code, out, _ = _run(capsys, 'compose', str(tmp_path / 'minus.cob'), str(tmp_path / 'plus.cob'))
    assert code == EXIT_OK
    assert Counter(get_parser('cobordism').parse(out).faces.words) == Counter(xprime.words)


def test_compose_flags_are_exclusive(capsys, tmp_path):
    _run(capsys, 'split', 'xprime', '--out-dir', str(tmp_path))
    code, _, _ = _run(capsys, 'compose', str(tmp_path / 'minus.cob'), str(tmp_path / 'plus.cob'),
                      '--charts', '--matching', str(tmp_path / 'minus.cob'))
    assert code == EXIT_ERROR


@pytest.mark.parametrize("argv", [
    ['frobnicate'],
    ['euler'],
    ['euler', 'xprime', '--bogus'],
    ['homology', 'xprime', '--coefficients', 'R'],
    ['check-type', 'xprime', '--type', 'nope'],
])
def test_usage_errors_exit_1(capsys, argv):
    assert _run(capsys, *argv)[0] == EXIT_ERROR


def test_missing_file(capsys, tmp_path):
    code, out, err = _run(capsys, 'euler', str(tmp_path / 'absent.cplx'))
    assert code == EXIT_ERROR
    assert out == ""
    assert any(line.startswith("error:") for line in err.splitlines())


def test_malformed_file(capsys, tmp_path):
    path = tmp_path / 'bad.cplx'
    path.write_text("[[1, 2,")
    code, _, err = _run(capsys, 'euler', str(path))
    assert code == EXIT_ERROR
    assert any(line.startswith("error:") for line in err.splitlines())


def test_resolve_path_shipped_names():
    assert resolve_path('xprime').name == 'xprime.cplx'
    assert resolve_path('xprime.cplx').name == 'xprime.cplx'
    with pytest.raises(ValidationError):
        resolve_path('nowhere')
