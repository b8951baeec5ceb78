"""
Configuration loading: defaults, deep merge and nested lookup
"""
import json

from bordlab.config import Config


def test_missing_file_uses_defaults(tmp_path):
    cfg = Config(str(tmp_path / "absent.json"))
    assert cfg.get('omega', 'segment_max_length') == 3
    assert cfg.get('omega', 'fillings') == 'split'
    assert cfg.get('output', 'json_indent') == 2


def test_user_values_merge_over_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({'omega': {'circle_max_length': 4}}))
    cfg = Config(str(path))
    assert cfg.get('omega', 'circle_max_length') == 4
    assert cfg.get('omega', 'segment_max_length') == 3
    assert cfg.get('search', 'require_unique_gluing') is False


def test_unreadable_file_falls_back(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{not json")
    cfg = Config(str(path))
    assert cfg.get('logging', 'level') == 'INFO'


def test_get_default_for_unknown_keys(tmp_path):
    cfg = Config(str(tmp_path / "absent.json"))
    assert cfg.get('nothing', 'here', default=7) == 7
    assert cfg.get('data', 'directory', default='fallback') == 'fallback'


def test_reload_switches_file(tmp_path):
    cfg = Config(str(tmp_path / "absent.json"))
    path = tmp_path / "other.json"
    path.write_text(json.dumps({'output': {'json_indent': 4}}))
    cfg.reload(str(path))
    assert cfg.get('output', 'json_indent') == 4
