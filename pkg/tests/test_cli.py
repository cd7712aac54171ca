"""Command line surface: subcommands, formats and exit codes."""

import json

import pytest

from crosscap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_surface_command(capsys):
    code, out = run(capsys, "--surface", "3,0", "surface")
    assert code == 0
    assert "chi = -1" in out


def test_surface_json(capsys):
    code, out = run(capsys, "--surface", "1,2", "--json", "surface")
    payload = json.loads(out)
    assert payload["euler_characteristic"] == -1
    assert payload["boundary_components"] == 2
    assert payload["small_exceptional"] is True


def test_named_curve_command(capsys):
    code, out = run(capsys, "--surface", "3,0", "curves", "--name", "l")
    assert code == 0
    assert "1-sided" in out


def test_intersect_matrix(capsys):
    code, out = run(capsys, "--surface", "4,1", "--json",
                    "intersect", "w2", "b1,3", "b3,5")
    payload = json.loads(out)
    assert payload["matrix"][0][1] == 2
    assert payload["matrix"][0][2] == 0


def test_mcg_command(capsys):
    code, out = run(capsys, "--surface", "3,0", "mcg",
                    "--curve", "c2", "--twist", "c1")
    assert code == 0
    assert "image: j" in out


def test_complex_command_with_dot(tmp_path, capsys):
    dot = tmp_path / "b30.dot"
    code, out = run(capsys, "--surface", "3,0", "complex",
                    "--set", "B30", "--dot", str(dot))
    assert code == 0
    assert "13 vertices" in out
    text = dot.read_text()
    assert text.count("label=") == 13


def test_export_bit_stable(tmp_path, capsys):
    code, first = run(capsys, "--surface", "3,0", "export", "B30",
                      "--format", "dot")
    code, second = run(capsys, "--surface", "3,0", "export", "B30",
                       "--format", "dot")
    assert first == second


def test_unknown_suite_is_usage_error(capsys):
    code, _ = run(capsys, "suite", "nonexistent")
    assert code == 64


def test_missing_command_is_usage_error(capsys):
    assert main([]) == 64


def test_suite_small_complexes(capsys):
    code, out = run(capsys, "--json", "suite", "small-complexes")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert len(payload["checks"]) == 5


def test_config_override(tmp_path, capsys):
    from crosscap import config
    cfg = tmp_path / "bounds.cfg"
    cfg.write_text("census_bound = 6\n")
    saved = config.CENSUS_BOUND
    try:
        code, out = run(capsys, "--surface", "1,0", "--config", str(cfg),
                        "--json", "curves")
        assert config.CENSUS_BOUND == 6
        payload = json.loads(out)
        assert len(payload) == 1
    finally:
        config.CENSUS_BOUND = saved
