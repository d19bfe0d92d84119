"""Tests for the experiment commands, report serialization and the CLI."""

import json
import math

import pytest

from speclab import cli, experiments, fem, geometry


def test_constants_report_and_verdicts():
    report = experiments.cmd_constants(2, 6)
    assert report.all_passed
    by_key = {(r[0], r[1], r[2]): r[3] for r in report.rows}
    assert by_key[("alpha1_sharp", 1, 3)] == pytest.approx(0.25, abs=1e-13)
    names = {v.name for v in report.verdicts}
    assert "c_upper_below_one" in names and "sandwich_funano_simple_sharp" in names


def test_constants_csv_determinism(tmp_path):
    r1 = experiments.cmd_constants(2, 5)
    r2 = experiments.cmd_constants(2, 5)
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    r1.write_csv(p1)
    r2.write_csv(p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_weyl_report(tmp_path):
    report = experiments.cmd_weyl(k_list=(1000, 10000))
    assert report.all_passed
    report.write(tmp_path)
    assert (tmp_path / "weyl.csv").exists()
    assert (tmp_path / "weyl_verdicts.json").exists()
    assert (tmp_path / "weyl.svg").exists()
    payload = json.loads((tmp_path / "weyl_verdicts.json").read_text())
    assert payload["all_passed"] is True
    assert "wall_time_s" in payload["metadata"]
    # CSV carries no timing metadata
    assert "wall" not in (tmp_path / "weyl.csv").read_text()


def test_weyl_validates_nesting():
    with pytest.raises(ValueError):
        experiments.cmd_weyl(rect1=(3.0, 1.0), rect2=(2.0, 1.3))


def test_dimension_demo_threshold_flip():
    report = experiments.cmd_dimension_demo(k=1, ell_list=(0.5, 0.999, 1.001, 2.0))
    assert report.all_passed
    predicted = [row[5] for row in report.rows]
    assert predicted == [True, True, False, False]
    measured = [row[6] for row in report.rows]
    assert measured == predicted
    below = report.rows[0]
    assert below[3] == pytest.approx(4.0, rel=1e-14)


def test_dimension_demo_huge_ell_ratio_one():
    report = experiments.cmd_dimension_demo(k=1, ell_list=(50.0,))
    row = report.rows[0]
    assert row[3] == pytest.approx(1.0, rel=1e-12)


def test_counterexamples_exact():
    report = experiments.cmd_counterexamples()
    assert report.all_passed
    vals = {r[0]: r[2] for r in report.rows}
    assert vals["segment_in_square"] == 0.5
    assert vals["disjoint_disks_j2"] == 0.0
    assert vals["disjoint_disks_j3"] == 0.0
    assert vals["disjoint_disks_j3_first_positive"] > 0.0


def test_ratio_scan_small(tmp_path):
    report = experiments.cmd_ratio_scan(n_pairs=3, seed=7, refinements=2)
    assert report.columns[0] == "pair_id"
    ref_rows = [r for r in report.rows if r[2] == "reference"]
    assert len(ref_rows) == 2
    assert ref_rows[0][5] == 1.0  # identical pair
    assert ref_rows[1][5] < 1.0  # thin rectangle in square
    random_rows = [r for r in report.rows if r[2] == "random"]
    assert len(random_rows) == 3
    assert report.all_passed


def test_ratio_scan_csv_determinism(tmp_path):
    a = experiments.cmd_ratio_scan(n_pairs=4, seed=3, refinements=2)
    b = experiments.cmd_ratio_scan(n_pairs=4, seed=3, refinements=2)
    pa, pb = tmp_path / "a.csv", tmp_path / "b.csv"
    a.write_csv(pa)
    b.write_csv(pb)
    assert pa.read_bytes() == pb.read_bytes()


def test_rhombus_sweep_small():
    report = experiments.cmd_rhombus_sweep(theta_deg_list=(20.0, 10.0), refinements=3)
    assert report.all_passed
    degs = [row[0] for row in report.rows]
    assert degs == [20.0, 10.0]
    values = [row[1] for row in report.rows]
    assert values[1] > values[0]


def test_rhombus_sweep_rejects_tiny_angle():
    with pytest.raises(ValueError):
        experiments.cmd_rhombus_sweep(theta_deg_list=(1.0,))


def test_rhombus_45_degrees_is_rotated_square():
    # the opening-45 rhombus of diagonal 2 is the square of side sqrt(2)
    report = experiments.cmd_rhombus_sweep(theta_deg_list=(45.0,), refinements=4)
    normalized = report.rows[0][1]
    assert normalized == pytest.approx(math.pi**2 / 2.0, rel=0.002)


def test_ratio_scan_reference_value():
    # thin rectangle 1.9 x 0.02 inside the square of side sqrt(2):
    # analytic ratio (pi^2/1.9^2) / (pi^2/2) = 2/3.61
    report = experiments.cmd_ratio_scan(n_pairs=1, seed=1, refinements=3)
    thin = next(r for r in report.rows if r[0] == "ref_thin_rect_in_square")
    assert thin[5] == pytest.approx(2.0 / 1.9**2, rel=0.01)


def test_constants_full_dimension_sweep():
    report = experiments.cmd_constants(k_max=1, d_max=120)
    assert report.all_passed
    verdict = next(v for v in report.verdicts if v.name == "alpha1_sharp_normalized_increasing")
    assert verdict.passed


def test_thread_count_does_not_change_results(tmp_path, monkeypatch):
    monkeypatch.setenv("SPECLAB_THREADS", "1")
    serial = experiments.cmd_rhombus_sweep(theta_deg_list=(20.0, 10.0), refinements=3)
    monkeypatch.setenv("SPECLAB_THREADS", "4")
    parallel = experiments.cmd_rhombus_sweep(theta_deg_list=(20.0, 10.0), refinements=3)
    pa, pb = tmp_path / "serial.csv", tmp_path / "parallel.csv"
    serial.write_csv(pa)
    parallel.write_csv(pb)
    assert pa.read_bytes() == pb.read_bytes()


def test_fem_json_records(tmp_path):
    res = fem.mu_k(geometry.Square(1.0), 1, refinements=2)
    path = tmp_path / "records.json"
    fem.write_json_records([res.to_record("square(1)", 1)], path)
    back = json.loads(path.read_text())
    assert back[0]["domain"] == "square(1)"
    assert set(back[0]) == {"domain", "k", "h", "dofs", "value", "residual", "error_estimate"}
    assert back[0]["value"] == pytest.approx(math.pi**2, rel=0.02)


# ---------------------------------------------------------------------------
# CLI


def test_cli_runs_and_writes(tmp_path):
    code = cli.main(["constants", "--k-max=2", "--d-max=4", "--out", str(tmp_path / "o")])
    assert code == 0
    assert (tmp_path / "o" / "constants.csv").exists()
    assert (tmp_path / "o" / "constants_verdicts.json").exists()


def test_cli_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("k_max=2\n# comment\nd_max = 4\n")
    config = cli.parse_config(["constants", "--config", str(cfg), "--out", str(tmp_path)])
    assert config.params == {"k_max": 2, "d_max": 4}


def test_cli_config_rejects_unknown_keys(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("bogus=7\n")
    with pytest.raises(ValueError):
        cli.parse_config(["constants", "--config", str(cfg), "--out", str(tmp_path)])


def test_cli_flag_overrides_config(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("k_max=2\nd_max=4\n")
    config = cli.parse_config(
        ["constants", "--config", str(cfg), "--k-max=3", "--out", str(tmp_path)]
    )
    assert config.params["k_max"] == 3


def test_cli_failing_verdict_sets_exit_code(tmp_path):
    # equal rectangles cannot show a decreasing deviation, so the trend
    # verdict fails and the process reports it
    code = cli.main(
        ["weyl", "--k-list=1000,10000", "--rect1=1x1", "--rect2=1x1", "--out", str(tmp_path / "o")]
    )
    assert code == 1


def test_cli_rejects_unknown_flags():
    with pytest.raises(SystemExit):
        cli.parse_config(["constants", "--bogus=1"])


def test_cli_invalid_parameter_exit_code(tmp_path, capsys):
    code = cli.main(["rhombus-sweep", "--theta-deg-list=50", "--out", str(tmp_path)])
    assert code == 2
    assert "speclab:" in capsys.readouterr().err


def test_cli_list_parsers():
    assert cli._floats("20,10,5") == (20.0, 10.0, 5.0)
    assert cli._ints("1000, 10000") == (1000, 10000)
    assert cli._rect("2x1.3") == (2.0, 1.3)
