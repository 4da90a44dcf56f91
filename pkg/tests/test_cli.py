"""Test the command-line entry points."""
import json

import pytest

from conftest import document
from src.cli import EXIT_INVALID, EXIT_OK, EXIT_RUNTIME, main
from src.data_processing import parse_results
from src.scenario import AGGREGATE, ALL_USERS


def strip_timestamp(data: bytes) -> bytes:
    return b"\n".join(line for line in data.split(b"\n") if b"timestamp:" not in line)


def test_simulate_writes_csv(config_dir, tmp_path):
    out = tmp_path / "noma_fair.csv"
    assert main(["simulate", str(config_dir / "noma_fair.json"), "--out", str(out)]) == EXIT_OK
    meta, reports = parse_results(out.read_bytes())
    assert len(reports) == 25 * 3
    assert {r.user_id for r in reports} == {"u1", "u2", ALL_USERS}
    assert meta.interference_mode == "as_written"


def test_simulate_wdm_jsonl(config_dir, tmp_path):
    out = tmp_path / "wdm.jsonl"
    code = main(["simulate", str(config_dir / "wdm_fair.json"), "--out", str(out), "--format", "jsonl"])
    assert code == EXIT_OK
    _, reports = parse_results(out.read_bytes())
    assert len(reports) == 25 * (2 * 5 + 1)


def test_simulate_to_stdout(config_dir, capsysbinary):
    assert main(["simulate", str(config_dir / "noma_equal.json")]) == EXIT_OK
    captured = capsysbinary.readouterr()
    assert captured.out.startswith(b"# tool_version:")
    _, reports = parse_results(captured.out)
    assert len(reports) == 75


def test_simulate_is_byte_deterministic(config_dir, tmp_path):
    config = str(config_dir / "wdm_equal.json")
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["simulate", config, "--out", str(first)]) == EXIT_OK
    assert main(["simulate", config, "--out", str(second), "--jobs", "3"]) == EXIT_OK
    assert strip_timestamp(first.read_bytes()) == strip_timestamp(second.read_bytes())


def test_simulate_with_calibration(write_config, tmp_path):
    path = write_config(document(noise={"bandwidth": 1000.0}))
    out = tmp_path / "calibrated.csv"
    assert main(["simulate", str(path), "--out", str(out)]) == EXIT_OK
    _, reports = parse_results(out.read_bytes())
    rates = [r.rate_bps for r in reports if r.colour == AGGREGATE]
    target_min, target_max = min(rates), max(rates)

    out2 = tmp_path / "fitted.csv"
    code = main(["simulate", str(path), "--out", str(out2),
                 "--calibrate-to", repr(target_min), repr(target_max), "--bracket", "1", "1e6"])
    assert code == EXIT_OK
    meta, _ = parse_results(out2.read_bytes())
    assert meta.calibrated_bandwidth_hz == pytest.approx(1e3, rel=1e-6)
    assert meta.calibration_residual is not None


def test_compare_reports_wdm_uplift(write_config, tmp_path):
    noise = {"bandwidth": 1.0}
    noma = write_config(document(system="noma", noise=noise), "noma.json")
    wdm = write_config(document(system="wdm_noma", noise=noise), "wdm.json")
    out = tmp_path / "compare.csv"
    assert main(["compare", str(noma), str(wdm), "--out", str(out)]) == EXIT_OK
    text = out.read_text()
    assert "# b_sum_rate_higher_at: 25/25" in text
    assert "position_m,sum_rate_bps_a,sum_rate_bps_b,delta_bps,fairness_a,fairness_b" in text


def test_calibrate_prints_fit(write_config, tmp_path):
    path = write_config(document(noise={"bandwidth": 100.0}))
    out = tmp_path / "rates.csv"
    assert main(["simulate", str(path), "--out", str(out)]) == EXIT_OK
    rates = [r.rate_bps for r in parse_results(out.read_bytes())[1] if r.colour == AGGREGATE]

    fit = tmp_path / "fit.txt"
    code = main(["calibrate", str(path), "--min", repr(min(rates)), "--max", repr(max(rates)),
                 "--bracket", "1", "1e4", "--out", str(fit)])
    assert code == EXIT_OK
    values = dict(line.split(": ") for line in fit.read_text().splitlines())
    assert float(values["bandwidth_hz"]) == pytest.approx(100.0, rel=1e-6)


def test_calibrate_out_of_reach_is_a_runtime_error(config_dir, capsys):
    code = main(["calibrate", str(config_dir / "noma_fair.json"), "--min", "0.7e9", "--max", "1.4e9"])
    assert code == EXIT_RUNTIME
    assert "not within a factor of 10" in capsys.readouterr().err


def test_validate_shipped_config(config_dir):
    assert main(["validate", str(config_dir / "wdm_fair.json")]) == EXIT_OK


def test_validate_names_the_field(write_config, capsys):
    path = write_config(document(access_point={"semi_angle": 60.0}), "broken.json")
    assert main(["validate", str(path)]) == EXIT_INVALID
    err = capsys.readouterr().err
    assert "access_point -> semi_angle" in err


def test_simulate_invalid_config(write_config, capsys):
    path = write_config(document(users=[]))
    assert main(["simulate", str(path)]) == EXIT_INVALID
    assert "at least 1 user" in capsys.readouterr().err


def test_simulate_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{\n  \"users\": \n}")
    assert main(["simulate", str(path)]) == EXIT_INVALID
    assert "line 3" in capsys.readouterr().err


def test_missing_file_is_a_runtime_error(tmp_path):
    assert main(["simulate", str(tmp_path / "missing.json")]) == EXIT_RUNTIME


@pytest.mark.parametrize("argv", [[], ["simulate"], ["bogus"], ["calibrate", "x.json"]])
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_RUNTIME
    assert "usage:" in capsys.readouterr().err


def test_schema_docs(tmp_path):
    out = tmp_path / "schema.md"
    assert main(["schema-docs", "--out", str(out)]) == EXIT_OK
    assert "ConfigDocument" in out.read_text()


def test_nothing_on_stdout_but_data(config_dir, tmp_path, capsys):
    out = tmp_path / "r.csv"
    main(["--log-level", "INFO", "simulate", str(config_dir / "noma_fair.json"), "--out", str(out)])
    assert capsys.readouterr().out == ""


def test_config_document_is_plain_json(config_dir):
    for path in config_dir.glob("*.json"):
        assert isinstance(json.loads(path.read_text()), dict)


def test_compare_reads_result_files(config_dir, tmp_path):
    noma, wdm = str(config_dir / "noma_fair_sic.json"), str(config_dir / "wdm_fair_sic.json")
    noma_csv, wdm_jsonl = tmp_path / "noma.csv", tmp_path / "wdm.jsonl"
    assert main(["simulate", noma, "--out", str(noma_csv)]) == EXIT_OK
    assert main(["simulate", wdm, "--out", str(wdm_jsonl), "--format", "jsonl"]) == EXIT_OK

    from_configs, from_files, mixed = (tmp_path / n for n in ("c.csv", "f.csv", "m.csv"))
    assert main(["compare", noma, wdm, "--out", str(from_configs)]) == EXIT_OK
    assert main(["compare", str(noma_csv), str(wdm_jsonl), "--out", str(from_files)]) == EXIT_OK
    assert main(["compare", str(noma_csv), wdm, "--out", str(mixed)]) == EXIT_OK

    expected = strip_timestamp(from_configs.read_bytes())
    assert strip_timestamp(from_files.read_bytes()) == expected
    assert strip_timestamp(mixed.read_bytes()) == expected
    assert b"# b_sum_rate_higher_at: 25/25" in expected


def test_compare_rejects_a_truncated_result_file(config_dir, tmp_path):
    out = tmp_path / "noma.csv"
    assert main(["simulate", str(config_dir / "noma_fair.json"), "--out", str(out)]) == EXIT_OK
    out.write_bytes(b"\n".join(line for line in out.read_bytes().split(b"\n") if b",total," not in line))
    assert main(["compare", str(out), str(config_dir / "wdm_fair.json")]) == EXIT_INVALID


def test_unexpected_failure_is_a_runtime_error(config_dir, monkeypatch, capsys):
    def broken(*args, **kwargs):
        raise RuntimeError("worker pool died")

    monkeypatch.setattr("src.cli.run_sweep", broken)
    assert main(["simulate", str(config_dir / "noma_fair.json")]) == EXIT_RUNTIME
    assert "worker pool died" in capsys.readouterr().err
