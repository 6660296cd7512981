import json

import pytest

from boolshift import cli
from boolshift.boolfn import format_function, make_delta


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_analyze_ip4(capsys):
    code, out = run_cli(capsys, "analyze", "ip:4")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["bent"] is True
    assert data["weight"] == 6
    assert data["p_success"]["1"] == 1.0
    assert data["qrs"]["1"] == {"p_min": 1.0, "p_max": 1.0}
    assert data["minimal_full_support_t"] == 1


def test_analyze_delta(capsys):
    code, out = run_cli(capsys, "analyze", "delta:3:0")
    data = json.loads(out)
    assert code == 0
    assert data["p_success"]["1"] == pytest.approx(0.78125)
    assert data["shift_structure"]["undetectable_basis"] == []
    assert data["bounds"]["upper_leading"] == pytest.approx(2.221441469, abs=1e-6)


def test_analyze_csv_spectrum(capsys):
    code, out = run_cli(capsys, "analyze", "delta:2:0", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "w,value"
    assert lines[1] == "0x0,2/2^2"
    assert lines[2] == "0x1,-2/2^2"


def test_analyze_csv_tfold(capsys):
    code, out = run_cli(capsys, "analyze", "delta:2:0", "--csv", "--spectrum", "tfold", "--t", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "w,value"
    assert float(lines[1].split(",")[1]) == pytest.approx(0.5)


def test_pgm_subcommand(capsys):
    code, out = run_cli(capsys, "pgm", "--function", "delta:3:0", "--t", "1")
    data = json.loads(out)
    assert code == 0
    assert data["p_success"] == pytest.approx(0.78125)
    assert "histogram" not in data


def test_pgm_histogram_deterministic(capsys):
    argv = ["pgm", "--function", "delta:3:0", "--t", "1", "--shots", "500", "--seed", "3"]
    code1, out1 = run_cli(capsys, *argv)
    code2, out2 = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert sum(data["histogram"].values()) == 500


def test_pgm_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("BOOLSHIFT_SEED", "99")
    code, out = run_cli(capsys, "pgm", "--function", "delta:2:0", "--shots", "10")
    assert code == 0
    assert json.loads(out)["seed"] == 99


def test_shifts_subcommand(capsys):
    code, out = run_cli(capsys, "shifts", "@-missing-file.tt")
    assert code == 1  # domain error reported as JSON
    assert "error" in json.loads(out)

    code, out = run_cli(capsys, "shifts", "delta:2:1")
    data = json.loads(out)
    assert code == 0
    assert data["bent"] is True
    assert data["exact_one_query"] == {"feasible": True, "p_empty": "0/1", "k": 0}


def test_shifts_parity(capsys):
    import tempfile, os

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "parity.tt")
        with open(path, "w") as fh:
            fh.write("n=2\n0110\n")
        code, out = run_cli(capsys, "shifts", f"@{path}")
    data = json.loads(out)
    assert data["undetectable_basis"] == ["0x3"]
    assert data["anti_shift"] == "0x1"
    assert data["bent"] is False


def test_support_subcommand(capsys):
    code, out = run_cli(capsys, "support", "ip:4")
    data = json.loads(out)
    assert code == 0
    assert data["fractions"]["1"] == 1.0
    assert data["minimal_full_support_t"] == 1


def test_support_csv(capsys):
    code, out = run_cli(capsys, "support", "delta:3:0", "--csv", "--t-max", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,support_size,fraction"
    assert lines[1] == "1,8,1"
    assert lines[-1].startswith("minimal_full_support_t,1")


def test_dtree_subcommand(capsys, tmp_path):
    from boolshift.dtree import example_tree, format_tree

    path = tmp_path / "f10.tree"
    path.write_text("n=10\n" + format_tree(example_tree()) + "\n")
    code, out = run_cli(capsys, "dtree", str(path))
    data = json.loads(out)
    assert code == 0
    assert data["height"] == 5
    assert data["zero_coefficients"] == 928
    assert data["support_fraction"][0] == pytest.approx(0.09375)
    assert data["tree_lemma_ok"] is True
    assert data["degenerate"] is False
    assert data["minimal_full_support_t"] == 4


def test_randstat_subcommand(capsys):
    code, out = run_cli(
        capsys, "randstat", "--n", "3", "--t", "2", "--samples", "50", "--seed", "5"
    )
    data = json.loads(out)
    assert code == 0
    assert 0 <= data["estimate"] <= 1
    assert data["moments"]["mean"] == "1/8"
    assert data["bound_random2"] == pytest.approx(1 - 3 / 64 / 8)


def test_bounds_subcommand(capsys):
    code, out = run_cli(capsys, "bounds", "--n", "10", "--weight", "1")
    data = json.loads(out)
    assert code == 0
    assert data["upper_leading"] == pytest.approx(25.13274122871834)
    assert data["lower_leading"] == pytest.approx(32.0)


def test_byte_identical_output(capsys):
    code1, out1 = run_cli(capsys, "analyze", "random:4:12")
    code2, out2 = run_cli(capsys, "analyze", "random:4:12")
    assert code1 == code2 == 0
    assert out1 == out2


def test_domain_error_exit_code(capsys):
    code, out = run_cli(capsys, "bounds", "--n", "4", "--weight", "0")
    assert code == 1
    assert "error" in json.loads(out)


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["not-a-command"])
    assert exc.value.code == 2


def test_float_rendering_17_digits():
    text = cli.render_json({"v": 1 / 3})
    assert "0.33333333333333331" in text


def test_analyze_constant_function_has_no_bounds(capsys, tmp_path):
    path = tmp_path / "zero.tt"
    path.write_text("n=2\n0000\n")
    code, out = run_cli(capsys, "analyze", f"@{path}")
    data = json.loads(out)
    assert code == 0
    assert data["bounds"] is None
    assert data["minimal_full_support_t"] is None
    assert data["weight"] == 0


def test_truth_table_round_trip_via_cli(capsys, tmp_path):
    f = make_delta(4, 9)
    path = tmp_path / "d.tt"
    path.write_text(format_function(f))
    code, out = run_cli(capsys, "analyze", f"@{path}")
    assert code == 0
    assert json.loads(out)["weight"] == 1
