import json
import xml.etree.ElementTree as ET

import pytest

from elgamalmap.cli import DEFAULT_SEED, RunConfig, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_cycles_p3(capsys):
    code, out = run(capsys, "cycles", "--prime", "3", "--generator", "2")
    assert code == 0
    assert out == "generator,cycle_length,multiplicity\n2,2,1\n"


def test_cycles_lengths_sum_to_degree(capsys):
    code, out = run(capsys, "cycles", "--prime", "1009", "--generator", "11")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "generator,cycle_length,multiplicity"
    total = sum(
        int(row[1]) * int(row[2]) for row in (line.split(",") for line in lines[1:])
    )
    assert total == 1008


def test_cycles_all_generators_p5(capsys):
    code, out = run(capsys, "cycles", "--prime", "5", "--generator", "all")
    assert code == 0
    gens = {line.split(",")[0] for line in out.strip().splitlines()[1:]}
    assert gens == {"2", "3"}


def test_cycle_dist_p3(capsys):
    code, out = run(capsys, "cycle-dist", "--prime", "3")
    assert code == 0
    assert out.splitlines() == [
        "c,theory_percent,elgamal_percent",
        "1,50.000000,100.000000",
        "2,50.000000,0.000000",
    ]


def test_cycle_dist_p1009_is_bounded(capsys):
    code, out = run(capsys, "cycle-dist", "--prime", "1009")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 21  # header + c = 1..20
    empirical = [float(line.split(",")[2]) for line in lines[1:]]
    theory = [float(line.split(",")[1]) for line in lines[1:]]
    assert sum(empirical) <= 100.0 + 1e-9
    assert sum(theory) <= 100.0 + 1e-9


def test_random_baseline_deterministic(capsys):
    code1, out1 = run(capsys, "random-baseline", "--degree", "200", "--samples", "50")
    code2, out2 = run(capsys, "random-baseline", "--degree", "200", "--samples", "50")
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.splitlines()[0] == "c,theory_percent,random_percent"


def test_random_baseline_degree_one(capsys):
    code, out = run(capsys, "random-baseline", "--degree", "1", "--samples", "10")
    assert code == 0
    assert out.splitlines()[1] == "1,100.000000,100.000000"


def test_kcycles_p5(capsys):
    code, out = run(capsys, "kcycles", "--prime", "5", "--k-max", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,theory,empirical_average"
    assert lines[1] == "1,1.000000,0.500000"
    assert lines[4].startswith("4,0.250000,")


def test_fixed_points_small(capsys):
    code, out = run(capsys, "fixed-points", "--max-prime", "7")
    assert code == 0
    assert out.splitlines() == [
        "p,avg_fixed_points",
        "2,1.000000",
        "3,0.000000",
        "5,0.500000",
        "7,1.500000",
    ]


def test_sidon_json(capsys):
    code, out = run(capsys, "sidon", "--prime", "5", "--generator", "all")
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert [r["generator"] for r in doc["results"]] == [2, 3]
    for r in doc["results"]:
        assert r["ok"] is True
        assert r["diff_set_size"] == r["expected_diff_set_size"] == 13


def test_sidon_p3(capsys):
    code, out = run(capsys, "sidon", "--prime", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["results"][0]["diff_set_size"] == 3


def test_char_sums_json(capsys):
    code, out = run(capsys, "char-sums", "--prime", "5", "--generator", "2")
    assert code == 0
    doc = json.loads(out)
    result = doc["results"][0]
    assert result["pass"] is True
    assert result["bound"] == pytest.approx(3.4641016151377544)
    assert result["max_sum"] < result["bound"]
    assert (result["argmax_s"], result["argmax_t"]) != (0, 0)


def test_polya_json(capsys):
    code, out = run(capsys, "polya", "--n", "4", "--window", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["total"] == pytest.approx(4.82842712474619)
    assert doc["bound"] == pytest.approx(27.725887222397812)
    assert doc["pass"] is True


def test_polya_shift_matches(capsys):
    _, out0 = run(capsys, "polya", "--n", "4", "--window", "2", "--shift", "0")
    _, out9 = run(capsys, "polya", "--n", "4", "--window", "2", "--shift", "9")
    total0 = json.loads(out0)["total"]
    total9 = json.loads(out9)["total"]
    assert total9 == pytest.approx(total0, abs=1e-9)


def test_polya_bad_window_is_usage_error(capsys):
    code = main(["polya", "--n", "4", "--window", "4"])
    capsys.readouterr()
    assert code == 1


def test_discrepancy_json_and_records(capsys, tmp_path):
    records = tmp_path / "records.csv"
    code, out = run(
        capsys,
        "discrepancy", "--prime", "5", "--generator", "2",
        "--boxes", "0", "--seed", "0", "--out", str(records),
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert doc["max_deviation"] <= doc["bound"]
    lines = records.read_text().splitlines()
    assert lines[0] == "h,N,k,M,hits,expected,deviation,ratio,large_box"
    assert len(lines) == 1 + doc["num_boxes"]
    full_box = lines[1].split(",")
    assert float(full_box[6]) == 0.0  # the full box deviates by exactly 0


def test_discrepancy_rejects_all_selector(capsys):
    code = main(["discrepancy", "--prime", "5", "--generator", "all"])
    capsys.readouterr()
    assert code == 1


def test_render_cycles_writes_svg(capsys, tmp_path):
    out_file = tmp_path / "cycles.svg"
    code, _ = run(
        capsys, "render-cycles", "--prime", "5", "--generator", "2", "--out", str(out_file)
    )
    assert code == 0
    root = ET.fromstring(out_file.read_text())
    circles = root.findall("{http://www.w3.org/2000/svg}circle")
    assert len(circles) == 2
    radii = sorted(float(c.get("r")) for c in circles)
    assert radii[1] / radii[0] == 3.0


def test_render_cycles_requires_out(capsys):
    code = main(["render-cycles", "--prime", "5", "--generator", "2"])
    capsys.readouterr()
    assert code == 1


def test_sign_demo(capsys):
    code, out = run(capsys, "sign-demo", "--prime", "1009", "--seed", "0")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"A", "K", "b", "verified"}
    assert doc["verified"] is True


def test_sign_demo_p5(capsys):
    code, out = run(capsys, "sign-demo", "--prime", "5", "--seed", "1")
    assert code == 0
    assert json.loads(out)["verified"] is True


def test_sign_demo_tamper(capsys):
    code, out = run(capsys, "sign-demo", "--prime", "1009", "--seed", "0", "--tamper")
    assert code == 2
    assert json.loads(out)["verified"] is False


def test_composite_prime_is_input_error(capsys):
    code = main(["cycles", "--prime", "10"])
    captured = capsys.readouterr()
    assert code == 1
    assert "not an odd prime" in captured.err


def test_non_generator_is_input_error(capsys):
    code = main(["cycles", "--prime", "7", "--generator", "2"])
    capsys.readouterr()
    assert code == 1


def test_runs_are_byte_identical(capsys):
    outputs = []
    for _ in range(2):
        code, out = run(
            capsys, "discrepancy", "--prime", "101", "--boxes", "25", "--seed", "3"
        )
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out = run(capsys, "cycles", "--prime", "5", "--generator", "2", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().splitlines()[0] == "generator,cycle_length,multiplicity"


def test_json_format_for_tables(capsys):
    code, out = run(capsys, "kcycles", "--prime", "5", "--k-max", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["columns"] == ["k", "theory", "empirical_average"]
    assert len(doc["rows"]) == 2


def test_run_config_defaults():
    config = RunConfig(subcommand="cycles", prime=5)
    assert config.seed == DEFAULT_SEED == 0
    assert config.out_format == "csv"
    assert config.out_path is None
    assert config.generator == "smallest"
