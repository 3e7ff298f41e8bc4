import json
import math

import numpy as np
import pytest

from cpgraphene.cli import main
from cpgraphene.config import build_config, parse_config_text
from cpgraphene.errors import ConfigError
from cpgraphene.output import read_csv


def run(tmp_path, *argv, name="out.csv"):
    out = tmp_path / name
    code = main(list(argv) + ["--out", str(out)])
    return code, out


def test_compute_columns_and_roundtrip(tmp_path):
    code, out = run(tmp_path, "compute", "--atom", "Rb", "--material", "SiO2", "--coated",
                    "--a-start", "100", "--a-stop", "1000", "--a-count", "3")
    assert code == 0
    meta, columns, rows = read_csv(out)
    assert columns == ["a_nm", "value_SI", "value_dimensionless", "terms_used", "est_error",
                       "status"]
    assert meta[0].startswith("cpgraphene ")
    assert any(m.startswith("constants ") for m in meta)
    assert any(m == "config material=SiO2" for m in meta)
    assert [r[0] for r in rows] == pytest.approx([100.0, 316.22776601683796, 1000.0])
    assert all(r[1] < 0 and r[5] == "ok" for r in rows)
    # re-emitting the parsed values reproduces the file byte for byte
    text = out.read_text()
    body = text.split("\n", len(meta) + 1)[-1]
    lines = [",".join(format(v, ".17g") if isinstance(v, float) else v for v in r) for r in rows]
    assert body == "\n".join(lines) + "\n"


def test_identical_runs_identical_bytes(tmp_path):
    args = ["ratio", "--material", "Al2O3", "--separations", "100,2000"]
    c1, o1 = run(tmp_path, *args, name="a.csv")
    c2, o2 = run(tmp_path, *args, "--workers", "2", name="b.csv")
    assert c1 == c2 == 0
    assert o1.read_bytes() == o2.read_bytes()


def test_ratio_curve_values(tmp_path):
    code, out = run(tmp_path, "ratio", "--atom", "Rb", "--material", "SiO2",
                    "--separations", "100,6000")
    assert code == 0
    _, columns, rows = read_csv(out)
    assert columns == ["a_nm", "ratio_coated_over_bare", "status"]
    assert rows[0][1] == pytest.approx(1.10, abs=0.02)
    assert rows[1][1] == pytest.approx(1.70, abs=0.02)


def test_json_output(tmp_path):
    code, out = run(tmp_path, "compute", "--quantity", "force", "--separations", "500",
                    "--format", "json", name="out.json")
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["columns"][0] == "a_nm"
    assert doc["rows"][0][0] == 500.0 and doc["rows"][0][1] < 0


def test_perfect_conductor_force(tmp_path):
    code, out = run(tmp_path, "compute", "--atom", "He*", "--material", "perfect-conductor",
                    "--bare", "--quantity", "force", "--separations", "6000,20000")
    assert code == 0
    _, _, rows = read_csv(out)
    # at 6 um the l >= 1 terms still add about 2 percent
    assert rows[0][2] == pytest.approx(-6.0, rel=0.025)
    assert rows[1][2] == pytest.approx(-6.0, rel=1e-8)


def test_classical_output(tmp_path):
    code, out = run(tmp_path, "classical", "--material", "SiO2", "--separations", "8000")
    assert code == 0
    _, columns, rows = read_csv(out)
    assert columns[1:] == ["value_SI", "leading_SI", "first_correction_SI",
                           "second_correction_SI"]
    r = rows[0]
    assert r[1] == pytest.approx(r[2] + r[3] + r[4], rel=1e-15)


def test_crossover_command(tmp_path, capsys):
    code = main(["crossover", "--atom", "He*", "--material", "SiO2", "--coated"])
    assert code == 0
    value = float(capsys.readouterr().out.strip().split("=")[1])
    assert value == pytest.approx(5000.0, abs=500.0)


def test_crossover_not_found_exit_code(tmp_path):
    code = main(["crossover", "--atom", "He*", "--material", "SiO2", "--separations", "1000,1100"])
    assert code == 3


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# sweep\natom = Na\nmaterial = Si\ncoated = false\n"
                   "separations = 200, 400\nquantity = force\n")
    code, out = run(tmp_path, "compute", "--config", str(cfg), "--atom", "Cs")
    assert code == 0
    meta, _, rows = read_csv(out)
    assert "config atom=Cs" in meta and "config material=Si" in meta
    assert "config coated=False" in meta and "config quantity=force" in meta
    assert len(rows) == 2


def test_custom_atom_and_material(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("atom.Custom = 300, 1.5\n"
                   "material.MyGlass = oscillator osc=2.8,13.0,0\n"
                   "atom = Custom\nmaterial = MyGlass\nseparations = 300\n")
    code, out = run(tmp_path, "ratio", "--config", str(cfg))
    assert code == 0
    assert read_csv(out)[2][0][1] > 1


def test_config_errors_carry_line(tmp_path):
    with pytest.raises(ConfigError) as info:
        parse_config_text("atom = Rb\ntemperature = hot\n")
    assert info.value.line == 2 and info.value.field == "temperature"
    with pytest.raises(ConfigError) as info:
        parse_config_text("atom = Rb\n\ncolour = red\n")
    assert info.value.line == 3
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("bogus line\n")
    assert main(["compute", "--config", str(cfg)]) == 1


def test_precedence():
    cfg = build_config({"atom": "Na", "temperature": 10.0}, {"atom": "Cs", "temperature": None})
    assert cfg.atom == "Cs" and cfg.temperature == 10.0 and cfg.material == "SiO2"


@pytest.mark.parametrize("argv,code", [
    (["compute", "--atom", "Xe", "--separations", "100"], 1),
    (["compute", "--material", "unobtainium", "--separations", "100"], 1),
    (["compute", "--separations", "100", "--temperature", "0"], 1),
    (["compute", "--separations", "-5"], 1),
    (["compute"], 1),
    (["compute", "--materials-db", "/nonexistent/db.dat", "--material", "X",
      "--separations", "100"], 2),
    (["compute", "--separations", "100", "--tol-quad", "2"], 1),
])
def test_exit_codes(tmp_path, argv, code):
    assert main(argv + ["--out", str(tmp_path / "x.csv")]) == code


def test_bad_materials_db_is_data_error(tmp_path):
    db = tmp_path / "m.dat"
    db.write_text("Weird drude plasma_frequency=abc\n")
    assert main(["compute", "--materials-db", str(db), "--material", "Weird",
                 "--separations", "100", "--out", str(tmp_path / "x.csv")]) == 2


def test_nonconvergence_exit_and_keep_going(tmp_path, monkeypatch):
    from cpgraphene import cli
    from cpgraphene.lifshitz import ComputeSettings

    monkeypatch.setattr(cli, "_settings", lambda cfg: ComputeSettings(max_matsubara_terms=10))
    assert main(["compute", "--separations", "100,6000", "--out", str(tmp_path / "a.csv")]) == 3
    code, out = run(tmp_path, "compute", "--separations", "100,6000", "--keep-going")
    assert code == 3
    _, _, rows = read_csv(out)
    assert rows[0][5].startswith("error") and math.isnan(rows[0][1])
    assert rows[1][5] == "ok"
    code, out = run(tmp_path, "ratio", "--separations", "100,6000", "--keep-going", name="r.csv")
    assert code == 3
    _, _, rows = read_csv(out)
    assert rows[0][2].startswith("error") and rows[1][2] == "ok"


def test_stdout_when_no_out(capsys):
    assert main(["compute", "--separations", "1000"]) == 0
    assert capsys.readouterr().out.startswith("# cpgraphene")


@pytest.mark.slow
def test_figures(tmp_path):
    code = main(["figures", "--out", str(tmp_path), "--points", "3"])
    assert code == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["fig1.csv", "fig2a.csv", "fig2b.csv", "fig3.csv", "fig4.csv", "fig5.csv",
                     "fig6.csv"]
    _, cols, rows = read_csv(tmp_path / "fig5.csv")
    last = np.array(rows[-1][1:])
    assert rows[-1][0] == pytest.approx(10000.0)
    assert (last.max() - last.min()) / last.max() < 0.03
    from cpgraphene.atoms import ATOMS
    from cpgraphene.units import DEFAULT_CONSTANTS
    he = ATOMS["He*"]
    three_quarters = 0.75 * 300 * 1.380649e-23 * he.static_polarizability_si(DEFAULT_CONSTANTS)
    assert rows[-1][cols.index("abs_F_a4_Au")] == pytest.approx(three_quarters, rel=0.01)
    _, cols, rows = read_csv(tmp_path / "fig6.csv")
    from cpgraphene.materials import builtin_material
    au = rows[-1][cols.index("abs_F_a4_Au")]
    for name in ("Si", "Al2O3", "SiO2"):
        e0 = builtin_material(name).static_permittivity
        assert rows[-1][cols.index(f"abs_F_a4_{name}")] / au == pytest.approx(
            (e0 - 1) / (e0 + 1), rel=0.03)
