import math
import os
import pathlib
import xml.etree.ElementTree as ET

import pytest

import ammet

ROOT = pathlib.Path(__file__).resolve().parents[2]
DATA = pathlib.Path(os.environ.get("AMMET_DATA_FILE", ROOT / "data" / "API_NE.CON.GOVT.ZS_DS2_en_csv_v2.csv"))


def golden():
    rows = []
    for line in (ROOT / "tests" / "golden" / "table1.tsv").read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#"):
            rows.append(line.split("\t"))
    return rows


def records():
    return ammet.parse_worldbank_csv(DATA.read_text(encoding="utf-8"), 2017)


def test_amplifier_algebra():
    assert ammet.beta_from_alpha(0.1) == 10.0
    assert ammet.alpha_from_beta(5) == 0.2
    assert ammet.government_spending(0.1, 1000) == 100.0
    assert ammet.equilibrium_income(850, 50, 100) == 1000.0
    assert ammet.investment_amplification(100, 10) == 10.0
    acc = ammet.whatif_account(1000, 0.1, 0.8)
    assert (acc.income_Y, acc.consumption_C, acc.investment_I, acc.government_G) == (1000, 720, 180, 100)


def test_domain_errors_are_value_errors():
    with pytest.raises(ValueError):
        ammet.beta_from_alpha(0.0)
    with pytest.raises(ammet.DomainError):
        ammet.whatif_account(1000, 1.5, 0.5)


def test_transistor_bias_point():
    params = ammet.TransistorParams()
    assert ammet.gain_from_base_width(params) == pytest.approx(99.458545123378099209, rel=1e-12)
    op = ammet.solve_bias_point(ammet.BiasCircuit(10.0, 1e6, 1e3), params)
    assert op.v_BE == pytest.approx(0.53427705192064852008, abs=1e-9)
    assert not op.saturated
    sat = ammet.solve_bias_point(ammet.BiasCircuit(10.0, 1e6, 1e6), params)
    assert sat.saturated and sat.v_CE == params.vce_saturation
    with pytest.raises(ammet.NumericError):
        ammet.solve_bias_point(ammet.BiasCircuit(10.0, 1e6, 1e3), params, max_iterations=1)
    assert ammet.effective_gain_with_leakage(1e-3, 100, 1e-5) == pytest.approx(50.0)


def test_table_reproduction_matches_published_values():
    rows, skipped = ammet.build_amplification_table(records())
    assert skipped == []
    csv = ammet.emit_table(rows, "csv").splitlines()
    assert csv[0] == "name,alpha,beta"
    assert len(csv) == 43
    emitted = {}
    for line in csv[1:]:
        name, alpha, beta = line.rsplit(",", 2)
        emitted[name.strip('"')] = (alpha, beta)
    for name, _iso3, alpha, beta in golden():
        assert emitted[name] == (alpha, beta), name


def test_classification_and_svg():
    rows, census, skipped = ammet.classify_records(records())
    assert census["A"] == 36 and census["C"] == 0 and skipped == []
    assert ammet.classify_alpha(0.37) == ammet.Region.GapAB
    svg = ammet.render_scatter_svg(rows)
    root = ET.fromstring(svg.encode("utf-8"))
    circles = root.findall(".//{http://www.w3.org/2000/svg}circle")
    assert len(circles) == 36
    assert ammet.render_scatter_svg(rows) == svg


def test_curve_points():
    pts = ammet.curve_points(0.085, 0.75, 4)
    assert len(pts) == 4
    assert math.isclose(pts[0].beta, 1 / 0.085, rel_tol=1e-15)
    with pytest.raises(ammet.UsageError):
        ammet.curve_points(0.1, 0.1, 2)
