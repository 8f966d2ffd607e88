import pandas as pd
import yaml

from curvilinearguard.document.report_writer import (
    dump_report,
    sigma_table,
    write_csv,
    write_report_yaml,
)
from curvilinearguard.geometry.guard_pipeline import Strategy, run_guard_pipeline
from curvilinearguard.monotone.monotone_decomposer import decompose


def test_dump_report(square):
    text = dump_report(run_guard_pipeline(square, Strategy.EDGE_QUADRATIC).summary())
    assert text.startswith("---")
    content = yaml.safe_load(text)
    assert content["strategy"] == "edge-quadratic"
    assert list(content)[0] == "strategy"


def test_write_report_yaml(tmp_path, capsys):
    path = tmp_path / "reports" / "report.yml"
    write_report_yaml({"n": 4, "guards": [0, 2]}, str(path))
    assert yaml.safe_load(path.read_text()) == {"n": 4, "guards": [0, 2]}
    assert "✓ Write report report.yml" in capsys.readouterr().out


def test_sigma_table(tmp_path, square):
    table = sigma_table(decompose(square))
    assert list(table.columns) == ["j", "x", "y", "vertex", "sigma", "left", "right", "opposite"]
    assert len(table) == 6
    assert table["sigma"].tolist() == [0, 0, 1, -1, 0, 0]

    path = tmp_path / "sigma.csv"
    write_csv(table, str(path), quiet=True)
    assert len(pd.read_csv(path)) == 6
