import json
import warnings
from pathlib import Path

import pytest

from lanebench_plots import (
    Series,
    family_bands,
    load_inputs,
    render_ratio_curves,
    render_time_bars,
)
from lanebench_plots import cli

FIXTURES = Path(__file__).parent / "fixtures"
JSON_FIXTURES = sorted(FIXTURES.glob("*.json"))


@pytest.fixture()
def series():
    return load_inputs(JSON_FIXTURES)


def test_ratio_curves_one_image_per_scenario(tmp_path, series):
    info = render_ratio_curves(series, tmp_path)
    assert sorted(info) == list(range(1, 9))
    for sid in range(1, 9):
        path = tmp_path / f"ratio-curves_scenario_{sid}.png"
        assert path.exists()
        assert info[sid]["path"] == path


def test_time_bars_one_image_per_scenario(tmp_path, series):
    info = render_time_bars(series, tmp_path)
    for sid in range(1, 9):
        assert (tmp_path / f"time-bars_scenario_{sid}.png").exists()
        assert info[sid]["omitted"] == []


def test_clipping_engaged_and_reported(tmp_path, series):
    info = render_ratio_curves(series, tmp_path, y_clip=200.0)
    clipped = info[8]["clipped"]
    assert len(clipped) == 1
    config, opt, value = clipped[0]
    assert (config, opt) == ("win_msvc", "O1")
    assert value == pytest.approx(910.0, rel=1e-9)
    # no other scenario trips the ceiling in the fixtures
    assert all(info[sid]["clipped"] == [] for sid in range(1, 8))


def test_higher_ceiling_disables_clipping(tmp_path, series):
    info = render_ratio_curves(series, tmp_path, y_clip=1000.0)
    assert all(info[sid]["clipped"] == [] for sid in range(1, 9))


def test_missing_scenario_omitted_with_warning(tmp_path, series):
    doc = json.loads((FIXTURES / "lin_gcc_O1.json").read_text())
    doc["results"] = [r for r in doc["results"] if r["scenario_id"] != 5]
    edited = tmp_path / "edited.json"
    edited.write_text(json.dumps(doc))
    inputs = load_inputs([edited] + [p for p in JSON_FIXTURES if "lin_gcc_O1" not in p.name])
    out = tmp_path / "charts"
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        info = render_ratio_curves(inputs, out)
    assert any("scenario 5" in str(w.message) for w in caught)
    assert info[5]["omitted"] == ["lin_gcc O1"]
    assert (out / "ratio-curves_scenario_5.png").exists()


def test_empty_vector_stats_bar_omitted_with_warning(tmp_path, series):
    doc = json.loads((FIXTURES / "lin_gcc_O1.json").read_text())
    doc["results"][0]["vector_stats"] = {"mean_ns": 0.0, "std_ns": 0.0, "count": 0}
    edited = tmp_path / "edited.json"
    edited.write_text(json.dumps(doc))
    inputs = load_inputs([edited] + [p for p in JSON_FIXTURES if "lin_gcc_O1" not in p.name])
    sid = doc["results"][0]["scenario_id"]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        info = render_time_bars(inputs, tmp_path / "charts")
    assert any("bar omitted" in str(w.message) for w in caught)
    assert info[sid]["omitted"] == ["lin_gcc O1: vector"]


def test_family_bands_group_configurations():
    inputs = load_inputs(JSON_FIXTURES)
    bands = family_bands(inputs)
    assert bands == [(0, 1, "linux"), (2, 3, "windows")]


def test_family_bands_contiguous_runs():
    def s(name, family):
        return Series(config_name=name, opt_level="O1", os_family=family)

    assert family_bands([]) == []
    assert family_bands([s("a", "linux")]) == [(0, 0, "linux")]
    mixed = [s("a", "linux"), s("b", "macos"), s("c", "macos"), s("d", "windows")]
    assert family_bands(mixed) == [(0, 0, "linux"), (1, 2, "macos"), (3, 3, "windows")]


def test_render_is_byte_stable(tmp_path, series):
    out1 = tmp_path / "run1"
    out2 = tmp_path / "run2"
    render_ratio_curves(series, out1)
    render_ratio_curves(series, out2)
    render_time_bars(series, out1)
    render_time_bars(series, out2)
    names = sorted(p.name for p in out1.iterdir())
    assert len(names) == 16
    for name in names:
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes(), name


def test_cli_ratio_curves(tmp_path, capsys):
    code = cli.main([str(p) for p in JSON_FIXTURES]
                    + ["--kind", "ratio-curves", "--out-dir", str(tmp_path)])
    assert code == 0
    assert len(list(tmp_path.glob("ratio-curves_scenario_*.png"))) == 8
    assert capsys.readouterr().out.count("wrote") == 8


def test_cli_accepts_csv_for_ratio_curves(tmp_path):
    code = cli.main([str(FIXTURES / "lin_gcc_O1.csv"),
                     "--kind", "ratio-curves", "--out-dir", str(tmp_path)])
    assert code == 0
    assert len(list(tmp_path.glob("*.png"))) == 8


def test_cli_rejects_csv_for_time_bars(tmp_path, capsys):
    code = cli.main([str(FIXTURES / "lin_gcc_O1.csv"),
                     "--kind", "time-bars", "--out-dir", str(tmp_path)])
    assert code == 2
    assert "os_family" in capsys.readouterr().err


def test_cli_time_bars(tmp_path):
    code = cli.main([str(p) for p in JSON_FIXTURES]
                    + ["--kind", "time-bars", "--out-dir", str(tmp_path)])
    assert code == 0
    assert len(list(tmp_path.glob("time-bars_scenario_*.png"))) == 8
