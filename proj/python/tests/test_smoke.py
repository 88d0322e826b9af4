import math

import pytest

import seasonwarp as sw


def test_iso_week_boundaries():
    assert sw.iso_week_of(2021, 1, 3) == (2020, 53)
    assert sw.iso_week_of(2024, 12, 30) == (2025, 1)


def test_quantile_and_moments():
    assert sw.quantile([1.0, 2.0, 3.0, 4.0], 0.25) == 1.75
    m = sw.moments([1.0, 2.0, 3.0, 4.0, 10.0])
    assert m["mean"] == pytest.approx(4.0)
    assert m["skewness"] > 0


def test_jarque_bera_zero_sample():
    stat, p = sw.jarque_bera([-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1])
    assert stat == 0.0 and p == 1.0


def test_describe_identity_and_errors():
    values = [float(v) for v in range(1, 30)]
    s = sw.describe(values)
    assert s["cv_percent"] == pytest.approx(100 * s["std"] / s["mean"])
    with pytest.raises(sw.InsufficientDataError, match="jarque_bera"):
        sw.describe([1.0, 2.0])


def test_dtw_and_ranking():
    r = sw.dtw_align([0.0, 1.0, 2.0], [0.0, 2.0])
    assert r["total_cost"] == 1.0
    assert r["path_length"] == 3
    assert r["path"][0] == [1, 1] and r["path"][-1] == [3, 2]
    assert r["mean_cost"] == pytest.approx(1 / 3)
    assert sw.rank_pairs([39049, 23258, 29092]) == [3, 1, 2]
    assert sw.rank_pairs([102597, 188074, 143025]) == [1, 3, 2]
    with pytest.raises(sw.NoValidPathError):
        sw.dtw_align([1.0] * 6, [1.0, 2.0], band=2)


def test_seasonal_index_flat():
    table = sw.seasonal_index([5.0] * 104, start_year=2021)
    assert table["normalization_ok"]
    assert all(e["index"] == pytest.approx(100.0) for e in table["entries"])


def test_adf_rejects_stationary_series():
    x = [math.sin(0.7 * t) + 0.5 * math.cos(1.3 * t) + 0.3 * math.sin(0.11 * t * t) for t in range(120)]
    r = sw.adf_test(x, max_lag=4)
    assert r["test_statistic"] == pytest.approx(-11.16610504229484, rel=1e-8)
    assert r["reject_at_1pct"]


def test_spline_and_outliers():
    assert sw.spline_interpolate([0, 1, 2], [0, 1, 2], [0.5, 1.5]) == pytest.approx([0.5, 1.5])
    flags = sw.iqr_outliers([10, 11, 12, 13, 14, 15, 16, 17, 100, -40])
    assert flags == [(8, "high"), (9, "low")]


def test_fixture_and_cli(tmp_path):
    assert sw.generate_fixture(42) == sw.generate_fixture(42)
    csv = tmp_path / "fixture.csv"
    code, _, _ = sw.run_cli(["fixture", "--output", str(csv)])
    assert code == 0 and csv.read_text() == sw.generate_fixture(42)
    code, _, err = sw.run_cli(["stats", "--input", str(csv), "--out-dir", str(tmp_path / "out")])
    assert code == 0, err
    assert (tmp_path / "out" / "stats.json").exists()
    code, _, _ = sw.run_cli(["stats", "--input", str(tmp_path / "missing.csv"), "--out-dir", str(tmp_path)])
    assert code == 2
