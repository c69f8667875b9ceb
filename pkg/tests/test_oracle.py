import json

import pytest

from ddaha import oracle as o
from ddaha.afw import identity, length, simple_reflection


def test_bfs_small():
    assert o.bfs_group(3, 0) == [(identity(3), 0)]
    ball = o.bfs_group(3, 1)
    assert len(ball) == 4
    assert {w for w, d in ball if d == 1} == {simple_reflection(3, i) for i in range(3)}


def test_bfs_distance_is_length():
    for w, d in o.bfs_group(4, 3):
        assert length(w) == d


def test_bfs_resource_guard():
    with pytest.raises(o.ResourceLimitError):
        o.bfs_group(4, 6, max_elements=100)


def test_counts_agree_three_ways():
    # affine A_2: 1, 3, 6, 9, 12, ...
    assert o.poincare_counts(3, 4) == [1, 3, 6, 9, 12]
    assert o.window_length_counts(3, 4) == [1, 3, 6, 9, 12]
    counts = [0] * 5
    for _, d in o.bfs_group(3, 4):
        counts[d] += 1
    assert counts == [1, 3, 6, 9, 12]
    assert o.poincare_counts(2, 4) == [1, 2, 2, 2, 2]
    assert o.poincare_counts(4, 3) == o.window_length_counts(4, 3) == [1, 4, 10, 20]


def test_dot_orbit_examples():
    assert (1, 1) in o.dot_orbit((0, 2), 3, 2)
    assert o.dot_orbit((5,), 2, 3) == {(5,)}
    with pytest.raises(ValueError):
        o.dot_orbit((0, 0), 0, 1)


def test_params_in_box():
    pairs = list(o.params_in_box(2, 1, (0, 2), 2))
    assert all(pp.in_I_star() and pp.n <= 2 for pp in pairs)
    assert len(pairs) == len(set(pairs)) == 4


def test_empty_box_gives_empty_report():
    assert o.run_sweep(o.SweepConfig(entry_box=(1, 0))) == []


def test_unknown_suite():
    with pytest.raises(KeyError):
        o.run_sweep(o.SweepConfig(), ["nosuch"])


def test_fault_injection_is_detected():
    [rep] = o.run_sweep(o.SweepConfig(), ["fault"])
    assert rep["failures"]
    assert any("commute" in f for f in rep["failures"][0]["failures"])


def test_report_is_json():
    [rep] = o.run_sweep(o.SweepConfig(n_max=3, p_max=2, kappa_range=(1, 2), entry_box=(-1, 1)), ["pairs"])
    assert json.loads(json.dumps(rep)) == rep
    assert rep["cases"] > 0 and rep["failures"] == []


def test_sweep_is_deterministic():
    cfg = o.SweepConfig(n_max=3, p_max=2, kappa_range=(1, 2), entry_box=(-1, 1), length_bound=2)
    a = o.run_sweep(cfg, ["params", "afw", "varpi_twist"])
    assert a == o.run_sweep(cfg, ["params", "afw", "varpi_twist"])
    assert [r["suite"] for r in a] == ["afw", "params", "varpi_twist"]


def test_config_validation():
    with pytest.raises(ValueError):
        o.SweepConfig(n_max=0)
    with pytest.raises(ValueError):
        o.SweepConfig(kappa_range=(0, 2))
    assert o.SweepConfig.from_dict({"entry_box": [-1, 1]}).entry_box == (-1, 1)


def test_small_module_sweep():
    cfg = o.SweepConfig(n_max=3, p_max=3, kappa_range=(1, 1), entry_box=(-1, 1))
    rep = o.suite_modules(cfg)
    assert rep.cases > 0 and rep.passed, rep.failures[:3]
