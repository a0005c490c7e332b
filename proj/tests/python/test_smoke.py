import math

import pytest

import chialvo as ch


def test_map_values():
    p = ch.MapParams(1.0, 0.0)
    assert ch.eval(p, 1.0) == pytest.approx(1.0, abs=1e-15)
    assert ch.deriv2_x(p, 1.0) == pytest.approx(-1.0, abs=1e-15)
    assert ch.schwarzian(p, 4.0) == pytest.approx(-0.34375, abs=1e-15)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        ch.MapParams(1.0, -1.0)
    with pytest.raises(ValueError):
        ch.fold_points(0.2)
    with pytest.raises(ArithmeticError):
        ch.misiurewicz_search(0.0, 2.5, 2.6)


def test_fixed_points_and_core():
    cfg = ch.find_fixed_points(ch.MapParams(2.436, 0.0))
    assert len(cfg) == 3
    assert cfg.points[2].x == pytest.approx(3.7605707379, abs=1e-9)
    assert cfg.points[2].stability == "repelling"
    core = ch.dynamical_core(ch.MapParams(2.5, 0.0))
    assert core.case_tag == "core_f2c_fc"


def test_bifurcations():
    flip = ch.flip_point(0.0)
    assert flip.x0 == 3.0
    assert flip.param0 == pytest.approx(3.0 - math.log(3.0), abs=1e-15)
    assert flip.criticality == "supercritical"
    num = ch.detect_bifurcation_numerically(0.0, 1.8, 2.0, "flip")
    assert abs(num.param0 - flip.param0) <= 1e-8
    fk = ch.fold_in_k(0.8)
    assert fk.x0 == pytest.approx(0.4695, abs=5e-4)
    assert fk.param0 == pytest.approx(0.1627, abs=5e-4)


def test_misiurewicz_and_chaos():
    res = ch.misiurewicz_search(0.0, 2.43, 2.44)
    assert res.r_star == pytest.approx(2.4362139183808, abs=1e-11)
    assert ch.misiurewicz_terms(0.0, 2.436).gamma == pytest.approx(-3.851, abs=2e-3)
    cells = ch.chaos_scan(2.6, 2.9, 0.01, 0.0, 0.0, 1.0)
    assert len(cells) == 31
    assert all(c.satisfied for c in cells)


def test_orbits():
    rep = ch.detect_periodic_attractor(ch.MapParams(2.258, 0.0))
    assert rep.kind == "periodic"
    assert rep.period == 4
    assert ch.kneading(ch.MapParams(2.7, 0.0), 1) == "1"
    lo, hi, mass, outside = ch.birkhoff_histogram(ch.MapParams(2.7, 0.0), 0.9, 10000, 20)
    assert sum(mass) + outside == pytest.approx(1.0)
    cols = ch.bifurcation_diagram("k", 0.0, 0.0, 1.0, 2.7)
    assert len(cols[0][2]) == 200


def test_full_model():
    fp = ch.FullParams(0.876, 0.0, 0.28, 0.0)
    assert ch.slow_plateau(fp, 5.0, 3.0, 80) == pytest.approx(2.258, abs=0.01)
    traj = ch.iterate2d(fp, 5.0, 3.0, 10)
    assert len(traj) == 11
    assert traj[0] == (5.0, 3.0)
