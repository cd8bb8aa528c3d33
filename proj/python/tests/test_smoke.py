import math
from pathlib import Path

import numpy as np
import pytest

import gaborframes as gf

DATA = Path(__file__).resolve().parents[2] / "data"


def example_a():
    s = 1 / math.sqrt(2)
    return gf.GaborSystem(2, 3, [gf.Window(0, [s, s]), gf.Window(2, [s])])


def test_parseval_example():
    sys = gf.construct_parseval(2, 2, 3)
    assert sys.L == 2
    assert gf.parseval_check_exact(sys) is True
    report = gf.analyze(sys)
    assert report["is_parseval"]
    assert not report["is_riesz"]


def test_orthonormal_example():
    sys = gf.construct_orthonormal(3, 4, 12)
    assert gf.orthonormal_check_exact(sys) is True
    report = gf.analyze(sys)
    assert report["card_SN"] == report["LM"] == 12


def test_energy_matches_coefficient_sum():
    sys = example_a()
    f = gf.Window(-1, [1.0, 2j, -0.5])
    assert gf.energy(sys, f) == pytest.approx(1.0 + 4.0 + 0.25)


def test_correlation_table_entries():
    sys = gf.GaborSystem(2, 2, [gf.Window(0, [1.0, 0.0, 1.0])])
    t = gf.correlation_table(sys)
    assert t[(0, 0)] == 2
    assert t[(0, 1)] == 1
    assert t[(0, -1)] == 1


def test_dual_completion():
    g = gf.GaborSystem(3, 4, [gf.Window(0, [1.0, 0.5j])])
    h = gf.GaborSystem(3, 4, [gf.Window(1, [0.3, -1.0])])
    G, H = gf.dual_completion(g, h)
    assert gf.dual_check(G, H)
    f = gf.Window(-2, [1.0, -1j, 0.25, 2.0])
    rebuilt = gf.apply_frame_operator(G, H, f)
    assert max(abs(rebuilt(j) - f(j)) for j in range(-5, 6)) < 1e-10


def test_perturbation():
    A, B, R = gf.perturbation_bound(example_a(), example_a().scaled(0.9), 1.0, 1.0)
    assert R == pytest.approx(0.01)
    assert A == pytest.approx(0.81)
    assert B == pytest.approx(1.21)


def test_zak_and_gaussian():
    g = gf.truncated_gaussian()
    assert not gf.common_zero_check(gf.GaborSystem(2, 2, [g]))
    assert gf.frame_check_NM(gf.GaborSystem(3, 3, [g]))["is_frame"]
    z = gf.zak_grid(gf.Window.delta(0), 2, 8)
    assert z.shape == (2, 8)
    assert np.allclose(z[0], 1.0) and np.allclose(z[1], 0.0)


def test_kframe_model():
    sys = gf.GaborSystem.load(str(DATA / "example_b_minus_last.json"))
    model = gf.FiniteModel(sys)
    K = gf.range_projector(model)
    assert model.P == 12
    assert gf.douglas_range_check(model, K)
    v = gf.kframe_verdict(model, K)
    assert v["is_kframe"] and v["A_opt"] == pytest.approx(1.0) and v["B"] == pytest.approx(1.0)
    assert gf.k_minimality_check(model)
    assert not gf.douglas_range_check(model, np.eye(12, dtype=complex))


def test_errors_carry_kind():
    with pytest.raises(gf.GaborError, match="DensityViolation"):
        gf.construct_parseval(1, 2, 3)
    with pytest.raises(gf.GaborError, match="InvalidSet"):
        gf.PeriodicSet(3, [])


def test_json_round_trip():
    sys = example_a()
    again = gf.GaborSystem.from_json(sys.to_json())
    assert again.windows[0] == sys.windows[0]
