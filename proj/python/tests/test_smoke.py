import math

import pytest

import sphmean


def test_special_functions():
    assert sphmean.sph_bessel_j(3, 0.0) == 1.0
    assert sphmean.raw_j(0, 2.0) == pytest.approx(math.sin(2.0) / 2.0, rel=1e-15)
    assert sphmean.omega(3) == pytest.approx(4 * math.pi)
    z = sphmean.bessel_zeros(0, 3)
    assert z == pytest.approx([math.pi, 2 * math.pi, 3 * math.pi], rel=1e-13)


def test_forward_and_range():
    g = sphmean.forward(0.5, 0.3, 3, t=[0.1, 1.0, 1.9])
    assert g[0] == 0.0 and g[2] == 0.0
    assert g[1] > 0.0
    assert sphmean.range_check(0.5, 0.3, 5)["normalized"] < 1e-6
    rep = sphmean.range_check(0.5, 0.3, 3, m=1)
    assert rep["route_mismatch"] < 1e-6


def test_spectral_identities():
    assert max(sphmean.cross_check(0.5, 0.3, 3, [0.5, 10.0])) < 1e-8
    lam, t = sphmean.mk_samples(1, 1)[0]
    assert sphmean.mk_residual(2, lam, t) < 1e-8
    assert sphmean.zero_oracle(0.5, 0.3, 3)["max_ratio"] < 1e-6


def test_ucp_and_identities():
    rep = sphmean.ucp_demo(grid=201)
    assert rep["pass"] and rep["f_zero_on_ball"]
    assert all(cases == passed for _, _, cases, passed in sphmean.identities(3))


def test_invert_runs():
    rep = sphmean.invert(0.5, 0.3, 3, unknowns=20, collocation=40)
    assert len(rep["f"]) == 20
    assert rep["effective_rank"] >= 5


def test_bad_dimension_raises():
    with pytest.raises(ValueError):
        sphmean.forward(0.5, 0.3, 4, t=[0.5])
