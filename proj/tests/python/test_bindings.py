"""Smoke tests for the python extension module."""

import math

import numpy as np
import pytest

import landau_spectra as ls


def test_closed_forms():
    assert ls.psi(2.0, math.pi / 2) == pytest.approx(1.0)
    assert ls.d_a_psi(2.0, math.pi / 2) == pytest.approx(-0.5)
    assert ls.a_psi(2.0, math.pi / 2) == pytest.approx(1.5)
    ut, up = ls.u_tilde(2.0, math.pi / 2)
    assert ut == pytest.approx(-0.5)
    assert up == pytest.approx(-1.0)
    assert ls.beta0(2.0) > ls.beta0(3.0) > ls.beta0(10.0) > 0
    assert ls.f0(2.0, 1.0) == 0.0
    assert ls.h0(2.0, -1.0) == 0.0
    assert ls.sigma_from_lambda(math.exp(2 * math.pi)) == pytest.approx(1.0)


def test_params_validation():
    p = ls.Params(a=2.0, sigma=1.0, n=1, N=50)
    assert p.delta == pytest.approx(math.pi / 51)
    with pytest.raises(ValueError):
        ls.Params(a=0.9, sigma=1.0, n=0, N=50)


def test_assemble_shapes_and_identities():
    p = ls.Params(a=2.0, sigma=0.7, n=2, N=40)
    L = ls.assemble("L", p)
    assert L.shape == (40, 40)
    assert L.dtype == np.complex128
    # mode collapse: L_n(sigma) equals L_1(n sigma) entrywise
    L1 = ls.assemble("L", ls.Params(a=2.0, sigma=1.4, n=1, N=40))
    assert np.array_equal(L, L1)
    # zero mode is real
    L0 = ls.assemble("L", ls.Params(a=2.0, sigma=0.0, n=0, N=40))
    assert np.all(L0.imag == 0.0)


def test_spectrum_gegenbauer():
    rep = ls.spectrum("A", a=2.0, N=160)
    evs = sorted(ev.real for ev in rep["eigenvalues"])
    assert evs[0] == pytest.approx(2.0, rel=1e-2)
    assert evs[1] == pytest.approx(6.0, rel=1e-2)
    assert evs[2] == pytest.approx(12.0, rel=1e-2)


def test_spectrum_stream_diagnostics():
    rep = ls.spectrum("L", a=2.0, N=320)
    assert rep["min_real"] == pytest.approx(-6.5386e-04, rel=0.1)
    assert rep["second_min_real"] == pytest.approx(23.0448, rel=1e-2)
    assert rep["max_abs_imag"] == 0.0
    gen = ls.spectrum("L", a=2.0, sigma=1.0, n=1, N=60, form="generalized")
    red = ls.spectrum("L", a=2.0, sigma=1.0, n=1, N=60)
    assert gen["min_real"] == pytest.approx(red["min_real"], rel=1e-8, abs=1e-8)


def test_kernel_and_oracle():
    r160 = ls.kernel_residual(2.0, 160)
    r320 = ls.kernel_residual(2.0, 320)
    assert r320["interior"] < 0.35 * r160["interior"]

    p = ls.Params(a=2.0, sigma=0.0, n=0, N=160)
    nodes = ls.grid_nodes(p)
    H0 = np.array([ls.h0(2.0, z) for z in np.cos(nodes)])
    out = ls.apply_tilde_L0(2.0, 160, H0)
    inner = out[16:-16]
    assert np.max(np.abs(inner)) < 1e-4


def test_asymptotics():
    assert ls.re_mu2(100.0, 320) == pytest.approx(5.0, rel=2e-3)
    first = ls.first_order_imaginary(10.0, 160)
    assert first["residual_norm"] <= 1e-8
    assert first["orthogonality"] <= 1e-10
    min_real, asym = ls.small_sigma_consistency(10.0, 0.01, 160)
    assert 0.3 < min_real / asym < 3.0


def test_swirl():
    ok, rows = ls.m_positivity_sweep([1.1, 2.0], [0.5], [0, 1], 100)
    assert ok
    assert len(rows) == 4
    assert all(r["min_real"] > 0 for r in rows)
    sym = ls.weight_symmetry_defect("symmetrizing", 2.0, 320, trials=5)
    unit = ls.weight_symmetry_defect("unit", 2.0, 320, trials=5)
    assert unit > 10 * sym
