"""Smoke tests for the python bindings, cross-checked against numpy."""

import math

import numpy as np
import pytest

import harper


def test_elliptic_values():
    assert harper.complete_k(0.0) == pytest.approx(math.pi / 2, abs=1e-14)
    assert harper.complete_k(0.5) == pytest.approx(1.6857503548125961, abs=1e-13)
    assert harper.landen_check(0.3) < 1e-10
    assert harper.incomplete_f(1.0, 0.3) == pytest.approx(
        harper.complete_k(0.3), abs=1e-10
    )


def test_periods_and_dos():
    assert harper.period_gamma(0.5) == pytest.approx(
        4 * harper.complete_k(0.5), abs=1e-8
    )
    tau_k, tau_inv = harper.tau_invariant(0.4)
    assert tau_k == pytest.approx(tau_inv, abs=1e-8)
    value, flag = harper.dos_elliptic(4.0)
    assert flag == "ok"
    assert value == pytest.approx(1 / (4 * math.pi), abs=1e-12)
    assert harper.dos_elliptic(0.0)[1] == "divergent"
    assert harper.dos_from_half_periods(2.0, 3, 5) == pytest.approx(
        harper.dos_elliptic(2.0, 3, 5)[0], rel=1e-8
    )


def test_harper_matrix_against_numpy():
    m = harper.harper_matrix(3, 5, 0.3, 0.1, 0, 0)
    assert m.shape == (15, 15)
    assert np.allclose(m, m.conj().T, atol=0)  # Hermitian by construction
    ours, residual = harper.eigenvalues(m)
    ref = np.linalg.eigvalsh(m)
    assert np.max(np.abs(np.asarray(ours) - ref)) < 1e-10
    assert residual < 1e-10 * (1 + np.linalg.norm(m))


def test_random_hermitian_against_numpy():
    rng = np.random.default_rng(7)
    for n in (2, 5, 12):
        h = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        h = (h + h.conj().T) / 2
        ours, _ = harper.eigenvalues(h)
        assert np.max(np.abs(np.asarray(ours) - np.linalg.eigvalsh(h))) < 1e-10


def test_zeta_and_partition():
    assert harper.zeta_harper(0, 3, 5) == pytest.approx(1 / 30, abs=1e-8)
    assert harper.zeta_harper(3) == 0.0
    assert harper.zeta_harper(2) == pytest.approx(2.0, abs=1e-7)
    for n in range(9):
        assert harper.zeta_am_winding(n, 3, 0.37, 0, 2) == pytest.approx(
            harper.zeta_am_quadrature(n, 3, 0.37, 0, 2), abs=1e-9
        )
    value, truncation, converged = harper.partition_harper(1.0, 1, 1, 12)
    assert converged and truncation < 1e-10 * abs(value)


def test_butterfly():
    assert harper.convergents((math.sqrt(5) - 1) / 2, 7) == [
        (0, 1), (1, 1), (1, 2), (2, 3), (3, 5), (5, 8), (8, 13),
    ]
    bands = harper.bands_rational(1, 2)
    assert len(bands) == 1
    assert bands[0][0] == pytest.approx(-2 * math.sqrt(2), abs=1e-9)
    assert bands[0][1] == pytest.approx(2 * math.sqrt(2), abs=1e-9)

    fluxes, img = harper.render_butterfly(5, 32)
    assert img.shape == (32, len(fluxes))
    assert img.dtype == np.uint8
    # reflection symmetry of columns
    cols = {f: i for i, f in enumerate(fluxes)}
    for (p, q), i in cols.items():
        assert np.array_equal(img[:, i], img[:, cols[(q - p, q)]])


def test_validation_errors_map_to_python():
    with pytest.raises(ValueError):
        harper.bands_rational(2, 4)
    with pytest.raises(ValueError):
        harper.complete_k(1.5)
    with pytest.raises(ArithmeticError):
        harper.dos_from_half_periods(0.0, 1, 1)
