import math

import numpy as np
import pytest

import pseudodicke as pd


def test_validate_quasi_hermitian():
    p = pd.ModelParams(alpha=1.0, beta=2.0, gamma=2.0, delta=4.0)
    rep = pd.validate(p)
    assert rep.quasi_hermitian
    assert rep.positivity_ok
    assert rep.case_tag == "no_theta"
    assert rep.violated_conditions == []


def test_validate_rejects_mixed_signs():
    rep = pd.validate(pd.ModelParams(alpha=1.0, beta=-1.0))
    assert not rep.quasi_hermitian
    assert any("alpha" in c for c in rep.violated_conditions)


def test_hamiltonian_shape_and_parity():
    p = pd.ModelParams(alpha=1.0, beta=2.0, gamma=2.0, delta=4.0, j=1.0, cutoff=6)
    h = pd.build_hamiltonian(p)
    dim = 7 * 3
    assert h.shape == (dim, dim)
    signs = np.array([(-1) ** (n + m) for n in range(7) for m in range(3)])
    pi = np.diag(signs.astype(complex))
    assert np.max(np.abs(h @ pi - pi @ h)) == 0.0


def test_residual_small():
    p = pd.ModelParams(
        theta1=0.4, theta2=0.2, alpha=0.9, beta=0.45, gamma=0.9, delta=0.225,
        xi1=0.3, xi2=-0.7, xi3=0.1, j=1.0, cutoff=10,
    )
    assert pd.validate(p).quasi_hermitian
    assert pd.pseudo_hermiticity_residual(p) < 1e-12
    image = pd.build_image(p)
    assert np.max(np.abs(image - image.conj().T)) < 1e-12


def test_spectra_match():
    p = pd.nonhermitian_dicke(2.0, 0.5, 1, 1.0, 12)
    sc = pd.compare_spectra(p)
    assert sc.params_valid
    assert sc.max_pairwise_gap < 1e-8 * max(1.0, sc.h_norm)
    assert sc.reality_defect < 1e-8 * max(1.0, sc.h_norm)
    assert len(sc.eigenvalues_h) == len(sc.eigenvalues_image) == 13 * 3


def test_swanson_levels():
    red = pd.reduce(pd.swanson(2.0, 0.5, 0.5, 0.0, 40))
    blocks = pd.exact_spectrum(red, 0.0, 12)
    levels = pd.flatten_spectrum(blocks)
    target = pd.swanson_spectrum(2.0, 0.5, 0.5, 12)
    assert np.allclose(levels, target, atol=1e-12)


def test_eigensystem_parity_labels():
    p = pd.nonhermitian_dicke(2.0, 0.5, 1, 0.5, 8)
    sol = pd.solve_eigensystem(p)
    assert sorted(set(sol.parity)) == [-1, 1]
    assert list(sol.eigenvalues) == sorted(sol.eigenvalues)


def test_scan_records():
    sweep = pd.SweepSpec(param="lambda2", start=0.2, stop=1.0, steps=3,
                         j_list=[0.5, 1.0])
    records = pd.scan(sweep, pd.ConvergenceSettings(min_cutoff=16, max_cutoff=64))
    assert len(records) == 6
    assert records[0].coupling == 0.2
    assert all(r.converged for r in records)
    assert all(math.isfinite(r.jz_over_j) for r in records)


def test_validation_error_raised():
    bad = pd.ModelParams(alpha=1.0, beta=-1.0)
    with pytest.raises(pd.ValidationError):
        pd.build_image(bad)


def test_order_parameter_worked_point():
    jz, n = pd.analytic_order_params_dicke(1.0, 1.0, 1.0)
    assert abs(jz + 0.25) < 1e-12
    assert abs(n - 1.875) < 1e-12
    g = pd.analytic_order_params_general(pd.standard_dicke(1.0, 2.0, 16))
    assert abs(g.jz_over_j - jz) < 1e-12
    assert abs(g.n_over_j - n) < 1e-12
