"""Acceptance gate: one test per criterion, each printing a pass/fail line.

All criteria are evaluated from a single full-budget verification run
(seed 7). Tolerances are pinned here, independently of the tolerance
table inside the verification engine, so a loosened engine cannot
silently weaken the gate.
"""

import numpy as np
import pytest

from lgwigner.verify import run_suite

SEED = 7


@pytest.fixture(scope="module")
def report():
    rep = run_suite("all", seed=SEED, budget="full")
    return {check.name: check for check in rep.checks}


def _criterion(num, label, pairs):
    """Assert every (err, tol) pair and print the one-line verdict.

    The printed error/tolerance pair is the binding one (largest ratio),
    so the line is self-consistent even when sub-checks carry different
    tolerances.
    """
    ok = all(err <= tol for err, tol in pairs)
    status = "PASS" if ok else "FAIL"
    err, tol = max(pairs, key=lambda p: p[0] / p[1])
    print(f"{status} criterion {num:02d} [{label}] max_err={err:.3e} tol={tol:.0e}")
    for err, tol in pairs:
        assert err <= tol, f"criterion {num} [{label}]: {err:.3e} > {tol:.0e}"


def test_criterion_01_closed_form_vs_oracle(report):
    check = report["hermite_closed_vs_quadrature"]
    assert check.samples == 81 * 21 * 21
    assert check.elapsed_ms <= 30_000.0
    _criterion(1, "closed form vs quadrature oracle", [(check.max_abs_err, 1e-8)])


def test_criterion_02_lg_as_wigner(report):
    check = report["lg_mode_equals_hermite_closed"]
    assert check.samples == 81 * 21 * 21
    _criterion(2, "LG mode equals Wigner closed form", [(check.max_abs_err, 1e-12)])


def test_criterion_03_fixed_point(report):
    quad_path = report["fixed_point_quadrature"]
    fft_path = report["rotfft_fixed_point"]
    _criterion(
        3,
        "ground-state fixed point",
        [(quad_path.max_abs_err, 1e-10), (fft_path.max_abs_err, 1e-6)],
    )


def test_criterion_04_standard_properties(report):
    _criterion(
        4,
        "hermiticity and marginal/total integrals",
        [
            (report["hermiticity"].max_abs_err, 1e-8),
            (report["xi_marginal"].max_abs_err, 1e-8),
            (report["x_marginal"].max_abs_err, 1e-8),
            (report["total_integral"].max_abs_err, 1e-7),
        ],
    )


def test_criterion_05_moyal(report):
    check = report["moyal_kronecker"]
    assert check.samples == (6 * 6) ** 2  # full 4-index structure, indices <= 5
    _criterion(5, "Moyal 4-index Kronecker", [(check.max_abs_err, 1e-8)])


def test_criterion_06_intertwining(report):
    names = (
        "intertwine_Aplusdag_a1dag",
        "intertwine_Aminusdag_a2dag",
        "intertwine_Aplus_a1",
        "intertwine_Aminus_a2",
    )
    for name in names:
        assert report[name].samples == 25 * 50  # indices <= 4, 50 seeded points
    _criterion(6, "ladder intertwining", [(report[name].max_abs_err, 1e-6) for name in names])


def test_criterion_07_product_theorem(report):
    check = report["lg_product_vs_quadrature2d"]
    assert check.samples == 32
    assert check.elapsed_ms <= 3_600_000.0
    _criterion(7, "LG product law vs 2D oracle", [(check.max_abs_err, 1e-6)])


def test_criterion_08_diagonal_formulas(report):
    lg = report["lg_diag_consistency"]
    hg = report["hg_diag_consistency"]
    assert lg.samples == 100 and hg.samples == 100
    _criterion(
        8, "diagonal closed forms", [(lg.max_abs_err, 1e-12), (hg.max_abs_err, 1e-12)]
    )


def test_criterion_09_polarization(report):
    check = report["polarization_identity"]
    assert check.samples == 20
    _criterion(9, "polarization identity", [(check.max_abs_err, 1e-8)])


def test_criterion_10_unitarity(report):
    check = report["wtilde_inner_products"]
    assert check.samples == 10 * 10  # all pairs of 10 superpositions
    _criterion(10, "transform unitarity", [(check.max_abs_err, 1e-6)])


def test_criterion_11_weyl_pairing(report):
    names = ("weyl_pairing_one", "weyl_pairing_x", "weyl_pairing_xi", "weyl_pairing_x2_plus_xi2")
    for name in names:
        assert report[name].samples == 25  # mode pairs up to degree 4
    # the "one" check folds in the Kronecker-delta reproduction
    _criterion(11, "quantization pairing", [(report[name].max_abs_err, 1e-6) for name in names])


def test_criterion_12_beam(report):
    waist = report["waist_plane_matches_lg"]
    gouy = report["gouy_at_rayleigh"]
    norm = report["transverse_norm_constant"]
    assert waist.max_abs_err < 1e-8  # strict, per the stated criterion
    _criterion(
        12,
        "beam waist/Gouy/norm",
        [(waist.max_abs_err, 1e-8), (gouy.max_abs_err, 1e-12), (norm.max_abs_err, 1e-8)],
    )
