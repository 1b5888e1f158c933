"""Mode evaluation and ladder bookkeeping checks.

The pointwise operator applications are validated against the index-space
ladder rules, which were fixed independently from the differential
expressions, so agreement here is a genuine cross-check."""

import numpy as np
import pytest

from lgwigner import specfun
from lgwigner.modes import (
    ANNIHILATED,
    Basis,
    LadderOp,
    ModeIndex,
    apply_operator_pointwise,
    hg_field,
    hg_mode,
    ladder_index_action,
    lg_eigenvalues,
    lg_field,
    lg_mode,
)


def _trap(lo, hi, n):
    x = np.linspace(lo, hi, n)
    w = np.full(n, x[1] - x[0])
    w[0] *= 0.5
    w[-1] *= 0.5
    return x, w


def test_hg_mode_ground_and_zeros():
    assert hg_mode(ModeIndex.hg(0, 0), 0.0, 0.0) == pytest.approx(np.pi**-0.5, abs=1e-15)
    for y in (-2.0, 0.0, 0.3, 5.0):
        assert hg_mode(ModeIndex.hg(1, 0), 0.0, y) == 0.0


def test_hg_mode_tensor_symmetry():
    a = hg_mode(ModeIndex.hg(2, 3), 0.4, -1.1)
    b = hg_mode(ModeIndex.hg(3, 2), -1.1, 0.4)
    assert a == pytest.approx(b, rel=1e-14)


def test_lg_ground_state():
    for x, y in [(0.0, 0.0), (1.0, -0.5), (0.3, 2.0)]:
        want = np.pi**-0.5 * np.exp(-0.5 * (x * x + y * y))
        assert lg_mode(ModeIndex.lg(0, 0), x, y) == pytest.approx(want, abs=1e-15)


def test_lg_spot_value():
    assert lg_mode(ModeIndex.lg(1, 0), 1.0, 0.0) == pytest.approx(
        np.pi**-0.5 * np.exp(-0.5), abs=1e-15
    )


def test_lg_index_swap_conjugates():
    rng = np.random.default_rng(11)
    for _ in range(20):
        n_plus, n_minus = (int(v) for v in rng.integers(0, 6, 2))
        x, y = rng.uniform(-2.5, 2.5, 2)
        a = lg_mode(ModeIndex.lg(n_plus, n_minus), x, y)
        b = lg_mode(ModeIndex.lg(n_minus, n_plus), x, y)
        assert a == pytest.approx(np.conj(b), abs=1e-14)


def test_lg_equal_indices_branch_agreement():
    # mirror-branch formula written out directly in the test
    xs = np.linspace(-3.0, 3.0, 13)
    xg, yg = xs[:, None], xs[None, :]
    rho = xg * xg + yg * yg
    for n in range(9):
        got = lg_mode(ModeIndex.lg(n, n), xg, yg)
        want = np.pi**-0.5 * (-1.0) ** n * np.exp(-0.5 * rho) * specfun.laguerre(n, 0, rho)
        assert np.abs(got - want).max() <= 1e-12


def test_lg_azimuthal_structure():
    rng = np.random.default_rng(3)
    for _ in range(25):
        n_plus, n_minus = (int(v) for v in rng.integers(0, 7, 2))
        r = rng.uniform(0.1, 3.0)
        phi = rng.uniform(-np.pi, np.pi)
        idx = ModeIndex.lg(n_plus, n_minus)
        rotated = lg_mode(idx, r * np.cos(phi), r * np.sin(phi))
        base = lg_mode(idx, r, 0.0)
        want = np.exp(1j * (n_plus - n_minus) * phi) * base
        assert rotated == pytest.approx(want, abs=1e-10)


def test_lg_angular_momentum_eigenrelation():
    # -i d/dphi applied by central differences equals (n_plus - n_minus)
    step = 1e-5
    rng = np.random.default_rng(4)
    for _ in range(15):
        n_plus, n_minus = (int(v) for v in rng.integers(0, 5, 2))
        idx = ModeIndex.lg(n_plus, n_minus)
        r = rng.uniform(0.3, 2.5)
        phi = rng.uniform(-np.pi, np.pi)

        def at(angle):
            return lg_mode(idx, r * np.cos(angle), r * np.sin(angle))

        deriv = -1j * (at(phi + step) - at(phi - step)) / (2 * step)
        want = (n_plus - n_minus) * at(phi)
        assert deriv == pytest.approx(want, abs=1e-6)


def test_lg_grid_normalization():
    axis, w = _trap(-8.0, 8.0, 161)
    w2 = np.outer(w, w)
    for n_plus in range(5):
        for n_minus in range(5):
            if n_plus + n_minus > 8:
                continue
            vals = lg_mode(ModeIndex.lg(n_plus, n_minus), axis[:, None], axis[None, :])
            norm = np.sqrt(np.sum(np.abs(vals) ** 2 * w2))
            assert abs(norm - 1.0) <= 1e-8


def test_lg_eigenvalues():
    assert lg_eigenvalues(ModeIndex.lg(0, 0)) == (0, 0)
    assert lg_eigenvalues(ModeIndex.lg(2, 1)) == (3, 1)
    assert lg_eigenvalues(ModeIndex.lg(0, 4)) == (4, -4)


def test_ladder_index_action_examples():
    coeff, idx = ladder_index_action(LadderOp.APLUSDAG, ModeIndex.lg(2, 1))
    assert coeff == pytest.approx(np.sqrt(3.0)) and idx == ModeIndex.lg(3, 1)

    coeff, idx = ladder_index_action(LadderOp.AMINUS, ModeIndex.lg(5, 0))
    assert coeff == 0.0 and idx is ANNIHILATED

    coeff, idx = ladder_index_action(LadderOp.A1, ModeIndex.hg(0, 4))
    assert coeff == 0.0 and idx is ANNIHILATED

    coeff, idx = ladder_index_action(LadderOp.A2, ModeIndex.hg(3, 2))
    assert coeff == pytest.approx(np.sqrt(2.0)) and idx == ModeIndex.hg(3, 1)


def test_ladder_index_action_basis_mismatch():
    with pytest.raises(ValueError):
        ladder_index_action(LadderOp.A1, ModeIndex.lg(1, 1))
    with pytest.raises(ValueError):
        ladder_index_action(LadderOp.APLUS, ModeIndex.hg(1, 1))


def test_apply_operator_annihilates_ground_state():
    fld = lg_field(ModeIndex.lg(0, 0))
    for op in (LadderOp.APLUS, LadderOp.AMINUS):
        for x, y in [(0.0, 0.0), (0.7, -1.3), (-2.0, 0.4)]:
            assert abs(apply_operator_pointwise(op, fld, x, y)) <= 1e-8
            assert abs(apply_operator_pointwise(op, fld, x, y, mode="analytic")) <= 1e-14


def test_apply_operator_matches_index_action_examples():
    fld = hg_field(ModeIndex.hg(0, 0))
    for x, y in [(0.2, 0.9), (-1.0, 0.0)]:
        got = apply_operator_pointwise(LadderOp.A1DAG, fld, x, y)
        want = hg_mode(ModeIndex.hg(1, 0), x, y)
        assert got == pytest.approx(want, abs=1e-8)

    fld = lg_field(ModeIndex.lg(1, 0))
    got = apply_operator_pointwise(LadderOp.APLUSDAG, fld, 0.3, -0.7)
    want = np.sqrt(2.0) * lg_mode(ModeIndex.lg(2, 0), 0.3, -0.7)
    assert got == pytest.approx(want, abs=1e-6)


def test_pointwise_ladder_consistency_random():
    rng = np.random.default_rng(12)
    ops = list(LadderOp)
    for _ in range(100):
        op = ops[rng.integers(0, len(ops))]
        basis = Basis.HG if op.value.startswith("a") else Basis.LG
        idx = ModeIndex(int(rng.integers(0, 6)), int(rng.integers(0, 6)), basis)
        fld = hg_field(idx) if basis is Basis.HG else lg_field(idx)
        x, y = rng.uniform(-2.0, 2.0, 2)
        coeff, target = ladder_index_action(op, idx)
        if target is ANNIHILATED:
            want = 0.0
        elif basis is Basis.HG:
            want = coeff * hg_mode(target, x, y)
        else:
            want = coeff * lg_mode(target, x, y)
        assert abs(apply_operator_pointwise(op, fld, x, y) - want) <= 1e-6
        assert abs(apply_operator_pointwise(op, fld, x, y, mode="analytic") - want) <= 1e-10


def test_analytic_mode_requires_basis_field():
    plain = lambda x, y: np.exp(-(x * x + y * y))
    with pytest.raises(ValueError):
        apply_operator_pointwise(LadderOp.A1, plain, 0.1, 0.2, mode="analytic")
    with pytest.raises(ValueError):
        apply_operator_pointwise(LadderOp.A1, plain, 0.1, 0.2, mode="nonsense")


def test_mode_index_validation():
    with pytest.raises(ValueError):
        ModeIndex.hg(-1, 0)
    with pytest.raises(ValueError):
        ModeIndex.lg(0, 65)
    with pytest.raises(TypeError):
        ModeIndex(0.5, 0, Basis.HG)
    with pytest.raises(ValueError):
        hg_mode(ModeIndex.lg(1, 1), 0.0, 0.0)
    with pytest.raises(ValueError):
        lg_mode(ModeIndex.hg(1, 1), 0.0, 0.0)
    with pytest.raises(ValueError):
        ModeIndex.hg(1, 1).total_number
