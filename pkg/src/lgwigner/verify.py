"""Verification engine: every identity the library implements, bundled
into named suites with per-check tolerances and machine-readable reports.

Each suite draws its sample points from a seeded generator, so a report
is reproducible from ``(suite, seed, budget)``. The ``quick`` budget caps
mode indices at 3 and random samples at 8 per check; ``full`` runs the
documented limits. Tolerances are fixed per check from the quadrature
error budget: 1e-10 to 1e-12 where only closed forms and spectrally
accurate quadrature meet, loosened to 1e-6 where finite differences,
interpolation, or the two-dimensional oracle enter.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from . import beam as _beam
from .modes import (
    ANNIHILATED,
    LadderOp,
    ModeIndex,
    apply_operator_pointwise,
    hg_mode,
    ladder_index_action,
    lg_mode,
)
from .specfun import hermite_function, hermite_function_table
from .wigner import (
    DEFAULT_QUAD,
    Grid2D,
    PhasePoint4,
    QuadratureSpec,
    extended_wigner,
    extended_wigner_grid,
    extended_wigner_rotfft,
    wigner1d,
    wigner1d_grid,
    wigner2d,
    wigner_hermite_closed,
    wigner_hg_closed,
    wigner_hg_diag,
    wigner_lg_closed,
    wigner_lg_diag,
)

__all__ = [
    "CheckResult",
    "SuiteReport",
    "SUITE_NAMES",
    "SUITE_CHECKS",
    "SIGMA_SYMBOLS",
    "run_suite",
    "weyl_pairing_check",
]

SQRT2 = np.sqrt(2.0)

#: Symbols accepted by :func:`weyl_pairing_check`.
SIGMA_SYMBOLS = ("one", "x", "xi", "x2+xi2")

_SIGMA_TAGS = {"one": "one", "x": "x", "xi": "xi", "x2+xi2": "x2_plus_xi2"}


@dataclass
class CheckResult:
    """Outcome of one named identity check."""

    name: str
    max_abs_err: float
    tolerance: float
    passed: bool
    samples: int
    elapsed_ms: float

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "max_abs_err": self.max_abs_err,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "samples": self.samples,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class SuiteReport:
    """All check results of one suite run, with the seed that produced it."""

    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    passed: bool = True
    seed: int = 0

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


def _timed(name: str, tol: float, fn) -> CheckResult:
    t0 = time.perf_counter()
    err, samples = fn()
    elapsed = (time.perf_counter() - t0) * 1000.0
    err = float(err)
    return CheckResult(name, err, tol, err <= tol, int(samples), elapsed)


# ---------------------------------------------------------------------------
# shared sampling helpers


def _h(n: int):
    return lambda t, n=n: hermite_function(n, t)


def _hg_callable(j: int, k: int):
    return lambda u, v, j=j, k=k: hermite_function(j, u) * hermite_function(k, v)


def _lg_callable(j: int, k: int):
    idx = ModeIndex.lg(j, k)
    return lambda u, v, idx=idx: lg_mode(idx, u, v)


def _superposition_1d(coeffs: np.ndarray):
    deg = len(coeffs) - 1

    def f(t):
        return np.einsum("j,j...->...", coeffs, hermite_function_table(deg, t))

    return f


def _superposition_2d(coeffs: np.ndarray):
    deg = coeffs.shape[0] - 1

    def f(u, v):
        u, v = np.broadcast_arrays(np.asarray(u, float), np.asarray(v, float))
        tu = hermite_function_table(deg, u)
        tv = hermite_function_table(deg, v)
        return np.einsum("jk,j...,k...->...", coeffs, tu, tv)

    return f


def _random_coeffs(rng, shape) -> np.ndarray:
    c = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    return c / np.linalg.norm(c)


def _trap_axis(lo: float, hi: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    x = np.linspace(lo, hi, n)
    w = np.full(n, x[1] - x[0])
    w[0] *= 0.5
    w[-1] *= 0.5
    return x, w


# ---------------------------------------------------------------------------
# suites


def _suite_properties(seed: int, quick: bool) -> list[CheckResult]:
    rng = np.random.default_rng([seed, 1])
    deg = 3 if quick else 8
    checks = []

    def hermiticity():
        npairs = 2 if quick else 3
        npts = 8 if quick else 50
        worst = 0.0
        for _ in range(npairs):
            f = _superposition_1d(_random_coeffs(rng, deg + 1))
            g = _superposition_1d(_random_coeffs(rng, deg + 1))
            pts = rng.uniform(-2.0, 2.0, size=(npts, 2))
            for x, xi in pts:
                worst = max(worst, abs(wigner1d(f, g, x, xi) - np.conj(wigner1d(g, f, x, xi))))
        return worst, npairs * npts

    checks.append(_timed("hermiticity", 1e-12, hermiticity))

    p_axis, p_w = DEFAULT_QUAD.grid()

    def xi_marginal():
        xs = rng.uniform(-2.0, 2.0, size=2 if quick else 4)
        worst = 0.0
        for m in range(deg + 1):
            for n in range(deg + 1):
                grid = wigner1d_grid(_h(m), _h(n), xs, p_axis)
                lhs = grid @ p_w
                rhs = np.sqrt(2 * np.pi) * hermite_function(m, xs / SQRT2) * hermite_function(
                    n, xs / SQRT2
                )
                worst = max(worst, np.abs(lhs - rhs).max())
        return worst, (deg + 1) ** 2 * len(xs)

    checks.append(_timed("xi_marginal", 1e-8, xi_marginal))

    def x_marginal():
        xis = rng.uniform(-2.0, 2.0, size=2 if quick else 4)
        worst = 0.0
        for m in range(deg + 1):
            for n in range(deg + 1):
                grid = wigner1d_grid(_h(m), _h(n), p_axis, xis)
                lhs = p_w @ grid
                # Fourier transform of each mode is itself times (-i)**degree
                phase = (1j) ** m * (-1j) ** n
                rhs = np.sqrt(2 * np.pi) * phase * hermite_function(
                    m, xis / SQRT2
                ) * hermite_function(n, xis / SQRT2)
                worst = max(worst, np.abs(lhs - rhs).max())
        return worst, (deg + 1) ** 2 * len(xis)

    checks.append(_timed("x_marginal", 1e-8, x_marginal))

    def total_integral():
        axis, w = _trap_axis(-12.0, 12.0, 256)
        worst = 0.0
        for m in range(deg + 1):
            for n in range(deg + 1):
                grid = wigner1d_grid(_h(m), _h(n), axis, axis)
                total = w @ grid @ w
                expect = 2.0 * np.sqrt(np.pi) if m == n else 0.0
                worst = max(worst, abs(total - expect))
        return worst, (deg + 1) ** 2

    checks.append(_timed("total_integral", 1e-7, total_integral))
    return checks


def _suite_moyal(seed: int, quick: bool) -> list[CheckResult]:
    deg = 3 if quick else 5

    def moyal():
        axis, w = _trap_axis(-10.0, 10.0, 201)
        pairs = [(a, b) for a in range(deg + 1) for b in range(deg + 1)]
        grids = {}
        for a, b in pairs:
            grids[a, b] = wigner1d_grid(_h(a), _h(b), axis, axis)
        w2 = np.outer(w, w)
        worst = 0.0
        for a, b in pairs:
            left = np.conj(grids[a, b]) * w2
            for c, d in pairs:
                ip = np.sum(left * grids[c, d])
                expect = 1.0 if (a == c and b == d) else 0.0
                worst = max(worst, abs(ip - expect))
        return worst, len(pairs) ** 2

    return [_timed("moyal_kronecker", 1e-8, moyal)]


def _suite_orthogonality(seed: int, quick: bool) -> list[CheckResult]:
    checks = []

    def hermite_orthonormality():
        nmax = 3 if quick else 12
        p, w = DEFAULT_QUAD.grid()
        table = hermite_function_table(nmax, p)
        gram = (table * w) @ table.T
        return np.abs(gram - np.eye(nmax + 1)).max(), (nmax + 1) ** 2

    checks.append(_timed("hermite_orthonormality", 1e-10, hermite_orthonormality))

    def lg_orthonormality():
        cap = 3 if quick else 4
        axis, w = _trap_axis(-8.0, 8.0, 161)
        w2 = np.outer(w, w)
        indices = [(a, b) for a in range(cap + 1) for b in range(cap + 1)]
        fields = {
            idx: lg_mode(ModeIndex.lg(*idx), axis[:, None], axis[None, :]) for idx in indices
        }
        worst = 0.0
        for ia in indices:
            left = np.conj(fields[ia]) * w2
            for ib in indices:
                ip = np.sum(left * fields[ib])
                worst = max(worst, abs(ip - (1.0 if ia == ib else 0.0)))
        return worst, len(indices) ** 2

    checks.append(_timed("lg_mode_orthonormality", 1e-8, lg_orthonormality))
    return checks


_INTERTWINE_PAIRS = (
    ("intertwine_Aplusdag_a1dag", LadderOp.APLUSDAG, LadderOp.A1DAG),
    ("intertwine_Aminusdag_a2dag", LadderOp.AMINUSDAG, LadderOp.A2DAG),
    ("intertwine_Aplus_a1", LadderOp.APLUS, LadderOp.A1),
    ("intertwine_Aminus_a2", LadderOp.AMINUS, LadderOp.A2),
)


def _suite_intertwine(seed: int, quick: bool) -> list[CheckResult]:
    cap = 3 if quick else 4
    npts = 8 if quick else 50
    checks = []
    for tag, (name, circ_op, cart_op) in enumerate(_INTERTWINE_PAIRS):

        def one_pair(circ_op=circ_op, cart_op=cart_op, tag=tag):
            rng = np.random.default_rng([seed, 4, tag])
            pts = rng.uniform(-2.0, 2.0, size=(npts, 2))
            worst = 0.0
            for j in range(cap + 1):
                for k in range(cap + 1):
                    hg = _hg_callable(j, k)
                    transformed = lambda x, y, hg=hg: extended_wigner(hg, x, y)
                    coeff, target = ladder_index_action(cart_op, ModeIndex.hg(j, k))
                    if target is ANNIHILATED:
                        rhs_fn = lambda x, y: 0.0
                    else:
                        tgt = _hg_callable(target.first, target.second)
                        rhs_fn = lambda x, y, tgt=tgt, c=coeff: c * extended_wigner(tgt, x, y)
                    for x, y in pts:
                        lhs = apply_operator_pointwise(circ_op, transformed, x, y)
                        worst = max(worst, abs(lhs - rhs_fn(x, y)))
            return worst, (cap + 1) ** 2 * npts

        checks.append(_timed(name, 1e-6, one_pair))
    return checks


def _suite_closedforms(seed: int, quick: bool) -> list[CheckResult]:
    cap = 3 if quick else 8
    xs = np.linspace(-4.0, 4.0, 21)
    mesh_x, mesh_y = xs[:, None], xs[None, :]
    checks = []

    def closed_vs_quadrature():
        worst = 0.0
        for j in range(cap + 1):
            for k in range(cap + 1):
                quad_grid = wigner1d_grid(_h(j), _h(k), xs, xs)
                closed = wigner_hermite_closed(j, k, mesh_x, mesh_y)
                worst = max(worst, np.abs(quad_grid - closed).max())
        return worst, (cap + 1) ** 2 * xs.size**2

    checks.append(_timed("hermite_closed_vs_quadrature", 1e-8, closed_vs_quadrature))

    def lg_equals_closed():
        worst = 0.0
        for j in range(cap + 1):
            for k in range(cap + 1):
                a = lg_mode(ModeIndex.lg(j, k), mesh_x, mesh_y)
                b = wigner_hermite_closed(j, k, mesh_x, mesh_y)
                worst = max(worst, np.abs(a - b).max())
        return worst, (cap + 1) ** 2 * xs.size**2

    checks.append(_timed("lg_mode_equals_hermite_closed", 1e-12, lg_equals_closed))

    def hg_to_lg():
        cap2 = 3 if quick else 6
        sample = np.linspace(-3.0, 3.0, 11)
        worst = 0.0
        for j in range(cap2 + 1):
            for k in range(cap2 + 1):
                transformed = extended_wigner_grid(_hg_callable(j, k), sample, sample)
                reference = lg_mode(ModeIndex.lg(j, k), sample[:, None], sample[None, :])
                worst = max(worst, np.abs(transformed - reference).max())
        return worst, (cap2 + 1) ** 2 * sample.size**2

    checks.append(_timed("extended_wigner_maps_hg_to_lg", 1e-9, hg_to_lg))

    def fixed_point():
        transformed = extended_wigner_grid(_hg_callable(0, 0), xs, xs)
        reference = hg_mode(ModeIndex.hg(0, 0), mesh_x, mesh_y)
        return np.abs(transformed - reference).max(), xs.size**2

    checks.append(_timed("fixed_point_quadrature", 1e-10, fixed_point))
    return checks


def _suite_product_theorem(seed: int, quick: bool) -> list[CheckResult]:
    rng = np.random.default_rng([seed, 6])
    checks = []

    def lg_product():
        npts = 8 if quick else 32
        worst = 0.0
        for _ in range(npts):
            j, k, m, n = (int(v) for v in rng.integers(0, 4, size=4))
            pt = PhasePoint4(*rng.uniform(-2.0, 2.0, size=4))
            oracle = wigner2d(_lg_callable(j, k), _lg_callable(m, n), pt)
            worst = max(worst, abs(oracle - wigner_lg_closed(j, k, m, n, pt)))
        return worst, npts

    checks.append(_timed("lg_product_vs_quadrature2d", 1e-6, lg_product))

    def hg_product():
        npts = 4 if quick else 8
        worst = 0.0
        for _ in range(npts):
            j, k, m, n = (int(v) for v in rng.integers(0, 4, size=4))
            pt = PhasePoint4(*rng.uniform(-2.0, 2.0, size=4))
            oracle = wigner2d(_hg_callable(j, k), _hg_callable(m, n), pt)
            worst = max(worst, abs(oracle - wigner_hg_closed(j, k, m, n, pt)))
        return worst, npts

    checks.append(_timed("hg_product_vs_quadrature2d", 1e-6, hg_product))

    cap = 3 if quick else 6
    ndiag = 8 if quick else 100

    def lg_diag():
        worst = 0.0
        for _ in range(ndiag):
            j, k = (int(v) for v in rng.integers(0, cap + 1, size=2))
            pt = PhasePoint4(*rng.uniform(-2.0, 2.0, size=4))
            worst = max(worst, abs(wigner_lg_closed(j, k, j, k, pt) - wigner_lg_diag(j, k, pt)))
        return worst, ndiag

    checks.append(_timed("lg_diag_consistency", 1e-12, lg_diag))

    def hg_diag():
        worst = 0.0
        for _ in range(ndiag):
            j, k = (int(v) for v in rng.integers(0, cap + 1, size=2))
            pt = PhasePoint4(*rng.uniform(-2.0, 2.0, size=4))
            worst = max(worst, abs(wigner_hg_closed(j, k, j, k, pt) - wigner_hg_diag(j, k, pt)))
        return worst, ndiag

    checks.append(_timed("hg_diag_consistency", 1e-12, hg_diag))
    return checks


def _suite_polarization(seed: int, quick: bool) -> list[CheckResult]:
    rng = np.random.default_rng([seed, 7])
    cap = 3 if quick else 4
    npts = 8 if quick else 20

    def polarization():
        worst = 0.0
        for _ in range(npts):
            n_plus, n_minus = (int(v) for v in rng.integers(0, cap + 1, size=2))
            x, y = rng.uniform(-2.0, 2.0, size=2)
            hp, hm = _h(n_plus), _h(n_minus)
            total = 0.0
            for factor, weight in ((1.0, 0.25), (-1.0, -0.25), (-1j, 0.25j), (1j, -0.25j)):
                combo = lambda t, c=factor: hp(t) + c * hm(t)
                total += weight * wigner1d(combo, combo, x, y)
            worst = max(worst, abs(total - lg_mode(ModeIndex.lg(n_plus, n_minus), x, y)))
        return worst, npts

    return [_timed("polarization_identity", 1e-8, polarization)]


def _suite_unitarity(seed: int, quick: bool) -> list[CheckResult]:
    rng = np.random.default_rng([seed, 8])
    checks = []

    def inner_products():
        nfuncs = 4 if quick else 10
        deg = 3 if quick else 5
        axis, w = _trap_axis(-8.0, 8.0, 161)
        w2 = np.outer(w, w)
        mesh = (axis[:, None], axis[None, :])
        inputs, outputs = [], []
        for _ in range(nfuncs):
            f = _superposition_2d(_random_coeffs(rng, (deg + 1, deg + 1)))
            inputs.append(f(*mesh))
            outputs.append(extended_wigner_grid(f, axis, axis))
        worst = 0.0
        for a in range(nfuncs):
            for b in range(nfuncs):
                ip_in = np.sum(np.conj(inputs[a]) * inputs[b] * w2)
                ip_out = np.sum(np.conj(outputs[a]) * outputs[b] * w2)
                worst = max(worst, abs(ip_in - ip_out))
        return worst, nfuncs**2

    checks.append(_timed("wtilde_inner_products", 1e-6, inner_products))

    def fixed_point_rotfft():
        grid = Grid2D.sample(_hg_callable(0, 0), (-8.0, 8.0, 256), (-8.0, 8.0, 256))
        out = extended_wigner_rotfft(grid)
        ref = lg_mode(ModeIndex.lg(0, 0), out.x_nodes()[:, None], out.y_nodes()[None, :])
        return np.abs(out.values - ref).max(), out.values.size

    checks.append(_timed("rotfft_fixed_point", 1e-6, fixed_point_rotfft))

    def rotfft_hg_to_lg():
        grid = Grid2D.sample(_hg_callable(1, 0), (-8.0, 8.0, 256), (-8.0, 8.0, 256))
        out = extended_wigner_rotfft(grid)
        ref = lg_mode(ModeIndex.lg(1, 0), out.x_nodes()[:, None], out.y_nodes()[None, :])
        return np.abs(out.values - ref).max(), out.values.size

    checks.append(_timed("rotfft_maps_hg_to_lg", 1e-5, rotfft_hg_to_lg))

    def rotfft_parseval():
        f = _superposition_2d(_random_coeffs(rng, (4, 4)))
        grid = Grid2D.sample(f, (-8.0, 8.0, 320), (-8.0, 8.0, 320))
        out = extended_wigner_rotfft(grid)

        def norm(g):
            dx = (g.x_axis[1] - g.x_axis[0]) / (g.x_axis[2] - 1)
            dy = (g.y_axis[1] - g.y_axis[0]) / (g.y_axis[2] - 1)
            return np.sqrt(np.sum(np.abs(g.values) ** 2) * dx * dy)

        return abs(norm(grid) - norm(out)), grid.values.size

    checks.append(_timed("rotfft_parseval", 1e-6, rotfft_parseval))
    return checks


# ---------------------------------------------------------------------------
# quantization pairing


def _weyl_sigma_terms(sigma: str, xi: np.ndarray):
    """Separable expansion of sigma((x+y)/sqrt2, xi) into terms of the
    form coeff * phi(xi) * x**mx * y**my."""
    ones = np.ones_like(xi)
    if sigma == "one":
        return [(ones, 0, 0, 1.0)]
    if sigma == "x":
        return [(ones, 1, 0, 1.0 / SQRT2), (ones, 0, 1, 1.0 / SQRT2)]
    if sigma == "xi":
        return [(xi, 0, 0, 1.0)]
    if sigma == "x2+xi2":
        return [(ones, 2, 0, 0.5), (ones, 1, 1, 1.0), (ones, 0, 2, 0.5), (xi * xi, 0, 0, 1.0)]
    raise ValueError(f"unsupported symbol {sigma!r}; expected one of {SIGMA_SYMBOLS}")


def _weyl_sigma_grid(sigma: str, x: np.ndarray, xi: np.ndarray) -> np.ndarray:
    if sigma == "one":
        return np.ones((x.size, xi.size))
    if sigma == "x":
        return np.broadcast_to(x[:, None], (x.size, xi.size))
    if sigma == "xi":
        return np.broadcast_to(xi[None, :], (x.size, xi.size))
    if sigma == "x2+xi2":
        return x[:, None] ** 2 + xi[None, :] ** 2
    raise ValueError(f"unsupported symbol {sigma!r}; expected one of {SIGMA_SYMBOLS}")


# Phase-space window for pairing the symbol with the Wigner transform;
# the integrand decays like a Gaussian, so this is already converged.
_WEYL_OUTER = QuadratureSpec(12.0, 240)


def _weyl_pair_values(f_deg: int, g_deg: int, quad: QuadratureSpec):
    """Both pairing pipelines, for every supported symbol at once.

    Left: triple trapezoid quadrature of the quantization kernel applied
    to mode g, paired with mode f. Organized per frequency node with the
    polynomial symbol expanded into separable terms, so the work is a few
    matrix products rather than an N**3 loop; the values are the same
    sums reassociated. Right: the symbol integrated against the
    quadrature Wigner transform of the pair.
    """
    x, w = quad.grid()
    phases = np.exp(1j * np.outer(x, x) / SQRT2)
    f_vals = hermite_function(f_deg, x)
    g_vals = hermite_function(g_deg, x)
    f_mom = {m: (w * f_vals * x**m) @ phases for m in (0, 1, 2)}
    g_mom = {m: (w * g_vals * x**m) @ np.conj(phases) for m in (0, 1, 2)}

    outer_x, outer_w = _WEYL_OUTER.grid()
    wig = wigner1d_grid(_h(f_deg), _h(g_deg), outer_x, outer_x, quad)

    results = {}
    for sigma in SIGMA_SYMBOLS:
        left = 0.0
        for phi, mf, mg, coeff in _weyl_sigma_terms(sigma, x):
            left = left + coeff * np.sum(w * phi * f_mom[mf] * g_mom[mg])
        left *= 2.0**-1.5 / np.pi
        sig = _weyl_sigma_grid(sigma, outer_x, outer_x)
        right = 0.5 / np.sqrt(np.pi) * (outer_w @ (sig * wig) @ outer_w)
        results[sigma] = (complex(left), complex(right))
    return results


def weyl_pairing_check(
    sigma: str, f: int, g: int, quad: QuadratureSpec | None = None
) -> CheckResult:
    """Compare the two quantization-pairing pipelines for one symbol.

    The left pipeline quantizes ``sigma`` by direct kernel quadrature and
    takes the inner product with mode ``f``; the right pipeline pairs
    ``sigma`` against the Wigner transform of the mode pair. For
    ``sigma="one"`` both sides must also reproduce the Kronecker delta of
    the degrees, since quantizing the constant symbol gives the identity.
    """
    if sigma not in SIGMA_SYMBOLS:
        raise ValueError(f"unsupported symbol {sigma!r}; expected one of {SIGMA_SYMBOLS}")
    quad = quad if quad is not None else DEFAULT_QUAD

    def compute():
        left, right = _weyl_pair_values(f, g, quad)[sigma]
        err = abs(left - right)
        if sigma == "one":
            delta = 1.0 if f == g else 0.0
            err = max(err, abs(left - delta), abs(right - delta))
        return err, 1

    return _timed(f"weyl_pairing_{_SIGMA_TAGS[sigma]}_f{f}_g{g}", 1e-6, compute)


def _suite_weyl(seed: int, quick: bool) -> list[CheckResult]:
    cap = 3 if quick else 4
    pairs = [(f, g) for f in range(cap + 1) for g in range(cap + 1)]
    t0 = time.perf_counter()
    errs = dict.fromkeys(SIGMA_SYMBOLS, 0.0)
    for f_deg, g_deg in pairs:
        values = _weyl_pair_values(f_deg, g_deg, DEFAULT_QUAD)
        for sigma, (left, right) in values.items():
            err = abs(left - right)
            if sigma == "one":
                delta = 1.0 if f_deg == g_deg else 0.0
                err = max(err, abs(left - delta), abs(right - delta))
            errs[sigma] = max(errs[sigma], err)
    # the four checks share one computation; split the wall time evenly
    elapsed = (time.perf_counter() - t0) * 1000.0 / len(SIGMA_SYMBOLS)
    return [
        CheckResult(
            f"weyl_pairing_{_SIGMA_TAGS[sigma]}",
            float(errs[sigma]),
            1e-6,
            errs[sigma] <= 1e-6,
            len(pairs),
            elapsed,
        )
        for sigma in SIGMA_SYMBOLS
    ]


_BEAM_CASES = ((0, 0), (1, 2), (2, -1), (0, 3), (2, 0))


def _suite_beam(seed: int, quick: bool) -> list[CheckResult]:
    params = _beam.BeamParams(w0=1.3, k=9.0)
    cases = _BEAM_CASES[:3] if quick else _BEAM_CASES
    checks = []

    def waist_plane():
        axis = np.linspace(-4.0 * params.w0, 4.0 * params.w0, 81)
        xg, yg = axis[:, None], axis[None, :]
        r = np.hypot(xg, yg)
        phi = np.arctan2(yg, xg)
        scale = SQRT2 / params.w0
        worst = 0.0
        for p, ell in cases:
            field_vals = _beam.beam_field(_beam.BeamIndex(p, ell), params, r, phi, 0.0)
            if ell >= 0:
                mode = ModeIndex.lg(p, p + ell)
            else:
                mode = ModeIndex.lg(p - ell, p)
            ref = lg_mode(mode, xg * scale, yg * scale)
            mask = np.abs(ref) > 1e-3 * np.abs(ref).max()
            ratio = field_vals[mask] / ref[mask]
            worst = max(worst, float(np.std(ratio)))
        return worst, len(cases)

    checks.append(_timed("waist_plane_matches_lg", 1e-8, waist_plane))

    def gouy():
        zr = params.zR
        plus = abs(_beam.beam_geometry(params, zr).gouy - np.pi / 4)
        minus = abs(_beam.beam_geometry(params, -zr).gouy + np.pi / 4)
        return max(plus, minus), 2

    checks.append(_timed("gouy_at_rayleigh", 1e-12, gouy))

    def norm_constant():
        worst = 0.0
        heights = (0.0, params.zR, 3.0 * params.zR)
        for p, ell in cases:
            for z in heights:
                w_z = _beam.beam_geometry(params, z).w
                axis, w = _trap_axis(-6.0 * w_z, 6.0 * w_z, 301)
                xg, yg = axis[:, None], axis[None, :]
                vals = _beam.beam_field(
                    _beam.BeamIndex(p, ell), params, np.hypot(xg, yg), np.arctan2(yg, xg), z
                )
                total = np.sum(np.abs(vals) ** 2 * np.outer(w, w))
                worst = max(worst, abs(total - 1.0))
        return worst, len(cases) * len(heights)

    checks.append(_timed("transverse_norm_constant", 1e-8, norm_constant))
    return checks


# ---------------------------------------------------------------------------
# registry


_SUITES = {
    "properties": _suite_properties,
    "moyal": _suite_moyal,
    "orthogonality": _suite_orthogonality,
    "intertwine": _suite_intertwine,
    "closedforms": _suite_closedforms,
    "product_theorem": _suite_product_theorem,
    "polarization": _suite_polarization,
    "unitarity": _suite_unitarity,
    "weyl": _suite_weyl,
    "beam": _suite_beam,
}

SUITE_NAMES = tuple(_SUITES) + ("all",)

#: Static declaration of the checks each suite emits; enforced at run
#: time and pinned again by the test manifest.
SUITE_CHECKS = {
    "properties": ("hermiticity", "xi_marginal", "x_marginal", "total_integral"),
    "moyal": ("moyal_kronecker",),
    "orthogonality": ("hermite_orthonormality", "lg_mode_orthonormality"),
    "intertwine": tuple(name for name, _, _ in _INTERTWINE_PAIRS),
    "closedforms": (
        "hermite_closed_vs_quadrature",
        "lg_mode_equals_hermite_closed",
        "extended_wigner_maps_hg_to_lg",
        "fixed_point_quadrature",
    ),
    "product_theorem": (
        "lg_product_vs_quadrature2d",
        "hg_product_vs_quadrature2d",
        "lg_diag_consistency",
        "hg_diag_consistency",
    ),
    "polarization": ("polarization_identity",),
    "unitarity": (
        "wtilde_inner_products",
        "rotfft_fixed_point",
        "rotfft_maps_hg_to_lg",
        "rotfft_parseval",
    ),
    "weyl": tuple(f"weyl_pairing_{_SIGMA_TAGS[s]}" for s in SIGMA_SYMBOLS),
    "beam": ("waist_plane_matches_lg", "gouy_at_rayleigh", "transverse_norm_constant"),
}


def run_suite(name: str, seed: int = 0, budget: str = "quick") -> SuiteReport:
    """Run one verification suite (or ``"all"``) and return its report.

    Deterministic given ``(name, seed, budget)``: the same call reproduces
    the same sample points and therefore the same errors.
    """
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite name {name!r}; expected one of {SUITE_NAMES}")
    if budget not in ("quick", "full"):
        raise ValueError(f"unknown budget {budget!r}; expected 'quick' or 'full'")
    quick = budget == "quick"
    targets = tuple(_SUITES) if name == "all" else (name,)
    checks: list[CheckResult] = []
    for target in targets:
        produced = _SUITES[target](seed, quick)
        got = tuple(c.name for c in produced)
        if got != SUITE_CHECKS[target]:
            raise RuntimeError(f"suite {target} produced unexpected checks {got}")
        checks.extend(produced)
    return SuiteReport(
        suite=name,
        checks=checks,
        passed=all(c.passed for c in checks),
        seed=seed,
    )
