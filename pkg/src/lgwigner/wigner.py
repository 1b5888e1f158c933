"""Wigner transforms: quadrature oracles, a rotate-plus-FFT grid
realization, and closed forms.

Conventions used throughout (and everywhere else in this package):

    W_d(f, g)(x, xi) = (2 pi)**(-d/2) Int exp(i p.xi)
                       conj(f((x+p)/sqrt2)) g((x-p)/sqrt2) dp

with the compressed arguments ``(x +- p)/sqrt(2)`` and the
``(2 pi)**(-d/2)`` prefactor. This differs from the more common Wigner
function normalization; see the README for the exact mapping. The
extended transform applies the same integral to a single function of two
variables:

    Wt(F)(x, y) = (2 pi)**(-1/2) Int exp(i p y)
                  F((x+p)/sqrt2, (x-p)/sqrt2) dp

and factors as a partial Fourier transform after a quarter-turn rotation,
which is what :func:`extended_wigner_rotfft` exploits on sampled grids.

The quadrature oracles use a plain trapezoid rule on a truncated window;
for the Schwartz-class integrands produced by oscillator modes this is
spectrally accurate, and the defaults hold an absolute error budget of
about 1e-10 for mode orders up to 12.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import RectBivariateSpline

from .specfun import laguerre
from .specfun import _check_degree  # shared degree validation

__all__ = [
    "QuadratureSpec",
    "DEFAULT_QUAD",
    "PhasePoint4",
    "Grid2D",
    "wigner1d",
    "wigner1d_grid",
    "extended_wigner",
    "extended_wigner_grid",
    "extended_wigner_rotfft",
    "wigner2d",
    "wigner_hermite_closed",
    "wigner_lg_closed",
    "wigner_lg_diag",
    "wigner_hg_closed",
    "wigner_hg_diag",
]

SQRT2 = np.sqrt(2.0)
_TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class QuadratureSpec:
    """Truncation half-width and node count for the oracle integrals.

    The p-integrals run over ``[-half_width, half_width]`` on ``nodes``
    uniformly spaced trapezoid points.
    """

    half_width: float = 16.0
    nodes: int = 1024

    def __post_init__(self):
        if not (np.isfinite(self.half_width) and self.half_width > 0):
            raise ValueError("half_width must be positive and finite")
        if not isinstance(self.nodes, (int, np.integer)) or isinstance(self.nodes, bool):
            raise TypeError("nodes must be an integer")
        if self.nodes < 16 or self.nodes % 2 != 0:
            raise ValueError("nodes must be even and at least 16")

    def grid(self) -> tuple[np.ndarray, np.ndarray]:
        """Nodes and trapezoid weights."""
        p = np.linspace(-self.half_width, self.half_width, self.nodes)
        w = np.full(self.nodes, p[1] - p[0])
        w[0] *= 0.5
        w[-1] *= 0.5
        return p, w


DEFAULT_QUAD = QuadratureSpec()


def _check_quad(quad) -> QuadratureSpec:
    if quad is None:
        return DEFAULT_QUAD
    if not isinstance(quad, QuadratureSpec):
        raise TypeError("quad must be a QuadratureSpec")
    return quad


@dataclass(frozen=True)
class PhasePoint4:
    """A point (x1, x2, xi1, xi2) of the four-dimensional phase space.

    The derived quadratics q0, q2, q3 parameterize the diagonal closed
    forms; by Cauchy-Schwarz ``|q2| <= q0`` and ``|q3| <= q0``.
    """

    x1: float
    x2: float
    xi1: float
    xi2: float

    def __post_init__(self):
        for name in ("x1", "x2", "xi1", "xi2"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def q0(self) -> float:
        return 0.5 * (self.x1**2 + self.x2**2 + self.xi1**2 + self.xi2**2)

    @property
    def q2(self) -> float:
        return self.x1 * self.xi2 - self.x2 * self.xi1

    @property
    def q3(self) -> float:
        return 0.5 * (self.x1**2 - self.x2**2 + self.xi1**2 - self.xi2**2)


@dataclass
class Grid2D:
    """Rectangular complex samples with axis metadata.

    ``values[i, j]`` is the sample at ``(x_nodes()[i], y_nodes()[j])``;
    the row-major flattening therefore runs the y axis fastest.
    """

    x_axis: tuple[float, float, int]
    y_axis: tuple[float, float, int]
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.x_axis = (float(self.x_axis[0]), float(self.x_axis[1]), int(self.x_axis[2]))
        self.y_axis = (float(self.y_axis[0]), float(self.y_axis[1]), int(self.y_axis[2]))
        for name, (lo, hi, count) in (("x_axis", self.x_axis), ("y_axis", self.y_axis)):
            if count < 2:
                raise ValueError(f"{name} count must be at least 2")
            if not lo < hi:
                raise ValueError(f"{name} must be strictly increasing")
        nx, ny = self.x_axis[2], self.y_axis[2]
        vals = np.asarray(self.values, dtype=complex)
        if vals.size != nx * ny:
            raise ValueError("values length must equal the product of the axis counts")
        self.values = vals.reshape(nx, ny)

    def x_nodes(self) -> np.ndarray:
        return np.linspace(self.x_axis[0], self.x_axis[1], self.x_axis[2])

    def y_nodes(self) -> np.ndarray:
        return np.linspace(self.y_axis[0], self.y_axis[1], self.y_axis[2])

    @classmethod
    def sample(cls, func, x_axis, y_axis) -> "Grid2D":
        """Sample ``func(x, y)`` on the tensor grid of the two axes."""
        x = np.linspace(x_axis[0], x_axis[1], x_axis[2])
        y = np.linspace(y_axis[0], y_axis[1], y_axis[2])
        vals = np.asarray(func(x[:, None], y[None, :]), dtype=complex)
        return cls(tuple(x_axis), tuple(y_axis), np.broadcast_to(vals, (len(x), len(y))).copy())


# ---------------------------------------------------------------------------
# quadrature oracles


def wigner1d(f, g, x: float, xi: float, quad: QuadratureSpec | None = None) -> complex:
    """One-dimensional Wigner transform W(f, g)(x, xi) by quadrature.

    ``f`` and ``g`` must accept numpy arrays and be negligible outside
    ``[-(|x| + half_width)/sqrt2, (|x| + half_width)/sqrt2]`` for the
    truncation to be harmless.
    """
    quad = _check_quad(quad)
    p, w = quad.grid()
    vals = np.conj(f((x + p) / SQRT2)) * g((x - p) / SQRT2)
    acc = np.sum(w * np.exp(1j * p * xi) * vals)
    return complex(acc / np.sqrt(_TWO_PI))


def wigner1d_grid(f, g, xs, xis, quad: QuadratureSpec | None = None) -> np.ndarray:
    """W(f, g) on the tensor grid ``xs x xis``, shape (len(xs), len(xis)).

    Same quadrature as :func:`wigner1d`, evaluated as one matrix product
    so large grids stay cheap.
    """
    quad = _check_quad(quad)
    p, w = quad.grid()
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    xis = np.atleast_1d(np.asarray(xis, dtype=float))
    amp = np.conj(f((xs[:, None] + p[None, :]) / SQRT2))
    amp = amp * g((xs[:, None] - p[None, :]) / SQRT2) * w[None, :]
    phase = np.exp(1j * p[:, None] * xis[None, :])
    return (amp @ phase) / np.sqrt(_TWO_PI)


def extended_wigner(F, x: float, y: float, quad: QuadratureSpec | None = None) -> complex:
    """Extended Wigner transform of a function of two variables, pointwise."""
    quad = _check_quad(quad)
    p, w = quad.grid()
    vals = F((x + p) / SQRT2, (x - p) / SQRT2)
    acc = np.sum(w * np.exp(1j * p * y) * vals)
    return complex(acc / np.sqrt(_TWO_PI))


def extended_wigner_grid(F, xs, ys, quad: QuadratureSpec | None = None) -> np.ndarray:
    """Extended Wigner transform sampled on ``xs x ys`` by quadrature."""
    quad = _check_quad(quad)
    p, w = quad.grid()
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    amp = F((xs[:, None] + p[None, :]) / SQRT2, (xs[:, None] - p[None, :]) / SQRT2) * w[None, :]
    phase = np.exp(1j * p[:, None] * ys[None, :])
    return (amp @ phase) / np.sqrt(_TWO_PI)


def wigner2d(f, g, point: PhasePoint4, quad: QuadratureSpec | None = None) -> complex:
    """Two-dimensional Wigner transform W2(f, g) at one phase-space point.

    Tensor-product trapezoid rule over the truncated square; with the
    default spec this is about a million evaluations of each field, so it
    is meant for isolated points, not grids.
    """
    quad = _check_quad(quad)
    p, w = quad.grid()
    p1 = p[:, None]
    p2 = p[None, :]
    vals = np.conj(f((point.x1 + p1) / SQRT2, (point.x2 + p2) / SQRT2))
    vals = vals * g((point.x1 - p1) / SQRT2, (point.x2 - p2) / SQRT2)
    vals = vals * np.exp(1j * (p1 * point.xi1 + p2 * point.xi2))
    acc = w @ vals @ w
    return complex(acc / _TWO_PI)


# ---------------------------------------------------------------------------
# rotate + partial-FFT realization


def extended_wigner_rotfft(grid: Grid2D) -> Grid2D:
    """Extended Wigner transform of a sampled field.

    Implements the factorization into a quarter-turn rotation followed by
    a partial Fourier transform in the second variable. The rotation is
    resampled with bicubic splines (points falling outside the input
    window are treated as zero, which is where Schwartz-class samples are
    negligible anyway), and the partial transform is a scaled FFT whose
    frequency axis honors the continuous ``(2 pi)**(-1/2)`` normalization.

    The input grid must be symmetric about the origin in both axes. The
    output keeps the input x axis; its y axis is the conjugate frequency
    axis derived from the input y spacing. Expect interpolation-limited
    accuracy, about 1e-6 for low orders on a 256 x 256 grid over [-8, 8];
    the quadrature path is the authoritative oracle.
    """
    for name, (lo, hi, count) in (("x_axis", grid.x_axis), ("y_axis", grid.y_axis)):
        if abs(lo + hi) > 1e-9 * (hi - lo):
            raise ValueError(f"{name} must be symmetric about 0")
    u = grid.x_nodes()
    v = grid.y_nodes()
    spline_re = RectBivariateSpline(u, v, grid.values.real, kx=3, ky=3)
    spline_im = RectBivariateSpline(u, v, grid.values.imag, kx=3, ky=3)

    x = u
    p = v
    uu = (x[:, None] - p[None, :]) / SQRT2
    vv = (x[:, None] + p[None, :]) / SQRT2
    inside = (uu >= u[0]) & (uu <= u[-1]) & (vv >= v[0]) & (vv <= v[-1])
    rotated = np.zeros((x.size, p.size), dtype=complex)
    rotated[inside] = spline_re.ev(uu[inside], vv[inside]) + 1j * spline_im.ev(
        uu[inside], vv[inside]
    )

    n = p.size
    dp = p[1] - p[0]
    freqs = _TWO_PI * (np.arange(n) - n // 2) / (n * dp)
    spectrum = np.fft.fftshift(np.fft.fft(rotated, axis=1), axes=1)
    out = (dp / np.sqrt(_TWO_PI)) * np.exp(-1j * p[0] * freqs)[None, :] * spectrum
    return Grid2D(grid.x_axis, (float(freqs[0]), float(freqs[-1]), n), out)


# ---------------------------------------------------------------------------
# closed forms


def wigner_hermite_closed(j: int, k: int, x, y) -> complex | np.ndarray:
    """Closed form of W(h_j, h_k)(x, y) with z = x + iy.

    Equal to the LG mode with circular quanta (j, k) evaluated at the
    same point; the two are kept as separate code paths on purpose so
    they can cross-check each other.
    """
    _check_degree(j, "j")
    _check_degree(k, "k")
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    z = xa + 1j * ya
    rho = xa * xa + ya * ya
    lo, hi = (k, j) if j >= k else (j, k)
    alpha = hi - lo
    scale = (-1.0) ** lo / np.sqrt(np.pi)
    for i in range(lo + 1, hi + 1):
        scale /= np.sqrt(i)
    power = z**alpha if j >= k else np.conj(z) ** alpha
    value = scale * power * np.exp(-0.5 * rho) * laguerre(lo, alpha, rho)
    if np.ndim(x) == 0 and np.ndim(y) == 0:
        return complex(value)
    return value


def wigner_lg_closed(j: int, k: int, m: int, n: int, point: PhasePoint4) -> complex:
    """Wigner transform of LG modes as a product of two closed forms.

    W2 of the LG pair with circular quanta (j, k) and (m, n) factors into
    closed forms evaluated at quarter-turn-rotated phase-space arguments.
    """
    u1 = (point.x1 + point.xi2) / SQRT2
    v1 = (point.xi1 - point.x2) / SQRT2
    u2 = (point.x1 - point.xi2) / SQRT2
    v2 = (point.xi1 + point.x2) / SQRT2
    return wigner_hermite_closed(j, m, u1, v1) * wigner_hermite_closed(k, n, u2, v2)


def wigner_lg_diag(j: int, k: int, point: PhasePoint4) -> float:
    """Diagonal LG Wigner transform, always real.

    ``pi**-1 (-1)**(j+k) exp(-q0) L0_j(q0 + q2) L0_k(q0 - q2)`` in the
    derived quadratics of the phase-space point.
    """
    _check_degree(j, "j")
    _check_degree(k, "k")
    q0, q2 = point.q0, point.q2
    value = (-1.0) ** (j + k) / np.pi * np.exp(-q0)
    return float(value * laguerre(j, 0, q0 + q2) * laguerre(k, 0, q0 - q2))


def wigner_hg_closed(j: int, k: int, m: int, n: int, point: PhasePoint4) -> complex:
    """Wigner transform of HG modes: a product of closed forms per axis."""
    return wigner_hermite_closed(j, m, point.x1, point.xi1) * wigner_hermite_closed(
        k, n, point.x2, point.xi2
    )


def wigner_hg_diag(j: int, k: int, point: PhasePoint4) -> float:
    """Diagonal HG Wigner transform via the q3 quadratic, always real."""
    _check_degree(j, "j")
    _check_degree(k, "k")
    q0, q3 = point.q0, point.q3
    value = (-1.0) ** (j + k) / np.pi * np.exp(-q0)
    return float(value * laguerre(j, 0, q0 + q3) * laguerre(k, 0, q0 - q3))
