"""Paraxial Laguerre-Gaussian beam fields along the propagation axis.

The transverse profile at the waist coincides (after rescaling) with the
oscillator LG modes from :mod:`lgwigner.modes`; away from the waist the
field picks up the usual width growth, wavefront curvature, and Gouy
phase. The curvature is handled through its reciprocal so the waist plane
needs no special casing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .specfun import MAX_DEGREE, laguerre

__all__ = ["BeamParams", "BeamIndex", "BeamGeometry", "beam_geometry", "beam_field"]


@dataclass(frozen=True)
class BeamParams:
    """Waist radius and wavenumber, with the derived Rayleigh range."""

    w0: float
    k: float

    def __post_init__(self):
        if not (np.isfinite(self.w0) and self.w0 > 0):
            raise ValueError("w0 must be positive and finite")
        if not (np.isfinite(self.k) and self.k > 0):
            raise ValueError("k must be positive and finite")

    @property
    def zR(self) -> float:
        return 0.5 * self.k * self.w0**2


@dataclass(frozen=True)
class BeamIndex:
    """Radial index p >= 0 and signed azimuthal index ell."""

    p: int
    ell: int

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or isinstance(self.p, bool):
            raise TypeError("p must be an integer")
        if not isinstance(self.ell, (int, np.integer)) or isinstance(self.ell, bool):
            raise TypeError("ell must be an integer")
        if not 0 <= self.p <= MAX_DEGREE:
            raise ValueError(f"p={self.p} outside supported range [0, {MAX_DEGREE}]")
        if abs(self.ell) > MAX_DEGREE:
            raise ValueError(f"|ell|={abs(self.ell)} exceeds {MAX_DEGREE}")


class BeamGeometry(NamedTuple):
    w: float
    inv_R: float
    gouy: float


def beam_geometry(params: BeamParams, z: float) -> BeamGeometry:
    """Width w(z), reciprocal curvature radius 1/R(z), and Gouy angle.

    ``w(z) = w0 sqrt(1 + (z/zR)**2)``, ``1/R(z) = z / (zR**2 + z**2)``
    (regular at z = 0, where the curvature radius itself diverges), and
    ``gouy = atan(z/zR)``.
    """
    if not np.isfinite(z):
        raise ValueError("z must be finite")
    zr = params.zR
    w = params.w0 * np.sqrt(1.0 + (z / zr) ** 2)
    inv_r = z / (zr * zr + z * z)
    return BeamGeometry(float(w), float(inv_r), float(np.arctan(z / zr)))


def _factorial_ratio(p: int, ell_abs: int) -> float:
    """p! / (p + ell_abs)! as a running product."""
    out = 1.0
    for i in range(p + 1, p + ell_abs + 1):
        out /= i
    return out


def beam_field(
    index: BeamIndex,
    params: BeamParams,
    r,
    phi,
    z: float,
    normalized: bool = True,
) -> complex | np.ndarray:
    """Time-harmonic LG beam amplitude in cylindrical coordinates.

    The field is

        C exp(-i Phi) exp(-r**2/w**2) (r sqrt2 / w)**|ell|
        L^|ell|_p(2 r**2 / w**2)

    with total phase
    ``Phi = ell phi - k z + k r**2 / (2 R(z)) - (2p + ell + 1) gouy(z)``.
    With ``normalized=True`` the constant is
    ``C = sqrt(2 p! / (pi (p+|ell|)!)) / w(z)``, which makes the
    transverse L2 norm equal 1 at every z; ``normalized=False`` drops C
    and returns the bare profile.

    ``r`` must be non-negative; ``r`` and ``phi`` may be arrays.
    """
    ra = np.asarray(r, dtype=float)
    pa = np.asarray(phi, dtype=float)
    if not (np.all(np.isfinite(ra)) and np.all(np.isfinite(pa))):
        raise ValueError("r and phi must be finite")
    if np.any(ra < 0):
        raise ValueError("r must be non-negative")
    geom = beam_geometry(params, z)
    w = geom.w
    ell_abs = abs(index.ell)
    total_phase = (
        index.ell * pa
        - params.k * z
        + 0.5 * params.k * ra * ra * geom.inv_R
        - (2 * index.p + index.ell + 1) * geom.gouy
    )
    radial = (
        np.exp(-(ra * ra) / (w * w))
        * (ra * np.sqrt(2.0) / w) ** ell_abs
        * laguerre(index.p, ell_abs, 2.0 * ra * ra / (w * w))
    )
    value = np.exp(-1j * total_phase) * radial
    if normalized:
        value = value * (np.sqrt(2.0 * _factorial_ratio(index.p, ell_abs) / np.pi) / w)
    if np.ndim(r) == 0 and np.ndim(phi) == 0:
        return complex(value)
    return value
