"""Norm-preserving maps between the Hilbert spaces of two contours.

A contour with parameters (a2, b2, c2) is reached from one with (a1, b1, c1)
by scaling its real parameter by beta = a2^2 c2 / (a1^2 c1) and shifting it
by an imaginary amount set by gamma = b2/c2 - a1^2 b1 / (a2^2 c2).  On
momentum-space wavefunctions the scaling acts as a unitary dilation and the
imaginary shift as multiplication by exp(gamma p); both act analytically on
the tagged exponent, so the transported metric coefficients obey the exact
rational identities

    kappa3' = kappa3 / beta^3        kappa1' = kappa1 / beta - 2 gamma

and metric-weighted amplitudes are preserved identically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import GridMismatch, PushforwardMismatch
from .metric import (MetricSpec, TaggedWaveFn, amplitude_matrix,
                     default_momentum_grid, eigenbasis, metric_of)
from .opalg import ContourParams, _require_hermitizable
from .rational import GaussianRational
from .spectral import Grid

_EXTRAPOLATION_TOL = 1e-12


@dataclass(frozen=True)
class IsoMap:
    """Scale-and-shift map taking the source contour to the target."""

    beta: GaussianRational
    gamma: GaussianRational
    source: ContourParams
    target: ContourParams

    def __post_init__(self):
        if not self.beta.is_real() or self.beta.is_zero():
            raise ValueError(f"beta = {self.beta} must be real and nonzero")
        if not self.gamma.is_real():
            raise ValueError(f"gamma = {self.gamma} must be real")

    @property
    def beta_fraction(self) -> Fraction:
        return self.beta.re

    @property
    def gamma_fraction(self) -> Fraction:
        return self.gamma.re

    def compose(self, second: "IsoMap") -> "IsoMap":
        """The map 'self then second'; targets must chain."""
        if second.source != self.target:
            raise ValueError("maps do not chain: target != second.source")
        beta = self.beta * second.beta
        gamma = second.gamma + self.gamma / second.beta
        return IsoMap(beta=beta, gamma=gamma,
                      source=self.source, target=second.target)


def map_params(src: ContourParams, dst: ContourParams) -> IsoMap:
    """Exact (beta, gamma) of the map from src onto dst."""
    _require_hermitizable(src)
    _require_hermitizable(dst)
    beta = dst.a2c / src.a2c
    gamma = dst.b / dst.c - (src.a * src.a * src.b) / dst.a2c
    return IsoMap(beta=beta, gamma=gamma, source=src, target=dst)


def push_metric(m: IsoMap, eta1: MetricSpec) -> MetricSpec:
    """Transport metric coefficients along the map, verifying exactness.

    The transported coefficients must coincide, as exact rationals, with the
    metric computed directly on the target contour; a mismatch can only be
    an implementation bug and raises :class:`PushforwardMismatch`.
    """
    expected_src = metric_of(m.source)
    if (eta1.kappa3, eta1.kappa1) != (expected_src.kappa3, expected_src.kappa1):
        raise ValueError("eta1 is not the metric of the map's source contour")
    beta, gamma = m.beta_fraction, m.gamma_fraction
    pushed = MetricSpec(
        kappa3=eta1.kappa3 / beta ** 3,
        kappa1=eta1.kappa1 / beta - 2 * gamma,
        params=m.target,
    )
    direct = metric_of(m.target)
    if (pushed.kappa3, pushed.kappa1) != (direct.kappa3, direct.kappa1):
        raise PushforwardMismatch(
            f"transported ({pushed.kappa3}, {pushed.kappa1}) != "
            f"direct ({direct.kappa3}, {direct.kappa1})")
    return pushed


def push_wavefn(m: IsoMap, u: TaggedWaveFn,
                target_grid: Grid | None = None) -> TaggedWaveFn:
    """Transport a tagged wavefunction along the map.

    The dilation part rescales the grid by beta (with a parity fold for
    beta < 0) and divides exponent coefficients by beta^k; the shift part
    adds gamma * p.  The factor keeps its sample values up to the unitary
    normalization |beta|^(-1/2) -- only an optional resampling onto a
    caller-supplied grid interpolates, and never the implicit exponential.
    """
    if u.grid.variable != "momentum" or not u.grid.symmetric:
        raise ValueError("push_wavefn requires a symmetric momentum grid")
    beta, gamma = m.beta_fraction, m.gamma_fraction
    scale = abs(float(beta))
    natural = Grid("momentum", u.grid.lo * scale, u.grid.hi * scale, u.grid.n)
    factor = u.factor / math.sqrt(scale)
    if beta < 0:
        factor = factor[::-1].copy()
    exponent = tuple(c / beta ** k for k, c in enumerate(u.exponent))
    exponent = (exponent[0], exponent[1] + gamma, exponent[2], exponent[3])
    pushed = TaggedWaveFn(grid=natural, factor=factor, exponent=exponent,
                          label=f"{u.label} pushed to {m.target.label()}")
    if target_grid is None or target_grid == natural:
        return pushed
    return _resample(pushed, target_grid)


def _resample(u: TaggedWaveFn, grid: Grid) -> TaggedWaveFn:
    src = u.grid.points()
    dst = grid.points()
    outside = (dst < src[0]) | (dst > src[-1])
    if outside.any():
        edge = max(abs(u.factor[0]), abs(u.factor[-1]))
        if edge > _EXTRAPOLATION_TOL * np.abs(u.factor).max():
            raise GridMismatch(
                "resampling would extrapolate beyond source support")
    spline_re = CubicSpline(src, u.factor.real)
    vals = spline_re(dst)
    if np.iscomplexobj(u.factor):
        vals = vals + 1j * CubicSpline(src, u.factor.imag)(dst)
    vals = np.where(outside, 0.0, vals)
    return TaggedWaveFn(grid=grid, factor=vals, exponent=u.exponent,
                        label=u.label)


@dataclass(frozen=True)
class IsometryReport:
    """Amplitude matrices before and after transport, with deviations."""

    src: ContourParams
    dst: ContourParams
    beta: Fraction
    gamma: Fraction
    k: int
    amplitudes_src: np.ndarray
    amplitudes_dst: np.ndarray
    max_deviation: float
    identity_deviation: float

    @property
    def passed(self) -> bool:
        return self.max_deviation < 1e-6

    def to_json_obj(self) -> dict:
        def table(mat):
            return [[{"re": v.real, "im": v.imag} for v in row] for row in mat]
        return {
            "src": {"a": str(self.src.a), "b": str(self.src.b), "c": str(self.src.c)},
            "dst": {"a": str(self.dst.a), "b": str(self.dst.b), "c": str(self.dst.c)},
            "beta": str(self.beta),
            "gamma": str(self.gamma),
            "k": self.k,
            "max_deviation": self.max_deviation,
            "identity_deviation": self.identity_deviation,
            "amplitude_tables": {"src": table(self.amplitudes_src),
                                 "dst": table(self.amplitudes_dst)},
        }


def verify_isometry(src: ContourParams, dst: ContourParams, k: int = 3,
                    n: int = 1201) -> IsometryReport:
    """Check amplitude preservation between two contours' Hilbert spaces.

    Computes the k x k metric-weighted amplitude matrix on the source, maps
    the source eigenfunctions onto the target and recomputes the matrix with
    the target metric.  Because the map rescales the source grid onto the
    target's natural one, no interpolation enters the comparison.
    """
    m = map_params(src, dst)
    basis = eigenbasis(src, k, default_momentum_grid(src, n=n))
    a_src = amplitude_matrix(basis, metric_of(src))
    pushed = [push_wavefn(m, u) for u in basis]
    a_dst = amplitude_matrix(pushed, metric_of(dst))
    max_dev = float(np.abs(a_src - a_dst).max())
    ident = float(np.abs(a_src - np.eye(k)).max())
    return IsometryReport(
        src=src, dst=dst, beta=m.beta_fraction, gamma=m.gamma_fraction, k=k,
        amplitudes_src=a_src, amplitudes_dst=a_dst,
        max_deviation=max_dev, identity_deviation=ident,
    )
