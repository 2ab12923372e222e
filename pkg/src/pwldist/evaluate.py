"""Point evaluation: piece lookup, density, and cumulative distribution.

Piece lookup follows the half-open convention: ``piece_index(g, x)`` is the
largest ``j`` with ``c_j <= x``, capped at ``n`` so the closed support maps
to valid pieces.  The CDF on piece ``j`` is the breakpoint prefix mass plus
the trapezoid area from ``c_j`` to ``x``; at a breakpoint it reproduces the
table entry exactly because both take the same summation path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .density import Grid, PiecewiseLinearDensity, canonicalize
from .errors import OutOfSupportError

POINT_RULES = ("given", "max", "mean")


@dataclass(frozen=True, eq=False)
class CdfTable:
    """CDF values at the breakpoints: ``cumulative[i] = F(c_i)``.

    ``cumulative[0] = 0`` and ``cumulative[n+1]`` equals the raw mass (1 for
    a normalized density, up to rounding).
    """

    cumulative: np.ndarray


def piece_index(g: Grid, x):
    """Index ``j`` of the piece containing ``x``: ``c_j <= x < c_{j+1}``.

    ``x = c_{n+1}`` is clamped to the last piece ``n``.  Ties on coincident
    breakpoints resolve to the maximal index.  Accepts a scalar or an
    array; raises OutOfSupport if any value lies outside ``[c_0, c_{n+1}]``.
    """
    c = g.breakpoints
    xs = np.asarray(x, dtype=float)
    if np.any(xs < c[0]) or np.any(xs > c[-1]) or not np.all(np.isfinite(xs)):
        raise OutOfSupportError(
            f"x outside support [{g.a}, {g.b}]"
        )
    j = np.searchsorted(c, xs, side="right") - 1
    j = np.clip(j, 0, c.size - 2)
    return int(j) if xs.ndim == 0 else j


def breakpoint_values(
    d: PiecewiseLinearDensity, point_rule: str = "given"
) -> np.ndarray:
    """Density values assigned at the breakpoints ``c_0 ... c_{n+1}``.

    ``given`` uses stored point values, falling back to ``max`` when none
    were provided; ``max`` takes ``max{L_i, R_i}``; ``mean`` takes
    ``(L_i + R_i) / 2``.  The implicit outer limits are 0.
    """
    if point_rule not in POINT_RULES:
        raise ValueError(f"point_rule must be one of {POINT_RULES}")
    if point_rule == "given" and d.point_values is not None:
        return d.point_values
    left_full = np.concatenate(([0.0], d.left_limits))
    right_full = np.concatenate((d.right_limits, [0.0]))
    if point_rule == "mean":
        return (left_full + right_full) / 2.0
    return np.maximum(left_full, right_full)


def _interp_values(d: PiecewiseLinearDensity, xs: np.ndarray, j: np.ndarray):
    c = d.breakpoints
    w = d.grid.widths
    t = (xs - c[j]) / w[j]
    return d.right_limits[j] * (1.0 - t) + d.left_limits[j] * t


def pdf(d: PiecewiseLinearDensity, x, point_rule: str = "given"):
    """Density at ``x``: 0 outside the support, linear interpolation of
    ``(R_j, L_{j+1})`` strictly inside piece ``j``, and the point-value
    convention exactly at breakpoints.  Accepts a scalar or an array.
    """
    d = canonicalize(d)
    c = d.breakpoints
    xs = np.asarray(x, dtype=float)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)

    j = np.clip(np.searchsorted(c, xs, side="right") - 1, 0, c.size - 2)
    vals = _interp_values(d, xs, j)

    pos = np.clip(np.searchsorted(c, xs, side="left"), 0, c.size - 1)
    at_breakpoint = c[pos] == xs
    pv = breakpoint_values(d, point_rule)
    vals = np.where(at_breakpoint, pv[pos], vals)

    inside = (xs >= c[0]) & (xs <= c[-1])
    out = np.where(inside, vals, 0.0)
    return float(out[0]) if scalar else out


def cdf_table(d: PiecewiseLinearDensity) -> CdfTable:
    """Prefix sums of the per-piece trapezoid masses."""
    d = canonicalize(d)
    masses = (d.right_limits + d.left_limits) * d.grid.widths / 2.0
    cumulative = np.concatenate(([0.0], np.cumsum(masses)))
    cumulative.setflags(write=False)
    return CdfTable(cumulative)


def cdf(d: PiecewiseLinearDensity, x):
    """Cumulative distribution ``F(x) = P(X <= x)``.

    0 for ``x <= c_0``, the total mass for ``x >= c_{n+1}``, and prefix
    mass plus the partial-piece trapezoid term in between; continuous and
    nondecreasing.  Accepts a scalar or an array.
    """
    d = canonicalize(d)
    c = d.breakpoints
    table = cdf_table(d).cumulative
    xs = np.asarray(x, dtype=float)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)

    j = np.clip(np.searchsorted(c, xs, side="right") - 1, 0, c.size - 2)
    h = xs - c[j]
    partial = h * (d.right_limits[j] + _interp_values(d, xs, j)) / 2.0
    vals = table[j] + partial

    # Exactly at a breakpoint, return the table entry itself.
    pos = np.clip(np.searchsorted(c, xs, side="left"), 0, c.size - 1)
    at_breakpoint = c[pos] == xs
    vals = np.where(at_breakpoint, table[pos], vals)

    vals = np.where(xs <= c[0], 0.0, vals)
    vals = np.where(xs >= c[-1], table[-1], vals)
    return float(vals[0]) if scalar else vals
