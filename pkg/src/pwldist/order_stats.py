"""Median sets, quantile preimages, point quantiles, and sampling.

The CDF of a piecewise-linear density is continuous and nondecreasing but
not necessarily strictly increasing: it is flat across zero-density pieces.
A probability level therefore has a whole preimage interval.  Its endpoints
are the infimum and supremum inverses, found by locating the first and last
piece whose mass bracket crosses the level and solving the per-piece
quadratic ``F(v) = p`` there.

Restricted to piece j, with ``h = v - c_j``, ``w`` the piece width, and
``q = p - F(c_j)`` the mass still needed,

    alpha h^2 + beta h - q = 0,   alpha = (L_{j+1} - R_j) / (2w),  beta = R_j.

When ``|alpha| <= 1e-14 |beta|`` the linear solution ``h = q / beta`` is
used; otherwise ``h = 2q / (beta + sqrt(beta^2 + 4 alpha q))``, which is the
root selected by the standard stable formula (divide the constant term by
``-(beta + sign(beta) sqrt(disc)) / 2``) and is the one inside ``[0, w]``:
within a positive-mass piece the density is strictly positive on the open
piece, so F restricted to it is strictly increasing and the root is unique.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .density import PiecewiseLinearDensity, canonicalize, require_normalized
from .errors import BadProbabilityError
from .evaluate import cdf, cdf_table

QUANTILE_RULES = ("inf", "sup", "mid")


@dataclass(frozen=True)
class MedianSet:
    """The interval of median values with endpoint-attainment flags."""

    v_min: float
    v_max: float
    min_attained: bool
    max_attained: bool


@dataclass(frozen=True)
class QuantilePreimage:
    """Infimum and supremum inverses of the CDF at level ``p``."""

    lower: float
    upper: float
    p: float


def _solve_piece(right: float, left: float, width: float, q: float) -> float:
    """Distance into a piece at which it accumulates mass ``q``."""
    if q <= 0.0:
        return 0.0
    alpha = (left - right) / (2.0 * width)
    beta = right
    if abs(alpha) <= 1e-14 * abs(beta):
        h = q / beta
    else:
        disc = beta * beta + 4.0 * alpha * q
        h = 2.0 * q / (beta + np.sqrt(max(disc, 0.0)))
    return float(min(max(h, 0.0), width))


def _crossing(d: PiecewiseLinearDensity, table: np.ndarray, p: float, side: str) -> float:
    """x at which F first (side 'lower') or last (side 'upper') equals p."""
    c = d.breakpoints
    n_pieces = c.size - 1
    if side == "lower":
        if p <= 0.0:
            return float(c[0])
        j = int(np.searchsorted(table, p, side="left")) - 1
    else:
        if p >= 1.0:
            return float(c[-1])
        j = int(np.searchsorted(table, p, side="right")) - 1
    j = min(max(j, 0), n_pieces - 1)
    q = p - float(table[j])
    h = _solve_piece(
        float(d.right_limits[j]),
        float(d.left_limits[j]),
        float(c[j + 1] - c[j]),
        q,
    )
    return float(c[j] + h)


def quantile_preimage(d: PiecewiseLinearDensity, p: float) -> QuantilePreimage:
    """The full interval ``{x : F(x) = p}``, clipped to the support.

    For ``p = 0`` the lower end is the support infimum; for ``p = 1`` the
    upper end is the support supremum.
    """
    p = float(p)
    if not (0.0 <= p <= 1.0):
        raise BadProbabilityError(f"probability must lie in [0, 1], got {p!r}")
    require_normalized(d)
    d = canonicalize(d)
    table = cdf_table(d).cumulative
    lower = _crossing(d, table, p, "lower")
    upper = _crossing(d, table, p, "upper")
    return QuantilePreimage(lower=lower, upper=upper, p=p)


def quantile(d: PiecewiseLinearDensity, p: float, rule: str = "inf") -> float:
    """One point of the preimage: its infimum, supremum, or midpoint."""
    if rule not in QUANTILE_RULES:
        raise ValueError(f"rule must be one of {QUANTILE_RULES}")
    pre = quantile_preimage(d, p)
    if rule == "inf":
        return pre.lower
    if rule == "sup":
        return pre.upper
    return (pre.lower + pre.upper) / 2.0


def median_set(d: PiecewiseLinearDensity) -> MedianSet:
    """All medians: the closed interval where F equals 1/2.

    A nondegenerate interval appears exactly when the density vanishes
    almost everywhere between the endpoints.  F is continuous here, so the
    endpoints themselves always satisfy F = 1/2; the flags record that the
    bounds are attained, checked against the computed CDF.
    """
    pre = quantile_preimage(d, 0.5)
    min_attained = bool(abs(cdf(d, pre.lower) - 0.5) <= 1e-9)
    max_attained = bool(abs(cdf(d, pre.upper) - 0.5) <= 1e-9)
    return MedianSet(
        v_min=pre.lower,
        v_max=pre.upper,
        min_attained=min_attained,
        max_attained=max_attained,
    )


def sample(d: PiecewiseLinearDensity, uniforms) -> np.ndarray:
    """Inverse-transform samples for caller-supplied uniforms in [0, 1).

    ``out[i] = quantile(d, uniforms[i], rule="inf")``, vectorized; the
    engine owns no randomness, so identical inputs give identical outputs.
    """
    u = np.asarray(uniforms, dtype=float)
    if u.size and (np.any(u < 0.0) or np.any(u >= 1.0) or not np.all(np.isfinite(u))):
        raise BadProbabilityError("uniform variates must lie in [0, 1)")
    require_normalized(d)
    d = canonicalize(d)
    if u.size == 0:
        return np.empty(0, dtype=float)

    c = d.breakpoints
    table = cdf_table(d).cumulative
    j = np.searchsorted(table, u, side="left") - 1
    j = np.clip(j, 0, c.size - 2)
    w = c[j + 1] - c[j]
    right = d.right_limits[j]
    left = d.left_limits[j]
    q = u - table[j]

    alpha = (left - right) / (2.0 * w)
    beta = right
    with np.errstate(divide="ignore", invalid="ignore"):
        linear = np.abs(alpha) <= 1e-14 * np.abs(beta)
        h_lin = q / beta
        disc = np.maximum(beta * beta + 4.0 * alpha * q, 0.0)
        h_quad = 2.0 * q / (beta + np.sqrt(disc))
    h = np.where(linear, h_lin, h_quad)
    h = np.where(q <= 0.0, 0.0, h)
    h = np.clip(h, 0.0, w)
    return c[j] + h
