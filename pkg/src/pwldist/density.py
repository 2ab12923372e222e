"""Core data model for piecewise-linear probability densities.

A density is described by breakpoints ``c_0 <= c_1 <= ... <= c_{n+1}`` and,
for each piece ``(c_i, c_{i+1})``, the one-sided limits ``R_i`` (approached
from the right at ``c_i``) and ``L_{i+1}`` (approached from the left at
``c_{i+1}``).  The density is linear on each open piece, may jump at
breakpoints, and vanishes outside ``[c_0, c_{n+1}]``; the outer limits
``L_0 = 0`` and ``R_{n+1} = 0`` are implicit and never stored.

The continuous special case, where left limit, right limit, and point value
coincide at every breakpoint, is :class:`PolygonalDensity` with vertex
heights ``H_i`` (``H_0 = H_{n+1} = 0``).

Total probability in trapezoid-area form is

    sum_i (R_i + L_{i+1}) (c_{i+1} - c_i) / 2

and a density is considered normalized when that mass is 1 within
``NORMALIZATION_RTOL``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DensityError,
    EmptySupportError,
    LengthMismatchError,
    NegativeValueError,
    NotNondecreasingError,
    NotNormalizedError,
    ZeroMassError,
)

NORMALIZATION_RTOL = 1e-9


def _frozen_array(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float, copy=True)
    if arr.ndim != 1:
        raise DensityError(f"{name} must be one-dimensional")
    arr.setflags(write=False)
    return arr


def _check_nonnegative(arr: np.ndarray, name: str) -> None:
    # NaNs fail the comparison as well, so this also rejects non-finite junk.
    ok = np.isfinite(arr) & (arr >= 0.0)
    if not np.all(ok):
        bad = int(np.flatnonzero(~ok)[0])
        raise NegativeValueError(
            f"{name}[{bad}] = {arr[bad]} (must be finite and >= 0)"
        )


@dataclass(frozen=True, eq=False)
class Grid:
    """Support partition ``c_0 <= c_1 <= ... <= c_{n+1}``.

    Coincident breakpoints are allowed on input; :func:`canonicalize`
    removes the zero-length pieces they delimit.  After canonicalization
    the breakpoints are strictly increasing.
    """

    breakpoints: np.ndarray

    def __post_init__(self):
        c = _frozen_array(self.breakpoints, "breakpoints")
        if c.size < 2:
            raise EmptySupportError("need at least two breakpoints")
        if not np.all(np.isfinite(c)):
            raise DensityError("breakpoints must be finite")
        if not np.all(np.diff(c) >= 0.0):
            raise NotNondecreasingError("breakpoints must be nondecreasing")
        if not c[0] < c[-1]:
            raise EmptySupportError("support has zero length")
        object.__setattr__(self, "breakpoints", c)

    @property
    def n(self) -> int:
        """Number of intermediate breakpoints."""
        return self.breakpoints.size - 2

    @property
    def a(self) -> float:
        return float(self.breakpoints[0])

    @property
    def b(self) -> float:
        return float(self.breakpoints[-1])

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.breakpoints)

    @property
    def is_strict(self) -> bool:
        return bool(np.all(np.diff(self.breakpoints) > 0.0))


@dataclass(frozen=True, eq=False)
class PiecewiseLinearDensity:
    """General (possibly discontinuous) piecewise-linear density.

    Parameters
    ----------
    grid : Grid
        The breakpoints ``c_0 ... c_{n+1}``.
    right_limits : array, length n+1
        ``right_limits[i] = R_i``, the density just right of ``c_i``; also
        the value at the left end of piece ``i``.
    left_limits : array, length n+1
        ``left_limits[i] = L_{i+1}``, the density just left of ``c_{i+1}``;
        also the value at the right end of piece ``i``.
    point_values : array, length n+2, optional
        Explicit density values at the breakpoints themselves.  When absent,
        evaluation falls back to the ``max{L_i, R_i}`` convention.

    Values are immutable after construction; all operations on them are
    pure functions, so instances can be shared freely across threads.
    """

    grid: Grid
    right_limits: np.ndarray
    left_limits: np.ndarray
    point_values: np.ndarray | None = None

    def __post_init__(self):
        rr = _frozen_array(self.right_limits, "right_limits")
        ll = _frozen_array(self.left_limits, "left_limits")
        npieces = self.grid.breakpoints.size - 1
        if rr.size != npieces:
            raise LengthMismatchError(
                f"right_limits has {rr.size} entries, expected {npieces}"
            )
        if ll.size != npieces:
            raise LengthMismatchError(
                f"left_limits has {ll.size} entries, expected {npieces}"
            )
        _check_nonnegative(rr, "right_limits")
        _check_nonnegative(ll, "left_limits")
        object.__setattr__(self, "right_limits", rr)
        object.__setattr__(self, "left_limits", ll)
        if self.point_values is not None:
            pv = _frozen_array(self.point_values, "point_values")
            if pv.size != npieces + 1:
                raise LengthMismatchError(
                    f"point_values has {pv.size} entries, expected {npieces + 1}"
                )
            _check_nonnegative(pv, "point_values")
            object.__setattr__(self, "point_values", pv)

    @property
    def breakpoints(self) -> np.ndarray:
        return self.grid.breakpoints

    @property
    def n(self) -> int:
        return self.grid.n

    @property
    def support(self) -> tuple[float, float]:
        return (self.grid.a, self.grid.b)

    @property
    def is_normalized(self) -> bool:
        return abs(raw_mass(self) - 1.0) <= NORMALIZATION_RTOL


@dataclass(frozen=True, eq=False)
class PolygonalDensity:
    """Continuous piecewise-linear density given by vertex heights.

    ``heights[i] = H_i`` is the density at ``breakpoints[i]``; the graph is
    the polygon through the vertices, so ``H_0 = H_{n+1} = 0`` is required
    for continuity with the zero density outside the support.
    """

    grid: Grid
    heights: np.ndarray

    def __post_init__(self):
        h = _frozen_array(self.heights, "heights")
        if h.size != self.grid.breakpoints.size:
            raise LengthMismatchError(
                f"heights has {h.size} entries, expected {self.grid.breakpoints.size}"
            )
        _check_nonnegative(h, "heights")
        if h[0] != 0.0 or h[-1] != 0.0:
            raise NegativeValueError(
                "outer heights must be 0 (density vanishes outside the support)"
            )
        object.__setattr__(self, "heights", h)

    @property
    def breakpoints(self) -> np.ndarray:
        return self.grid.breakpoints

    @property
    def n(self) -> int:
        return self.grid.n

    @property
    def is_normalized(self) -> bool:
        return abs(raw_mass(promote(self)) - 1.0) <= NORMALIZATION_RTOL


@dataclass(frozen=True)
class NormalizationReport:
    """Outcome of :func:`normalize`: the raw mass and the factor applied."""

    raw_mass: float
    factor_k: float


def validate(
    breakpoints,
    right_limits,
    left_limits,
    point_values=None,
) -> PiecewiseLinearDensity:
    """Build a canonicalized density from raw arrays.

    Raises the specific :class:`~pwldist.errors.DensityError` subclass
    naming the violated constraint.  The result may be unnormalized; check
    ``is_normalized`` or call :func:`normalize`.
    """
    d = PiecewiseLinearDensity(
        Grid(breakpoints), right_limits, left_limits, point_values
    )
    return canonicalize(d)


def raw_mass(d: PiecewiseLinearDensity) -> float:
    """Integral of the (possibly unnormalized) density over its support.

    Computed as the trapezoid-area sum ``sum (R_i + L_{i+1}) w_i / 2``.
    """
    return float(
        np.sum((d.right_limits + d.left_limits) * d.grid.widths) / 2.0
    )


def normalize(
    d: PiecewiseLinearDensity,
) -> tuple[PiecewiseLinearDensity, NormalizationReport]:
    """Scale all limits (and point values) so the total mass becomes 1.

    The factor is ``k = 2 / sum (R'_i + L'_{i+1}) w_i``, identical to
    ``1 / raw_mass``.  Breakpoints are unchanged.
    """
    mass = raw_mass(d)
    if not mass > 0.0:
        raise ZeroMassError("density integrates to zero; nothing to normalize")
    k = 2.0 / (2.0 * mass)
    pv = None if d.point_values is None else d.point_values * k
    scaled = PiecewiseLinearDensity(
        d.grid, d.right_limits * k, d.left_limits * k, pv
    )
    return scaled, NormalizationReport(raw_mass=mass, factor_k=k)


def promote(p: PolygonalDensity) -> PiecewiseLinearDensity:
    """View a polygonal density as a general one: ``H_i = L_i = R_i``."""
    h = p.heights
    return PiecewiseLinearDensity(p.grid, h[:-1], h[1:], point_values=h)


def canonicalize(d: PiecewiseLinearDensity) -> PiecewiseLinearDensity:
    """Drop zero-length pieces so breakpoints are strictly increasing.

    Empty pieces carry no mass.  At a merged breakpoint the surviving left
    limit is the leftmost original ``L`` and the surviving right limit the
    rightmost original ``R`` (the limits of the flanking nonempty pieces);
    a stored point value survives as the max over the merged group.
    Returns ``d`` itself when the grid is already strictly increasing.
    """
    c = d.breakpoints
    keep = d.grid.widths > 0.0
    if np.all(keep):
        return d
    first_of_group = np.concatenate(([True], np.diff(c) > 0.0))
    new_c = c[first_of_group]
    pv = d.point_values
    if pv is not None:
        pv = np.maximum.reduceat(pv, np.flatnonzero(first_of_group))
    return PiecewiseLinearDensity(
        Grid(new_c), d.right_limits[keep], d.left_limits[keep], pv
    )


def scale(d: PiecewiseLinearDensity, s: float) -> PiecewiseLinearDensity:
    """Multiply all limits and point values by ``s > 0``."""
    if not s > 0.0:
        raise DensityError(f"scale factor must be positive, got {s}")
    pv = None if d.point_values is None else d.point_values * s
    return PiecewiseLinearDensity(
        d.grid, d.right_limits * s, d.left_limits * s, pv
    )


def require_normalized(d: PiecewiseLinearDensity) -> None:
    """Raise NotNormalized unless the mass is 1 within tolerance."""
    mass = raw_mass(d)
    if abs(mass - 1.0) > NORMALIZATION_RTOL:
        raise NotNormalizedError(
            f"density has mass {mass!r}; normalize() it first "
            f"(factor k = {2.0 / (2.0 * mass) if mass > 0 else float('inf')!r})"
        )
