"""Triangular and tetragonal (trapezoid-like) density families.

Both families are thin wrappers over :class:`PolygonalDensity` plus
closed-form statistics.  The closed forms are written out independently of
the general piecewise machinery so the two routes can check each other.

The tetragonal density rises linearly from ``a`` to height ``C`` at ``c``,
runs linearly to height ``D`` at ``d``, and falls back to zero at ``b``.
Normalization requires C(d - a) + D(b - c) = 2.  A convenient
reparameterization uses a weight ``w`` in [0, 1]:

    C = 2w / [w(d - a) + (1 - w)(b - c)]
    D = 2(1 - w) / [same denominator]

so w <-> C/(C + D), and alpha = w/(1 - w) = C/D when w < 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .density import Grid, PolygonalDensity
from .errors import (
    BadOrderError,
    BadProbabilityError,
    NegativeValueError,
    NotNormalizedError,
    ZeroMassError,
)

_NORMALIZATION_ATOL = 1e-9


def _require_order(*values: float) -> None:
    for left, right in zip(values, values[1:]):
        if not (math.isfinite(left) and math.isfinite(right)):
            raise BadOrderError("parameters must be finite")
        if left > right:
            raise BadOrderError(
                f"parameters must be nondecreasing, got {left} > {right}"
            )
    if not values[0] < values[-1]:
        raise BadOrderError("support must have positive length")


@dataclass(frozen=True)
class TriangularParams:
    """Triangular density on [a, b] with apex at c (a <= c <= b, a < b)."""

    a: float
    c: float
    b: float

    def __post_init__(self):
        _require_order(self.a, self.c, self.b)

    @property
    def apex_height(self) -> float:
        return 2.0 / (self.b - self.a)


@dataclass(frozen=True)
class TetragonalParams:
    """Tetragonal density on [a, b] with plateau edges c, d and heights C, D.

    ``left_height`` is the density value at c, ``right_height`` at d.  The
    params may be unnormalized; operations that need normalization check
    C(d - a) + D(b - c) = 2 themselves.
    """

    a: float
    c: float
    d: float
    b: float
    left_height: float
    right_height: float

    def __post_init__(self):
        _require_order(self.a, self.c, self.d, self.b)
        for name in ("left_height", "right_height"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0.0:
                raise NegativeValueError(f"{name} must be finite and >= 0")
        if self.left_height == 0.0 and self.right_height == 0.0:
            raise ZeroMassError("at least one height must be positive")

    @property
    def weight(self) -> float:
        """Left-side weight w = C/(C + D)."""
        return self.left_height / (self.left_height + self.right_height)

    @property
    def alpha(self) -> float:
        """Height ratio alpha = w/(1 - w) = C/D; infinite when D = 0."""
        if self.right_height == 0.0:
            return math.inf
        return self.left_height / self.right_height

    @property
    def normalization_defect(self) -> float:
        """C(d - a) + D(b - c) - 2; zero for a normalized density."""
        return (
            self.left_height * (self.d - self.a)
            + self.right_height * (self.b - self.c)
            - 2.0
        )


class TriangularStats(NamedTuple):
    mean: float
    variance: float
    median: float
    mode: float


class TetragonalStats(NamedTuple):
    mean: float
    variance: float
    median: float
    modes: tuple[float, ...]


def triangular(a: float, c: float, b: float) -> PolygonalDensity:
    """Normalized triangular density with apex height 2/(b - a).

    Degenerate apexes (c = a or c = b) keep the three-point grid; the
    zero-width piece drops out downstream via canonicalize.
    """
    params = TriangularParams(float(a), float(c), float(b))
    height = params.apex_height
    return PolygonalDensity(
        Grid([params.a, params.c, params.b]), [0.0, height, 0.0]
    )


def tetragonal(
    a: float, c: float, d: float, b: float, left_height: float, right_height: float
) -> PolygonalDensity:
    """Normalized tetragonal density from raw (unnormalized) edge heights.

    The raw heights are scaled by k = 2/[C'(d - a) + D'(b - c)] so the
    result integrates to one.
    """
    params = TetragonalParams(
        float(a), float(c), float(d), float(b),
        float(left_height), float(right_height),
    )
    raw = params.left_height * (params.d - params.a) + params.right_height * (
        params.b - params.c
    )
    if raw <= 0.0:
        raise ZeroMassError("raw heights integrate to zero over this support")
    k = 2.0 / raw
    return PolygonalDensity(
        Grid([params.a, params.c, params.d, params.b]),
        [0.0, k * params.left_height, k * params.right_height, 0.0],
    )


def tetragonal_from_weight(
    a: float, c: float, d: float, b: float, w: float
) -> PolygonalDensity:
    """Normalized tetragonal density from the weight parameterization."""
    w = float(w)
    if not (math.isfinite(w) and 0.0 <= w <= 1.0):
        raise BadProbabilityError(f"weight must lie in [0, 1], got {w}")
    _require_order(float(a), float(c), float(d), float(b))
    denom = w * (d - a) + (1.0 - w) * (b - c)
    if denom <= 0.0:
        raise ZeroMassError("degenerate geometry: weight denominator is zero")
    big_c = 2.0 * w / denom
    big_d = 2.0 * (1.0 - w) / denom
    return PolygonalDensity(
        Grid([float(a), float(c), float(d), float(b)]), [0.0, big_c, big_d, 0.0]
    )


def triangular_stats(params: TriangularParams) -> TriangularStats:
    """Closed-form mean, variance, median, and mode of a triangular density.

    The median uses the sign-unified formula

        v = (a + b)/2 + ({(b - a)[b - a + |2c - a - b|]}^(1/2) + a - b)/2
            * sign(2c - a - b)

    which reduces to the familiar per-side square-root expressions and to
    (a + b)/2 at the symmetric point.
    """
    a, c, b = params.a, params.c, params.b
    mean = (a + b + c) / 3.0
    variance = (a * a + b * b + c * c - a * b - a * c - b * c) / 18.0
    t = 2.0 * c - a - b
    sign = int(t > 0.0) - int(t < 0.0)
    median = (a + b) / 2.0 + (
        math.sqrt((b - a) * (b - a + abs(t))) + a - b
    ) / 2.0 * sign
    return TriangularStats(mean=mean, variance=variance, median=median, mode=c)


def tetragonal_mean_alpha(params: TetragonalParams) -> float:
    """Tetragonal mean via the alpha = w/(1 - w) form; needs w < 1."""
    alpha = params.alpha
    if not math.isfinite(alpha):
        raise ZeroMassError("alpha form needs right_height > 0 (w < 1)")
    a, c, d, b = params.a, params.c, params.d, params.b
    return (
        (alpha * (d - a) * (a + c + d) + (b - c) * (b + c + d))
        / (alpha * (d - a) + b - c)
        / 3.0
    )


def _tetragonal_median(params: TetragonalParams) -> float:
    """Six-case tetragonal median.

    Boundary cases use weak floating-point equality on purpose: C(c - a) = 1
    returns exactly c, D(b - d) = 1 returns exactly d, with no tolerance
    window.
    """
    a, c, d, b = params.a, params.c, params.d, params.b
    big_c, big_d = params.left_height, params.right_height
    left_mass2 = big_c * (c - a)
    right_mass2 = big_d * (b - d)
    if left_mass2 > 1.0:
        return a + math.sqrt((c - a) / big_c)
    if left_mass2 == 1.0:
        return c
    if right_mass2 > 1.0:
        return b - math.sqrt((b - d) / big_d)
    if right_mass2 == 1.0:
        return d
    if big_c == big_d:
        return 1.0 / (2.0 * big_c) + (a + c) / 2.0
    # Middle piece, C != D: solve the quadratic in t = v - c,
    #   (D - C) t^2 + 2C(d - c) t + (d - c)[C(c - a) - 1] = 0,
    # obtained from F(c) + C t + (D - C) t^2 / (2(d - c)) = 1/2.
    qa = big_d - big_c
    qb = 2.0 * big_c * (d - c)
    qc = (d - c) * (left_mass2 - 1.0)
    disc = qb * qb - 4.0 * qa * qc
    disc = math.sqrt(max(disc, 0.0))
    # Both roots via the product form to avoid cancellation, then pick
    # the one inside the piece; on a rounding tie take the better F value.
    if qb >= 0.0:
        r = -(qb + disc) / 2.0
    else:
        r = -(qb - disc) / 2.0
    roots = []
    if qa != 0.0:
        roots.append(r / qa)
    if r != 0.0:
        roots.append(qc / r)
    width = d - c
    inside = [t for t in roots if 0.0 <= t <= width]
    if not inside:
        inside = [min(max(t, 0.0), width) for t in roots]
    if len(inside) > 1:
        def halfway_error(t: float) -> float:
            f_c = left_mass2 / 2.0
            return abs(f_c + big_c * t + qa * t * t / (2.0 * width) - 0.5)

        inside.sort(key=halfway_error)
    return c + inside[0]


def tetragonal_stats(params: TetragonalParams) -> TetragonalStats:
    """Closed-form mean, variance, median, and mode set; needs normalization.

    Modes follow the height trichotomy: C > D gives c, C < D gives d, and
    C = D gives both plateau edges.
    """
    if abs(params.normalization_defect) > _NORMALIZATION_ATOL:
        raise NotNormalizedError(
            "tetragonal params are not normalized: "
            f"C(d - a) + D(b - c) = {params.normalization_defect + 2.0!r}"
        )
    a, c, d, b = params.a, params.c, params.d, params.b
    big_c, big_d = params.left_height, params.right_height
    mean = (
        big_c * (d - a) * (a + c + d) + big_d * (b - c) * (b + c + d)
    ) / 6.0
    mu = mean
    variance = (
        big_c
        * (d - a)
        * (
            a * a + c * c + d * d + a * c + a * d + c * d
            - 4.0 * mu * (a + c + d) + 6.0 * mu * mu
        )
        + big_d
        * (b - c)
        * (
            b * b + c * c + d * d + b * c + b * d + c * d
            - 4.0 * mu * (b + c + d) + 6.0 * mu * mu
        )
    ) / 12.0
    median = _tetragonal_median(params)
    if big_c > big_d:
        modes: tuple[float, ...] = (c,)
    elif big_c < big_d:
        modes = (d,)
    else:
        modes = (c, d)
    return TetragonalStats(mean=mean, variance=variance, median=median, modes=modes)
