"""Mode sets for possibly discontinuous piecewise-linear densities.

A discontinuous density need not attain its supremum, so "the mode" splits
into a supremum value ``f_sup`` and a set of loci that realize it.  Four
conventions fix which values compete for the supremum:

======================  ==============================================
point_and_limits        point values f(c_i) and both one-sided limits
point_and_mean_limits   point values and the limit means (L_i + R_i)/2
limits_only             one-sided limits only (the default)
mean_limits_only        limit means only
======================  ==============================================

The implicit outer limits L_0 = 0 and R_{n+1} = 0 take part.  Because the
density is linear inside pieces, interior values never exceed the piece's
endpoint limits and breakpoint scanning suffices.

Loci kinds: ``point`` (the breakpoint itself; also used when both one-sided
limits reach the supremum, which is the continuous situation), ``left-limit``
and ``right-limit`` (c_i -+ 0, supremum approached from one side only),
``half-half`` (the pair of half-weighted one-sided points at a breakpoint
whose limit mean attains the supremum), and ``open-interval`` (a plateau
piece with R_i = L_{i+1} = f_sup).  Plateaus are emitted for every piece,
including the outermost ones; this extends the source convention, which
confines them to interior pieces, because the same argument applies.

Equality against f_sup uses a relative tolerance of 1e-12 to absorb
rounding in normalized heights.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .density import PiecewiseLinearDensity, PolygonalDensity, canonicalize
from .evaluate import breakpoint_values

CONVENTIONS = (
    "point_and_limits",
    "point_and_mean_limits",
    "limits_only",
    "mean_limits_only",
)

DEFAULT_CONVENTION = "limits_only"

_REL_TOL = 1e-12


@dataclass(frozen=True)
class ModeLocus:
    """One mode location.

    ``kind`` is one of ``point``, ``left-limit``, ``right-limit``,
    ``half-half``, ``open-interval``; ``position`` is the breakpoint (or
    the plateau's left end) and ``position2`` the plateau's right end.
    """

    kind: str
    position: float
    position2: float | None = None


@dataclass(frozen=True)
class ModeSet:
    f_sup: float
    convention: str
    loci: tuple[ModeLocus, ...]


def _padded_limits(d: PiecewiseLinearDensity):
    left_full = np.concatenate(([0.0], d.left_limits))
    right_full = np.concatenate((d.right_limits, [0.0]))
    return left_full, right_full


def _candidate_values(d: PiecewiseLinearDensity, convention: str):
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    left_full, right_full = _padded_limits(d)
    use_points = convention in ("point_and_limits", "point_and_mean_limits")
    use_limits = convention in ("point_and_limits", "limits_only")
    use_means = convention in ("point_and_mean_limits", "mean_limits_only")
    pv = breakpoint_values(d, "given") if use_points else None
    means = (left_full + right_full) / 2.0 if use_means else None
    return left_full, right_full, pv, means, use_limits


def f_sup(d: PiecewiseLinearDensity, convention: str = DEFAULT_CONVENTION) -> float:
    """Supremum density value under the given convention."""
    d = canonicalize(d)
    left_full, right_full, pv, means, use_limits = _candidate_values(d, convention)
    best = 0.0
    if use_limits:
        best = max(best, float(np.max(left_full)), float(np.max(right_full)))
    if pv is not None:
        best = max(best, float(np.max(pv)))
    if means is not None:
        best = max(best, float(np.max(means)))
    return best


def _near(value: float, sup: float) -> bool:
    return abs(value - sup) <= _REL_TOL * max(abs(sup), 1e-300)


def mode_set(
    d: PiecewiseLinearDensity, convention: str = DEFAULT_CONVENTION
) -> ModeSet:
    """All loci realizing f_sup under the convention, in support order."""
    d = canonicalize(d)
    left_full, right_full, pv, means, use_limits = _candidate_values(d, convention)
    sup = f_sup(d, convention)
    c = d.breakpoints
    loci: list[ModeLocus] = []
    for i in range(c.size):
        pos = float(c[i])
        l_hit = use_limits and _near(float(left_full[i]), sup)
        r_hit = use_limits and _near(float(right_full[i]), sup)
        if l_hit and r_hit:
            loci.append(ModeLocus("point", pos))
        elif l_hit:
            loci.append(ModeLocus("left-limit", pos))
        elif r_hit:
            loci.append(ModeLocus("right-limit", pos))
        if pv is not None and _near(float(pv[i]), sup) and not (l_hit and r_hit):
            loci.append(ModeLocus("point", pos))
        if means is not None and _near(float(means[i]), sup):
            loci.append(ModeLocus("half-half", pos))
        if i < c.size - 1:
            if _near(float(d.right_limits[i]), sup) and _near(
                float(d.left_limits[i]), sup
            ):
                loci.append(ModeLocus("open-interval", pos, float(c[i + 1])))
    return ModeSet(f_sup=sup, convention=convention, loci=tuple(loci))


def mode_set_continuous(p: PolygonalDensity) -> ModeSet:
    """Modes of a continuous density: argmax vertices and plateau pieces.

    The maximum runs over the interior vertices; adjacent argmax vertices
    are joined by their plateau piece, so a maximal run of them reads as a
    closed interval (its endpoints are the point loci).
    """
    h = p.heights
    c = p.breakpoints
    fmax = float(np.max(h[1:-1])) if h.size > 2 else 0.0
    loci: list[ModeLocus] = []
    for i in range(1, c.size - 1):
        if _near(float(h[i]), fmax):
            loci.append(ModeLocus("point", float(c[i])))
            if i + 1 < c.size - 1 and _near(float(h[i + 1]), fmax):
                loci.append(
                    ModeLocus("open-interval", float(c[i]), float(c[i + 1]))
                )
    return ModeSet(f_sup=fmax, convention="continuous", loci=tuple(loci))
