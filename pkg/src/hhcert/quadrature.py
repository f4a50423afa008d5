"""Adaptive quadrature used as the numeric oracle throughout the toolkit.

The scheme is an embedded Gauss-Kronrod pair (7-point Gauss inside a 15-point
Kronrod extension) with bisection refinement.  The returned value is the
Kronrod estimate; the error estimate per panel is the absolute difference of
the pair, which is conservative for smooth integrands.  The 7-point base rule
is exact on cubics, so low-degree polynomials integrate to rounding error on
a single panel.

Panels are refined level by level and all node evaluations for one level are
batched into a single call, so integrands vectorized over numpy arrays are
cheap.  Scalar-only integrands work too, via an elementwise fallback.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ._ufunc import eval_elementwise
from .catalog import Interval
from .errors import NonFiniteEvaluation

MAX_DEPTH = 60          # bisection levels per axis before giving up
_MAX_PANELS = 65536     # safety valve against worklist blowup

# 15-point Kronrod nodes on [-1, 1] and weights; the odd-index nodes form the
# embedded 7-point Gauss rule.
_XK = np.array([
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0, 0.207784955007898, 0.405845151377397,
    0.586087235467691, 0.741531185599394, 0.864864423359769,
    0.949107912342759, 0.991455371120813,
])
_WK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529,
])
_WG = np.array([
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870,
])


@dataclass(frozen=True)
class QuadratureResult:
    """Integral estimate with its accumulated error estimate.

    ``converged`` is true only when the error estimate met the requested
    tolerance within the subdivision budget; a non-converged result still
    carries the best available estimate.
    """

    value: float
    error_estimate: float
    subdivisions: int
    converged: bool


def _clean_breakpoints(pts: Sequence[float], a: float, b: float) -> list[float]:
    out = []
    for p in pts:
        p = float(p)
        if not math.isfinite(p) or p < a or p > b:
            raise ValueError(f"breakpoint {p} outside [{a}, {b}]")
        if a < p < b:
            out.append(p)
    return sorted(set(out))


def integrate_1d(
    g: Callable[[float], float],
    iv: Interval,
    tol: float = 1e-10,
    breakpoints: Sequence[float] = (),
) -> QuadratureResult:
    """Integrate g over [iv.a, iv.b] to absolute tolerance tol.

    The interval is pre-split at the given interior breakpoints so known
    kinks or jumps land on panel boundaries.  A degenerate interval yields
    exactly zero.  Raises NonFiniteEvaluation if g returns NaN or infinity
    at a quadrature node; an integrand too rough for the depth budget comes
    back with converged=False instead.
    """
    if not (tol > 0.0 and math.isfinite(tol)):
        raise ValueError(f"tol must be positive and finite, got {tol}")
    if iv.is_degenerate:
        return QuadratureResult(0.0, 0.0, 0, True)

    edges = [iv.a, *_clean_breakpoints(breakpoints, iv.a, iv.b), iv.b]
    lows = np.array(edges[:-1])
    highs = np.array(edges[1:])
    total_width = iv.b - iv.a

    value = 0.0
    err_accepted = 0.0
    depth = 0
    converged = True
    eps = np.finfo(float).eps

    while lows.size:
        centers = 0.5 * (lows + highs)
        halfw = 0.5 * (highs - lows)
        nodes = centers[:, None] + halfw[:, None] * _XK[None, :]
        y = eval_elementwise(g, nodes)
        if not np.all(np.isfinite(y)):
            bad = nodes[~np.isfinite(y)]
            raise NonFiniteEvaluation(
                f"integrand not finite at x={bad.ravel()[0]!r}"
            )
        ik = halfw * (y @ _WK)
        ig = halfw * (y[:, 1::2] @ _WG)
        err = np.abs(ik - ig)

        # Proportional budgets keep the sum of accepted errors below tol; the
        # rounding floor stops pointless splitting once the pair difference
        # is at machine-noise scale for the panel.
        budget = tol * (2.0 * halfw) / total_width
        floor = 50.0 * eps * np.abs(ik)
        accept = (err <= budget) | (err <= floor)

        value += float(np.sum(ik[accept]))
        err_accepted += float(np.sum(err[accept]))

        rejected = ~accept
        n_rej = int(np.count_nonzero(rejected))
        if n_rej == 0:
            break
        if depth >= MAX_DEPTH or 2 * n_rej > _MAX_PANELS:
            value += float(np.sum(ik[rejected]))
            err_accepted += float(np.sum(err[rejected]))
            converged = False
            break
        lo_r, hi_r, mid_r = lows[rejected], highs[rejected], centers[rejected]
        lows = np.concatenate([lo_r, mid_r])
        highs = np.concatenate([mid_r, hi_r])
        depth += 1

    converged = converged and err_accepted <= tol
    return QuadratureResult(value, err_accepted, depth, converged)


_UNIT = Interval(0.0, 1.0)


def integrate_2d(
    g: Callable[[float, float], float],
    tol: float = 1e-10,
    breakpoints_t: Sequence[float] = (),
    breakpoints_s: Sequence[float] = (),
) -> QuadratureResult:
    """Integrate g(t, s) over the unit square as an iterated integral.

    The inner integral runs over t at tolerance tol/10 for each outer node s;
    the outer integral over s gets the remaining budget, so a converged result
    keeps the combined error estimate below tol.  Breakpoints pre-split the
    respective axis.  g must accept a scalar s; vectorization over t is used
    when available.

    Breakpoints are per-axis constants, so a C0 crease whose t-location moves
    with s (such as |t - s| along the diagonal) cannot be pre-split; on such
    creases both embedded rules err the same way and the reported estimate
    can understate the true error by orders of magnitude.  Supply integrands
    that are at least C1 across moving creases, or iterate integrate_1d by
    hand with per-node breakpoints when full accuracy matters there.
    """
    if not (tol > 0.0 and math.isfinite(tol)):
        raise ValueError(f"tol must be positive and finite, got {tol}")
    inner_tol = tol / 10.0
    state = {"max_err": 0.0, "max_sub": 0, "converged": True}

    def outer_integrand(s):
        if np.ndim(s) != 0:
            raise TypeError("outer integrand is scalar-only")
        s = float(s)
        res = integrate_1d(lambda t: g(t, s), _UNIT, inner_tol, breakpoints_t)
        state["max_err"] = max(state["max_err"], res.error_estimate)
        state["max_sub"] = max(state["max_sub"], res.subdivisions)
        state["converged"] = state["converged"] and res.converged
        return res.value

    outer = integrate_1d(outer_integrand, _UNIT, 0.9 * tol, breakpoints_s)
    error = outer.error_estimate + state["max_err"]
    return QuadratureResult(
        value=outer.value,
        error_estimate=error,
        subdivisions=max(outer.subdivisions, state["max_sub"]),
        converged=outer.converged and state["converged"] and error <= tol,
    )
