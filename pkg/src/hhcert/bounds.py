"""Midpoint-rule error bounds for functions with convex derivative powers.

The quantity of interest is the midpoint gap

    gap(f, [a,b]) = | f((a+b)/2) - (1/(b-a)) * integral_a^b f |.

Three bounds on the gap are evaluated from the endpoint derivative magnitudes
alone, each valid when |f'|^q is convex on [a, b] for its exponent:

    T2:  ((b-a)/sqrt(6)) * sqrt((|f'(a)|^2 + |f'(b)|^2) / 2)          (q = 2)
    T3:  (b-a) * (2/((p+1)(p+2)))^(1/p)
             * ((|f'(a)|^q + |f'(b)|^q) / 2)^(1/q),   1/p + 1/q = 1  (q > 1)
    KO:  (3^(1-1/q) / 8) * (b-a) * (|f'(a)| + |f'(b)|)               (q > 1)

T3 at q = 2 coincides with T2.  Each evaluator also runs the sampled
convexity check for its hypothesis and reports the verdict alongside the
bound; a bound is computed even when the hypothesis check fails, since the
gap/bound comparison is still informative.

Two exact integral identities back the bounds and are checkable numerically:
L1 expresses the signed gap through two weighted integrals of f' and L2
through a double integral of f' differences against kernel differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .catalog import (
    NO_VIOLATION,
    ConvexityReport,
    FunctionDescriptor,
    Interval,
    check_convexity,
    check_hypothesis,
)
from .errors import InvalidExponent
from .kernel import kernel_m, kernel_p_norm
from .quadrature import integrate_1d, integrate_2d

HOLDS_SLACK = 1e-12
ORDER_SLACK = 1e-10

_TRIVIAL_HYPOTHESIS = ConvexityReport(
    verdict=NO_VIOLATION, worst_violation=0.0, witness=None, samples=0
)


@dataclass(frozen=True)
class ConjugatePair:
    """Holder-conjugate exponents with 1/p + 1/q = 1."""

    p: float
    q: float

    def __post_init__(self) -> None:
        if not (self.p > 1.0 and self.q > 1.0):
            raise InvalidExponent(f"conjugate exponents must exceed 1, got p={self.p}, q={self.q}")
        resid = abs(1.0 / self.p + 1.0 / self.q - 1.0)
        if resid > 1e-14:
            raise InvalidExponent(
                f"1/p + 1/q = 1 violated by {resid:.3g} for p={self.p}, q={self.q}"
            )


def conjugate_of(q: float) -> ConjugatePair:
    """Conjugate pair for a given q > 1, p = q/(q-1)."""
    if not (math.isfinite(q) and q > 1.0):
        raise InvalidExponent(f"conjugate_of requires q > 1, got q={q}")
    return ConjugatePair(p=q / (q - 1.0), q=q)


@dataclass(frozen=True)
class BoundReport:
    """One gap-versus-bound comparison."""

    gap: float
    bound: float
    ratio: float
    theorem: str
    hypothesis: ConvexityReport
    holds: bool


@dataclass(frozen=True)
class SandwichReport:
    """Midpoint value, integral mean, and endpoint average, with ordering."""

    lower: float
    middle: float
    upper: float
    ordered: bool


def _feval(fd: FunctionDescriptor, x: float) -> float:
    with np.errstate(all="ignore"):
        return float(fd.eval(x))


def _fderiv(fd: FunctionDescriptor, x: float) -> float:
    with np.errstate(all="ignore"):
        return float(fd.deriv(x))


def midpoint_gap(fd: FunctionDescriptor, iv: Interval, tol: float = 1e-10) -> float:
    """Absolute midpoint-rule error of the integral mean of fd over iv.

    The integral is pre-split at the midpoint; a degenerate interval gives
    exactly zero.
    """
    if iv.is_degenerate:
        return 0.0
    integral = integrate_1d(fd.eval, iv, tol, breakpoints=(iv.midpoint,))
    return abs(_feval(fd, iv.midpoint) - integral.value / iv.width)


def hh_sandwich(fd: FunctionDescriptor, iv: Interval, tol: float = 1e-10) -> SandwichReport:
    """Evaluate midpoint value <= integral mean <= endpoint average.

    The ordering holds for convex fd; each comparison is allowed ORDER_SLACK
    of numerical slack.  On a degenerate interval all three values equal
    fd.eval(a) and the report is ordered.
    """
    if iv.is_degenerate:
        v = _feval(fd, iv.a)
        return SandwichReport(lower=v, middle=v, upper=v, ordered=True)
    lower = _feval(fd, iv.midpoint)
    middle = integrate_1d(fd.eval, iv, tol).value / iv.width
    upper = 0.5 * (_feval(fd, iv.a) + _feval(fd, iv.b))
    ordered = lower <= middle + ORDER_SLACK and middle <= upper + ORDER_SLACK
    return SandwichReport(lower=lower, middle=middle, upper=upper, ordered=ordered)


def _ratio(gap: float, bound: float) -> float:
    if bound > 0.0:
        return gap / bound
    return math.nan if gap == 0.0 else math.inf


def _report(
    fd: FunctionDescriptor,
    iv: Interval,
    theorem: str,
    bound_from_derivs,
    hyp_q: float,
    tol: float,
    grid_points: int,
) -> BoundReport:
    if iv.is_degenerate:
        return BoundReport(
            gap=0.0, bound=0.0, ratio=math.nan, theorem=theorem,
            hypothesis=_TRIVIAL_HYPOTHESIS, holds=True,
        )
    da = abs(_fderiv(fd, iv.a))
    db = abs(_fderiv(fd, iv.b))
    bound = bound_from_derivs(iv.width, da, db)
    gap = midpoint_gap(fd, iv, tol)
    hypothesis = check_hypothesis(fd, iv, hyp_q, grid_points=grid_points)
    return BoundReport(
        gap=gap,
        bound=bound,
        ratio=_ratio(gap, bound),
        theorem=theorem,
        hypothesis=hypothesis,
        holds=gap <= bound + HOLDS_SLACK,
    )


def bound_theorem2(
    fd: FunctionDescriptor,
    iv: Interval,
    tol: float = 1e-10,
    grid_points: int = 257,
) -> BoundReport:
    """Quadratic-mean bound on the midpoint gap; hypothesis |f'|^2 convex."""

    def bound(width, da, db):
        return width / math.sqrt(6.0) * math.sqrt(0.5 * (da**2 + db**2))

    return _report(fd, iv, "T2", bound, 2.0, tol, grid_points)


def bound_theorem3(
    fd: FunctionDescriptor,
    iv: Interval,
    q: float,
    tol: float = 1e-10,
    grid_points: int = 257,
) -> BoundReport:
    """Power-mean bound on the midpoint gap; hypothesis |f'|^q convex, q > 1.

    At q = 2 this reduces to the quadratic-mean bound of bound_theorem2.
    """
    pair = conjugate_of(q)
    norm = kernel_p_norm(pair.p)

    def bound(width, da, db):
        return width * norm * (0.5 * (da**q + db**q)) ** (1.0 / q)

    return _report(fd, iv, "T3", bound, q, tol, grid_points)


def bound_kirmaci_ozdemir(
    fd: FunctionDescriptor,
    iv: Interval,
    q: float,
    tol: float = 1e-10,
    grid_points: int = 257,
) -> BoundReport:
    """Endpoint-sum bound (3^(1-1/q)/8) * (b-a) * (|f'(a)| + |f'(b)|), q > 1.

    The same q feeds both the constant and the convexity hypothesis check.
    """
    if not (math.isfinite(q) and q > 1.0):
        raise InvalidExponent(f"bound_kirmaci_ozdemir requires q > 1, got q={q}")
    factor = 3.0 ** (1.0 - 1.0 / q) / 8.0

    def bound(width, da, db):
        return factor * width * (da + db)

    return _report(fd, iv, "KO", bound, q, tol, grid_points)


def verify_identity(
    lemma: str,
    fd: FunctionDescriptor,
    iv: Interval,
    tol: float = 1e-10,
) -> float:
    """Numerically confirm an exact integral identity; returns |lhs - rhs|.

    ``lemma`` selects the identity.  "L1": the integral mean minus the
    midpoint value equals (b-a) times two weighted integrals of f' over the
    unit parameter with weights t and t-1.  "L2": the midpoint value minus
    the integral mean equals ((b-a)/2) times the double integral of
    (f'(x(t)) - f'(x(s))) (m(s) - m(t)) over the unit square, where
    x(u) = u a + (1-u) b.  Both double/weighted integrals are pre-split at
    the kernel break.  The residual carries quadrature noise of order tol.
    """
    if iv.is_degenerate:
        raise ValueError("identity check requires a non-degenerate interval")
    a, b = iv.a, iv.b
    mid = iv.midpoint
    mean = integrate_1d(fd.eval, iv, tol, breakpoints=(mid,)).value / iv.width

    def x_of(u):
        return u * a + (1.0 - u) * b

    if lemma == "L1":
        lhs = mean - _feval(fd, mid)
        left = integrate_1d(lambda t: t * fd.deriv(x_of(t)), Interval(0.0, 0.5), tol)
        right = integrate_1d(lambda t: (t - 1.0) * fd.deriv(x_of(t)), Interval(0.5, 1.0), tol)
        rhs = iv.width * (left.value + right.value)
    elif lemma == "L2":
        lhs = _feval(fd, mid) - mean

        def integrand(t, s):
            return (fd.deriv(x_of(t)) - fd.deriv(x_of(s))) * (kernel_m(s) - kernel_m(t))

        dbl = integrate_2d(integrand, tol, breakpoints_t=(0.5,), breakpoints_s=(0.5,))
        rhs = 0.5 * iv.width * dbl.value
    else:
        raise ValueError(f"lemma must be 'L1' or 'L2', got {lemma!r}")
    return abs(lhs - rhs)
