"""Large-n limit formulas: core sizes, orientability, and their thresholds.

Everything is driven by Poisson tail probabilities and by the largest
fixed point of xi = c * ((1-q) Q(xi, 1) + q Q(xi, 2)), where q is the
probability of a free vertex and c the mean degree.  Sliders survive in
the core with final degree >= 2 and free vertices with >= 3, so the core
vertex fractions are tail probabilities at the fixed point; the maximal
orientable edge fraction comes from the same fixed point through an
explicit formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

_SOLVE_TOL = 1e-12
_SCAN_HI = 50.0


def poisson_tail(x: float, y: int) -> float:
    """P(Poisson(x) >= y); closed forms through y = 4, then a series.

    Small x falls through to the series too: the closed forms subtract
    nearly equal quantities there, which costs relative accuracy and can
    even cancel to zero.  The 0.3 cutoff keeps their relative error near
    1e-12 at worst (y = 4, where the tail is about x^4/24).
    """
    if x < 0:
        raise ValueError("x must be nonnegative")
    if y <= 0:
        return 1.0
    if x == 0.0:
        return 0.0
    if x >= 0.3:
        e = math.exp(-x)
        if y == 1:
            return 1.0 - e
        if y == 2:
            return 1.0 - e * (1.0 + x)
        if y == 3:
            return 1.0 - e * (1.0 + x + x * x / 2.0)
        if y == 4:
            return 1.0 - e * (1.0 + x + x * x / 2.0 + x ** 3 / 6.0)
    # direct tail sum, cut off at 1e-16 relative
    term = math.exp(-x + y * math.log(x) - math.lgamma(y + 1))
    total = 0.0
    j = y
    while True:
        total += term
        j += 1
        term *= x / j
        if term <= total * 1e-16 or term == 0.0:
            return total


def f_ratio(xi: float, q: float) -> float:
    """Half-edge balance ratio of the core; the growth threshold solves = 2."""
    if xi <= 0:
        raise ValueError("xi must be positive")
    num = xi * ((1 - q) * poisson_tail(xi, 1) + q * poisson_tail(xi, 2))
    den = (1 - q) * poisson_tail(xi, 2) + 2 * q * poisson_tail(xi, 3)
    return num / den


def psi(xi: float, q: float) -> float:
    """Mean degree that places the core fixed point at xi."""
    if xi <= 0:
        raise ValueError("xi must be positive")
    return xi / (1.0 - math.exp(-xi) - q * xi * math.exp(-xi))


def delta(x: float, c: float, q: float) -> float:
    """Defect of the saturation fixed-point equation at scaled point x."""
    return x - (1 - q) * poisson_tail(c * x, 1) - q * poisson_tail(c * x, 2)


def calF(x: float, c: float, q: float) -> float:
    """Limit of the orientable edge fraction, evaluated at a root of delta."""
    if c <= 0:
        raise ValueError("c must be positive")
    survive = (1 - q) * poisson_tail(c * x, 1) + q * poisson_tail(c * x, 2)
    heavy = (1 - q) * poisson_tail(c * x, 2) + 2 * q * poisson_tail(c * x, 3)
    return 1.0 - survive * survive + (2.0 / c) * heavy


def _bisect(fn, lo: float, hi: float, tol: float = _SOLVE_TOL) -> float:
    flo = fn(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol:
            break
        fm = fn(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def xi_star(q: float) -> float:
    """Root of f_ratio = 2; defined for q > 1/2 (continuous regime below)."""
    if not 0.5 < q <= 1.0:
        raise ValueError("xi_star is defined for 1/2 < q <= 1")
    fn = lambda xi: f_ratio(xi, q) - 2.0
    grid = [1e-6 + k * (_SCAN_HI - 1e-6) / 2000 for k in range(2001)]
    vals = [fn(x) for x in grid]
    crossings = [
        k for k in range(2000) if (vals[k] < 0) != (vals[k + 1] < 0)
    ]
    if len(crossings) != 1:
        raise RuntimeError(
            f"expected one sign change of the balance ratio on (0, {_SCAN_HI}), "
            f"found {len(crossings)} for q={q}"
        )
    k = crossings[0]
    return _bisect(fn, grid[k], grid[k + 1])


def c_star(q: float) -> float:
    """Mean degree where the orientable fraction first drops below 1."""
    if not 0.0 <= q <= 1.0:
        raise ValueError("q must lie in [0, 1]")
    if q <= 0.5:
        return 1.0 / (1.0 - q)
    return psi(xi_star(q), q)


def _tangent_point(q: float) -> float:
    # interior minimizer of psi: positive root of e^xi - 1 - q xi^2 - xi
    g = lambda xi: math.exp(xi) - 1.0 - q * xi * xi - xi
    lo, hi = 1e-6, _SCAN_HI
    if g(lo) >= 0:
        raise RuntimeError(f"no interior minimum bracket for q={q}")
    return _bisect(g, lo, hi)


def c_tilde(q: float) -> float:
    """Mean degree where the core first becomes macroscopic."""
    if not 0.0 <= q <= 1.0:
        raise ValueError("q must lie in [0, 1]")
    if q <= 0.5:
        return 1.0 / (1.0 - q)
    return psi(_tangent_point(q), q)


def xi_tilde(q: float, c: float) -> float:
    """Largest fixed point of xi = c ((1-q) Q(xi,1) + q Q(xi,2)); 0 below
    the core threshold.

    The map is increasing and bounded by c, so iterating from xi = c
    descends monotonically onto the largest root; a bisection polish
    sharpens transversal roots.  Exactly at the threshold (q > 1/2) the
    root is tangent and is taken from the threshold computation.
    """
    if c < 0:
        raise ValueError("c must be nonnegative")
    if c == 0:
        return 0.0
    if q > 0.5:
        tangent = _tangent_point(q)
        if abs(c - psi(tangent, q)) <= 1e-9:
            return tangent

    def step(x: float) -> float:
        return c * (1.0 - math.exp(-x) - q * x * math.exp(-x))

    x = float(c)
    for _ in range(200000):
        nx = step(x)
        if x - nx < _SOLVE_TOL:
            x = nx
            break
        x = nx
    if x < 1e-9:
        return 0.0
    lo = x * (1.0 - 1e-6)
    if lo - step(lo) < 0.0:
        return _bisect(lambda t: t - step(t), lo, x + 1e-12, tol=1e-14)
    return x


class CoreFractions(NamedTuple):
    n1_frac: float
    n2_frac: float
    halfedge_frac: float
    below_threshold: bool


def core_fractions(q: float, c: float) -> CoreFractions:
    """Limits of n1(core)/n, n2(core)/n and 2 m(core)/n; zeros below the
    core threshold."""
    xt = xi_tilde(q, c)
    if xt <= 0.0:
        return CoreFractions(0.0, 0.0, 0.0, True)
    n1f = (1 - q) * poisson_tail(xt, 2)
    n2f = q * poisson_tail(xt, 3)
    half = xt * ((1 - q) * poisson_tail(xt, 1) + q * poisson_tail(xt, 2))
    return CoreFractions(n1f, n2f, half, False)


def core_plus_fraction(q: float, c: float) -> float:
    """Limit of the accreted-core vertex fraction; 0 below the threshold."""
    xt = xi_tilde(q, c)
    if xt <= 0.0:
        return 0.0
    return 1.0 - math.exp(-xt) - q * xt * math.exp(-xt)


def _largest_delta_root(q: float, c: float) -> float:
    # rightmost root of delta on [0, 1]; 0 when delta never dips negative
    steps = 4000
    vals = [delta(k / steps, c, q) for k in range(steps + 1)]
    for k in range(steps - 1, -1, -1):
        if vals[k] < 0.0 <= vals[k + 1]:
            return _bisect(lambda x: delta(x, c, q), k / steps, (k + 1) / steps, tol=1e-14)
    return 0.0


def orientable_fraction_limit(q: float, c: float) -> float:
    """Limit of (max orientable edges) / m for the random graph."""
    if c <= 0:
        return 1.0
    x = _largest_delta_root(q, c)
    return min(1.0, calF(x, c, q))


def branching_coeffs(q: float, c: float) -> tuple[float, float]:
    """Mean offspring counts of the two surviving branching types above
    the core threshold; their combination 2*p23 + p12 stays below 1."""
    if c <= c_tilde(q):
        raise ValueError("branching coefficients need c above the core threshold")
    xt = xi_tilde(q, c)
    e = math.exp(-xt)
    p12 = (1 - q) * c * e
    p23 = q * (xt * c / 2.0) * e
    return p12, p23


@dataclass(frozen=True)
class ThresholdReport:
    """All limit quantities for one (q, c) pair; c-dependent fields are
    None when no c was given, p12/p23 are None below the core threshold."""

    q: float
    c: float | None
    xi_star: float | None
    c_star: float
    c_tilde: float
    xi_tilde: float | None = None
    core_n1_frac: float | None = None
    core_n2_frac: float | None = None
    core_halfedge_frac: float | None = None
    core_plus_frac: float | None = None
    orientable_limit: float | None = None
    p12: float | None = None
    p23: float | None = None
    below_core_threshold: bool | None = None
    at_core_threshold: bool | None = None


def threshold_report(q: float, c: float | None = None) -> ThresholdReport:
    """Assemble thresholds for q, plus the c-dependent limits if c given."""
    xs = xi_star(q) if q > 0.5 else None
    cs = c_star(q)
    ct = c_tilde(q)
    if c is None:
        return ThresholdReport(q=q, c=None, xi_star=xs, c_star=cs, c_tilde=ct)
    xt = xi_tilde(q, c)
    fr = core_fractions(q, c)
    below = xt <= 0.0
    at = q > 0.5 and abs(c - ct) <= 1e-9
    p12 = p23 = None
    if not below and c > ct:
        p12, p23 = branching_coeffs(q, c)
    return ThresholdReport(
        q=q,
        c=c,
        xi_star=xs,
        c_star=cs,
        c_tilde=ct,
        xi_tilde=xt,
        core_n1_frac=fr.n1_frac,
        core_n2_frac=fr.n2_frac,
        core_halfedge_frac=fr.halfedge_frac,
        core_plus_frac=core_plus_fraction(q, c),
        orientable_limit=orientable_fraction_limit(q, c),
        p12=p12,
        p23=p23,
        below_core_threshold=below,
        at_core_threshold=at,
    )
