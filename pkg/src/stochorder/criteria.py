"""Kernel criteria deciding stochastic orders inside a one-parameter family.

Everything here reads off order relations from the shape of the kernel
K_nu(x) = d/dnu log w_nu(x) and of the score s_nu = K_nu - E[K_nu(X)]:

  likelihood ratio   up  <=>  K_nu nondecreasing in x for every nu
  log-concavity      down <=> K_nu concave in x for every nu
  usual (st)         up  <=>  E[K_nu | X >= x] >= E[K_nu] for every nu, x
  hazard rate        up  <=>  K_nu(x) <= E[K_nu | X >= x] for every nu, x

Direction semantics: 'up' claims P_{nu1} <= P_{nu2} whenever nu1 <= nu2,
'down' the reverse. The log-concavity check defaults to 'down' because a
concave kernel dominates the larger parameter; 'up' tests convexity.

The quantifier over nu is scanned on a finite grid, so holds means "holds at
every scanned parameter", exact in x per scanned value. The superlevel and
unimodal-endpoint checks are sufficient conditions only: a violated
hypothesis yields status 'inconclusive', never 'fails'.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .catalog import DensityFamily, SupportGrid, density
from .verdicts import OrderVerdict, Witness

__all__ = [
    "TOL_SHAPE",
    "TOL_TAIL",
    "EPS_TAIL",
    "NU_POINTS",
    "nu_scan",
    "TailMeanProfile",
    "tail_mean_profile",
    "weighted_log_derivative",
    "check_lr",
    "check_lc",
    "check_st",
    "check_hr",
    "check_superlevel",
    "check_unimodal_endpoint",
    "check_concave_endpoint",
]

TOL_SHAPE = 1e-9  # sign tests on analytic kernel values
TOL_TAIL = 1e-8  # tests involving cumulative sums
EPS_TAIL = 1e-12  # survival threshold below which tail means are skipped
NU_POINTS = 17  # default parameter-scan resolution


def nu_scan(nu_lo: float, nu_hi: float, n: int = NU_POINTS) -> np.ndarray:
    """Scan grid over [nu_lo, nu_hi]: log-spaced when the span is wide."""
    lo, hi = sorted((float(nu_lo), float(nu_hi)))
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo == hi:
        raise ValueError("nu_scan needs two distinct finite endpoints")
    if n < 2:
        raise ValueError("nu_scan needs at least two points")
    if lo > 0 and hi / lo >= 10.0:
        return np.geomspace(lo, hi, n)
    return np.linspace(lo, hi, n)


# ---------------------------------------------------------------------------
# three-levels quantities


@dataclass(frozen=True)
class TailMeanProfile:
    """Kernel and conditional tail means of one family member on a grid.

    Holds K_nu(x) and E[K_nu(X) | X >= x] per grid point with positive
    survival, plus the grand mean E[K_nu(X)]. The three identities follow by
    subtraction: score, d/dnu log-survival, and d/dnu log-hazard.
    """

    nu: float
    x: np.ndarray
    kernel_values: np.ndarray
    tail_means: np.ndarray
    grand_mean: float
    survival: np.ndarray

    @property
    def values(self) -> list[tuple[float, float]]:
        return list(zip(self.kernel_values.tolist(), self.tail_means.tolist()))

    def score(self) -> np.ndarray:
        """d/dnu log f_nu(x) = K_nu(x) - E[K_nu]."""
        return self.kernel_values - self.grand_mean

    def dlog_survival(self) -> np.ndarray:
        """d/dnu log survival(x) = E[K_nu | X >= x] - E[K_nu]."""
        return self.tail_means - self.grand_mean

    def dlog_hazard(self) -> np.ndarray:
        """d/dnu log hazard(x) = K_nu(x) - E[K_nu | X >= x]."""
        return self.kernel_values - self.tail_means


def tail_mean_profile(f: DensityFamily, nu: float, grid: SupportGrid) -> TailMeanProfile:
    """One backward pass giving E[K | X >= x] at every positive-survival point."""
    d = density(f, nu, grid)
    k = np.asarray(f.kernel(nu, grid.points), dtype=float)
    grand = float(np.dot(k, d.masses))
    surv = d.survival_all()
    tail_num = np.cumsum((k * d.masses)[::-1])[::-1]
    ok = surv > 0.0
    return TailMeanProfile(
        nu=float(nu),
        x=grid.points[ok],
        kernel_values=k[ok],
        tail_means=tail_num[ok] / surv[ok],
        grand_mean=grand,
        survival=surv[ok],
    )


def weighted_log_derivative(f: DensityFamily, nu: float, u, grid: SupportGrid) -> float:
    """d/dnu log E[u(X)] under P_nu, via the reweighted score mean.

    Equals E^u[K_nu] - E[K_nu] where E^u is the u-tilted law; u may be a
    callable on the grid points or an aligned nonnegative array.
    """
    d = density(f, nu, grid)
    w = np.asarray(u(grid.points) if callable(u) else u, dtype=float)
    if w.shape != grid.points.shape:
        raise ValueError("weight must align with the grid points")
    if np.any(w < 0):
        raise ValueError("weight must be nonnegative")
    wm = w * d.masses
    total = wm.sum()
    if not total > 0:
        raise ValueError("weighted mass is zero")
    k = np.asarray(f.kernel(nu, grid.points), dtype=float)
    return float(np.dot(k, wm) / total - np.dot(k, d.masses))


# ---------------------------------------------------------------------------
# scan plumbing


def _validate_scan(f: DensityFamily, nu_grid, grid: SupportGrid) -> list[float]:
    nus = [f.validate_param(nu) for nu in np.atleast_1d(np.asarray(nu_grid, dtype=float))]
    if not nus:
        raise ValueError("empty parameter grid")
    if grid.size < 3:
        raise ValueError("support grid needs at least three points")
    return nus


def _slopes(grid: SupportGrid, v: np.ndarray) -> np.ndarray:
    """Adjacent-pair increments: plain differences for integer grids, divided
    differences elsewhere so the uneven atom cell of mixed grids is handled."""
    dv = np.diff(v)
    if grid.kind == "discrete":
        return dv
    return dv / np.diff(grid.points)


def _first_bad(margins: np.ndarray, tol: float) -> int:
    bad = np.nonzero(margins < -tol)[0]
    return int(bad[0]) if bad.size else -1


def _claim(order: str, direction: str) -> str:
    lohi = ("P[nu1]", "P[nu2]") if direction == "up" else ("P[nu2]", "P[nu1]")
    return f"{lohi[0]} <={order} {lohi[1]} whenever nu1 <= nu2 in the scanned range"


_SCANNED_NOTE = "holds on the scanned parameter grid; exact in x per scanned value"


def _shape_check(
    f: DensityFamily,
    nu_grid,
    grid: SupportGrid,
    *,
    order: str,
    direction: str,
    tol: float,
    per_nu,
    witness_kind: str,
) -> OrderVerdict:
    """Shared scan loop: per_nu(nu) -> (xs, margins); first violation wins."""
    nus = _validate_scan(f, nu_grid, grid)
    tolerances = {"tol_shape": tol, "nu_points": len(nus), "grid_points": grid.size}
    worst = math.inf
    for nu in nus:
        xs, margins = per_nu(nu)
        i = _first_bad(margins, tol)
        if i >= 0:
            w = Witness(x=float(xs[i]), margin=float(margins[i]), nu=nu, kind=witness_kind)
            return OrderVerdict(
                order=order,
                direction=direction,
                status="fails",
                method="kernel-criterion",
                tolerances=tolerances,
                witness=w,
                margin=w.margin,
                claim=_claim(order, direction),
            )
        if margins.size:
            worst = min(worst, float(margins.min()))
    return OrderVerdict(
        order=order,
        direction=direction,
        status="holds",
        method="kernel-criterion",
        tolerances=tolerances,
        margin=None if math.isinf(worst) else worst,
        claim=_claim(order, direction),
        note=_SCANNED_NOTE,
    )


# ---------------------------------------------------------------------------
# the four kernel criteria


def check_lr(
    f: DensityFamily,
    nu_grid,
    grid: SupportGrid,
    direction: str = "up",
    tol_shape: float = TOL_SHAPE,
) -> OrderVerdict:
    """Likelihood-ratio order via kernel monotonicity on adjacent grid pairs."""
    sign = +1.0 if direction == "up" else -1.0

    def per_nu(nu: float):
        k = np.asarray(f.kernel(nu, grid.points), dtype=float)
        return grid.points[:-1], sign * _slopes(grid, k)

    return _shape_check(
        f, nu_grid, grid,
        order="lr", direction=direction, tol=tol_shape,
        per_nu=per_nu, witness_kind="adjacent-pair",
    )


def check_lc(
    f: DensityFamily,
    nu_grid,
    grid: SupportGrid,
    direction: str = "down",
    tol_shape: float = TOL_SHAPE,
) -> OrderVerdict:
    """Relative log-concavity via the kernel's second shape.

    direction 'down' tests concavity (larger parameter is dominated), 'up'
    tests convexity. Triplet tests use increment differences: second
    differences on integer grids, slope differences otherwise.
    """
    sign = -1.0 if direction == "down" else +1.0

    def per_nu(nu: float):
        k = np.asarray(f.kernel(nu, grid.points), dtype=float)
        d = _slopes(grid, k)
        return grid.points[1:-1], sign * np.diff(d)

    return _shape_check(
        f, nu_grid, grid,
        order="lc", direction=direction, tol=tol_shape,
        per_nu=per_nu, witness_kind="triplet",
    )


def _tail_check(
    f: DensityFamily,
    nu_grid,
    grid: SupportGrid,
    *,
    order: str,
    direction: str,
    tol_tail: float,
    eps_tail: float,
    quantity,
) -> OrderVerdict:
    nus = _validate_scan(f, nu_grid, grid)
    sign = +1.0 if direction == "up" else -1.0
    tolerances = {
        "tol_tail": tol_tail,
        "eps_tail": eps_tail,
        "nu_points": len(nus),
        "grid_points": grid.size,
    }
    worst = math.inf
    for nu in nus:
        prof = tail_mean_profile(f, nu, grid)
        keep = prof.survival > eps_tail
        margins = sign * quantity(prof)[keep]
        xs = prof.x[keep]
        i = _first_bad(margins, tol_tail)
        if i >= 0:
            w = Witness(x=float(xs[i]), margin=float(margins[i]), nu=nu, kind="grid-point")
            return OrderVerdict(
                order=order, direction=direction, status="fails",
                method="kernel-criterion", tolerances=tolerances,
                witness=w, margin=w.margin, claim=_claim(order, direction),
            )
        if margins.size:
            worst = min(worst, float(margins.min()))
    return OrderVerdict(
        order=order, direction=direction, status="holds",
        method="kernel-criterion", tolerances=tolerances,
        margin=None if math.isinf(worst) else worst,
        claim=_claim(order, direction), note=_SCANNED_NOTE,
    )


def check_st(
    f: DensityFamily,
    nu_grid,
    grid: SupportGrid,
    direction: str = "up",
    tol_tail: float = TOL_TAIL,
    eps_tail: float = EPS_TAIL,
) -> OrderVerdict:
    """Usual order via the sign of E[K | X >= x] - E[K] at every tail point."""
    return _tail_check(
        f, nu_grid, grid,
        order="st", direction=direction, tol_tail=tol_tail, eps_tail=eps_tail,
        quantity=lambda p: p.dlog_survival(),
    )


def check_hr(
    f: DensityFamily,
    nu_grid,
    grid: SupportGrid,
    direction: str = "up",
    tol_tail: float = TOL_TAIL,
    eps_tail: float = EPS_TAIL,
) -> OrderVerdict:
    """Hazard-rate order via the sign of E[K | X >= x] - K(x)."""
    return _tail_check(
        f, nu_grid, grid,
        order="hr", direction=direction, tol_tail=tol_tail, eps_tail=eps_tail,
        quantity=lambda p: -p.dlog_hazard(),
    )


# ---------------------------------------------------------------------------
# sufficient conditions for the decreasing direction


def _require_left_endpoint(f: DensityFamily) -> None:
    if not math.isfinite(f.support[0]):
        raise ValueError(f"{f.name}: support is unbounded below, no left endpoint")


def _inconclusive(order, direction, method, tolerances, witness, note) -> OrderVerdict:
    return OrderVerdict(
        order=order, direction=direction, status="inconclusive", method=method,
        tolerances=tolerances, witness=witness, margin=witness.margin,
        claim=_claim(order, direction), note=note,
    )


def check_superlevel(
    f: DensityFamily,
    nu_grid,
    grid: SupportGrid,
    want_hr: bool = False,
    tol_tail: float = TOL_TAIL,
    tol_shape: float = TOL_SHAPE,
) -> OrderVerdict:
    """Score-superlevel test certifying the decreasing usual order.

    For each scanned nu the set {s_nu >= 0} must be a nonempty initial
    interval of the grid; with want_hr the score must also be nonincreasing
    from its last nonnegative point on, upgrading the claim to the
    hazard-rate order. Sufficient only: a violated hypothesis is reported as
    inconclusive, with the offending point attached.
    """
    _require_left_endpoint(f)
    nus = _validate_scan(f, nu_grid, grid)
    order = "hr" if want_hr else "st"
    tolerances = {
        "tol_tail": tol_tail,
        "tol_shape": tol_shape,
        "nu_points": len(nus),
        "grid_points": grid.size,
    }
    worst = math.inf
    for nu in nus:
        d = density(f, nu, grid)
        k = np.asarray(f.kernel(nu, grid.points), dtype=float)
        s = k - float(np.dot(k, d.masses))
        if s[0] < -tol_tail:
            w = Witness(x=float(grid.points[0]), margin=float(s[0]), nu=nu, kind="endpoint-score")
            return _inconclusive(order, "down", "superlevel", tolerances, w,
                                 "score negative at the left endpoint")
        worst = min(worst, float(s[0]))
        neg = np.nonzero(s < -tol_tail)[0]
        if neg.size:
            first_neg = int(neg[0])
            returns = np.nonzero(s[first_neg:] > tol_tail)[0]
            if returns.size:
                j = first_neg + int(returns[0])
                w = Witness(x=float(grid.points[j]), margin=float(-s[j]), nu=nu,
                            kind="superlevel-return")
                return _inconclusive(order, "down", "superlevel", tolerances, w,
                                     "score returns above zero after going negative")
        if want_hr:
            nonneg = np.nonzero(s >= -tol_tail)[0]
            m = int(nonneg[-1]) if nonneg.size else 0
            if s.size - m >= 2:
                dv = np.diff(s[m:])
                dsl = dv if grid.kind == "discrete" else dv / np.diff(grid.points[m:])
            else:
                dsl = np.empty(0)
            i = _first_bad(-dsl, tol_shape)
            if i >= 0:
                w = Witness(x=float(grid.points[m + i]), margin=float(-dsl[i]), nu=nu,
                            kind="tail-monotone")
                return _inconclusive(order, "down", "superlevel", tolerances, w,
                                     "score not nonincreasing beyond its superlevel set")
            if dsl.size:
                worst = min(worst, float(-dsl.max()))
    return OrderVerdict(
        order=order, direction="down", status="holds", method="superlevel",
        tolerances=tolerances, margin=None if math.isinf(worst) else worst,
        claim=_claim(order, "down"),
        note=_SCANNED_NOTE + ("; certifies st as well" if want_hr else ""),
    )


def check_unimodal_endpoint(
    f: DensityFamily,
    nu_grid,
    grid: SupportGrid,
    mode_c: float,
    tol_tail: float = TOL_TAIL,
    tol_shape: float = TOL_SHAPE,
) -> OrderVerdict:
    """Unimodal-kernel test: K rises to a fixed mode c, falls after, and the
    score at the left endpoint is nonnegative, for every scanned nu. Certifies
    both the usual and hazard-rate orders in the decreasing direction;
    violated hypotheses give inconclusive."""
    _require_left_endpoint(f)
    nus = _validate_scan(f, nu_grid, grid)
    c = float(mode_c)
    tolerances = {
        "tol_tail": tol_tail,
        "tol_shape": tol_shape,
        "mode_c": c,
        "nu_points": len(nus),
        "grid_points": grid.size,
    }
    pts = grid.points
    # adjacent pairs entirely left/right of c; pairs straddling c are exempt
    left_pairs = np.nonzero(pts[1:] <= c)[0]
    right_pairs = np.nonzero(pts[:-1] >= c)[0]
    worst = math.inf
    for nu in nus:
        d = density(f, nu, grid)
        k = np.asarray(f.kernel(nu, pts), dtype=float)
        dsl = _slopes(grid, k)
        i = _first_bad(dsl[left_pairs], tol_shape)
        if i >= 0:
            j = int(left_pairs[i])
            w = Witness(x=float(pts[j]), margin=float(dsl[j]), nu=nu, kind="rising")
            return _inconclusive("hr", "down", "unimodal-endpoint", tolerances, w,
                                 "kernel not nondecreasing left of the mode")
        i = _first_bad(-dsl[right_pairs], tol_shape)
        if i >= 0:
            j = int(right_pairs[i])
            w = Witness(x=float(pts[j]), margin=float(-dsl[j]), nu=nu, kind="falling")
            return _inconclusive("hr", "down", "unimodal-endpoint", tolerances, w,
                                 "kernel not nonincreasing right of the mode")
        s0 = float(k[0] - np.dot(k, d.masses))
        if s0 < -tol_tail:
            w = Witness(x=float(pts[0]), margin=s0, nu=nu, kind="endpoint-score")
            return _inconclusive("hr", "down", "unimodal-endpoint", tolerances, w,
                                 "score negative at the left endpoint")
        worst = min(worst, s0)
        if left_pairs.size:
            worst = min(worst, float(dsl[left_pairs].min()))
        if right_pairs.size:
            worst = min(worst, float(-dsl[right_pairs].max()))
    return OrderVerdict(
        order="hr", direction="down", status="holds", method="unimodal-endpoint",
        tolerances=tolerances, margin=None if math.isinf(worst) else worst,
        claim=_claim("hr", "down"),
        note=_SCANNED_NOTE + "; certifies st as well",
    )


def check_concave_endpoint(
    f: DensityFamily,
    nu_grid,
    grid: SupportGrid,
    tol_tail: float = TOL_TAIL,
    tol_shape: float = TOL_SHAPE,
) -> OrderVerdict:
    """Concave kernel plus nonnegative endpoint score: st and hr, decreasing.

    A concave function's superlevel set is an interval, so this is a special
    case of the superlevel test; kept separate because the hypothesis is
    cheaper to state and check."""
    _require_left_endpoint(f)
    nus = _validate_scan(f, nu_grid, grid)
    tolerances = {
        "tol_tail": tol_tail,
        "tol_shape": tol_shape,
        "nu_points": len(nus),
        "grid_points": grid.size,
    }
    worst = math.inf
    for nu in nus:
        d = density(f, nu, grid)
        k = np.asarray(f.kernel(nu, grid.points), dtype=float)
        curv = np.diff(_slopes(grid, k))
        i = _first_bad(-curv, tol_shape)
        if i >= 0:
            w = Witness(x=float(grid.points[i + 1]), margin=float(-curv[i]), nu=nu,
                        kind="triplet")
            return _inconclusive("hr", "down", "concave-endpoint", tolerances, w,
                                 "kernel not concave")
        s0 = float(k[0] - np.dot(k, d.masses))
        if s0 < -tol_tail:
            w = Witness(x=float(grid.points[0]), margin=s0, nu=nu, kind="endpoint-score")
            return _inconclusive("hr", "down", "concave-endpoint", tolerances, w,
                                 "score negative at the left endpoint")
        worst = min(worst, s0)
        if curv.size:
            worst = min(worst, float(-curv.max()))
    return OrderVerdict(
        order="hr", direction="down", status="holds", method="concave-endpoint",
        tolerances=tolerances, margin=None if math.isinf(worst) else worst,
        claim=_claim("hr", "down"),
        note=_SCANNED_NOTE + "; certifies st as well",
    )
