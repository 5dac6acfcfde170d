"""Cross-family comparisons: pairwise log-factor kernels, parameter paths,
and closed-form order thresholds.

Two laws with positive factors w^P, w^Q on a common support J are compared
through the pairwise kernel K(k) = log(w^P_k / w^Q_k), the (constant-in-t)
path kernel of the geometric interpolation between them:

    Q <=lr P  <=>  K nondecreasing on J
    P <=lc Q  <=>  K concave on J

For joint moves of several parameters, ParamPath carries theta(t) and its
velocity; the chain-rule kernel K_t = sum_i theta_i'(t) K^(i) feeds the same
shape tests.

Closed forms: the Katz-class thresholds evaluate the lr/st boundary
inequalities exactly, the beta-binomial vs hypergeometric endpoint condition
W(r+n-1) <= s(B-n+1) certifies the lr order, and the beta-binomial to
binomial interpolation checks p >= (r+n-1)/(r+s+n-1) along a pseudo-sample
path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .catalog import Distribution, SupportGrid, discrete_grid, parse_spec
from .oracle import oracle_for, oracle_lc, oracle_lr
from .special import digamma, log_factorial_vec, log_pochhammer
from .verdicts import OrderVerdict, Witness

__all__ = [
    "PairwiseLaw",
    "LAW_NAMES",
    "make_law",
    "law_from_spec",
    "law_distribution",
    "PairwiseKernel",
    "pairwise_kernel",
    "check_pairwise",
    "katz_threshold",
    "betabin_hyp_condition",
    "betabin_hyp_delta",
    "ParamPath",
    "path_kernel",
    "check_path_order",
    "geometric_interpolation_path",
    "PATH_NAMES",
    "make_path",
    "InterpolationReport",
    "betabin_bin_interpolation",
    "interpolation_law",
]

_TOL_SHAPE = 1e-9
_EPS_TAIL = 1e-12
_KMAX_CAP = 10_000


# ---------------------------------------------------------------------------
# concrete discrete laws with explicit factors


@dataclass(frozen=True)
class PairwiseLaw:
    """A discrete law given by a positive factor w_k on an integer support."""

    name: str
    support: tuple[int, float]  # upper end may be inf
    log_weight: Callable[[np.ndarray], np.ndarray]
    params: Mapping[str, float] = field(default_factory=dict)

    def describe(self) -> str:
        ps = ",".join(f"{k}={v:g}" for k, v in self.params.items())
        return f"{self.name}({ps})" if ps else self.name


def _need(params: dict, key: str, law: str) -> float:
    if key not in params:
        raise ValueError(f"{law} law needs parameter {key!r}")
    return float(params.pop(key))


def _law_binomial(ps: dict) -> PairwiseLaw:
    n = int(_need(ps, "n", "binomial"))
    p = _need(ps, "p", "binomial")
    if n < 1 or not 0 < p < 1:
        raise ValueError("binomial law needs n >= 1 and p in (0,1)")
    logit = math.log(p) - math.log1p(-p)

    def logw(k: np.ndarray) -> np.ndarray:
        lb = (
            log_factorial_vec(np.full(k.shape, float(n)))
            - log_factorial_vec(k)
            - log_factorial_vec(n - k)
        )
        return lb + k * logit

    return PairwiseLaw("binomial", (0, n), logw, {"n": n, "p": p})


def _law_poisson(ps: dict) -> PairwiseLaw:
    lam = _need(ps, "lambda", "poisson")
    if not lam > 0:
        raise ValueError("poisson law needs lambda > 0")
    return PairwiseLaw(
        "poisson", (0, math.inf),
        lambda k: k * math.log(lam) - log_factorial_vec(k),
        {"lambda": lam},
    )


def _law_negbinomial(ps: dict) -> PairwiseLaw:
    r = _need(ps, "r", "negbinomial")
    p = _need(ps, "p", "negbinomial")
    if not (r > 0 and 0 < p < 1):
        raise ValueError("negbinomial law needs r > 0 and p in (0,1)")
    logq = math.log1p(-p)

    def logw(k: np.ndarray) -> np.ndarray:
        poch = np.array([log_pochhammer(r, int(v)) for v in k.astype(np.int64)])
        return poch - log_factorial_vec(k) + k * logq

    return PairwiseLaw("negbinomial", (0, math.inf), logw, {"r": r, "p": p})


def _law_geometric(ps: dict) -> PairwiseLaw:
    p = _need(ps, "p", "geometric")
    if not 0 < p < 1:
        raise ValueError("geometric law needs p in (0,1)")
    return PairwiseLaw(
        "geometric", (0, math.inf), lambda k: k * math.log1p(-p), {"p": p}
    )


def _law_cmp(ps: dict) -> PairwiseLaw:
    mu = _need(ps, "mu", "cmp")
    nu = _need(ps, "nu", "cmp")
    if not (mu > 0 and nu > 0):
        raise ValueError("cmp law needs mu > 0 and nu > 0")
    return PairwiseLaw(
        "cmp", (0, math.inf),
        lambda k: k * math.log(mu) - nu * log_factorial_vec(k),
        {"mu": mu, "nu": nu},
    )


def _law_betabinomial(ps: dict) -> PairwiseLaw:
    n = int(_need(ps, "n", "betabinomial"))
    r = _need(ps, "r", "betabinomial")
    s = _need(ps, "s", "betabinomial")
    if n < 1 or not (r > 0 and s > 0):
        raise ValueError("betabinomial law needs n >= 1 and r, s > 0")

    def logw(k: np.ndarray) -> np.ndarray:
        ki = k.astype(np.int64)
        lb = (
            log_factorial_vec(np.full(k.shape, float(n)))
            - log_factorial_vec(k)
            - log_factorial_vec(n - k)
        )
        up = np.array([log_pochhammer(r, int(v)) for v in ki])
        dn = np.array([log_pochhammer(s, n - int(v)) for v in ki])
        return lb + up + dn

    return PairwiseLaw("betabinomial", (0, n), logw, {"n": n, "r": r, "s": s})


def _law_hypergeometric(ps: dict) -> PairwiseLaw:
    B = int(_need(ps, "B", "hypergeometric"))
    W = int(_need(ps, "W", "hypergeometric"))
    n = int(_need(ps, "n", "hypergeometric"))
    if min(B, W) < 0 or n < 1 or n > B + W:
        raise ValueError("hypergeometric law needs B, W >= 0 and 1 <= n <= B + W")
    lo, hi = max(0, n - W), min(n, B)

    def logw(k: np.ndarray) -> np.ndarray:
        def logc(m: int, j: np.ndarray) -> np.ndarray:
            return (
                log_factorial_vec(np.full(j.shape, float(m)))
                - log_factorial_vec(j)
                - log_factorial_vec(m - j)
            )

        return logc(B, k) + logc(W, n - k)

    return PairwiseLaw("hypergeometric", (lo, hi), logw, {"B": B, "W": W, "n": n})


_LAW_BUILDERS = {
    "binomial": _law_binomial,
    "poisson": _law_poisson,
    "negbinomial": _law_negbinomial,
    "geometric": _law_geometric,
    "cmp": _law_cmp,
    "betabinomial": _law_betabinomial,
    "hypergeometric": _law_hypergeometric,
}

LAW_NAMES = tuple(sorted(_LAW_BUILDERS))


def make_law(name: str, **params: float) -> PairwiseLaw:
    builder = _LAW_BUILDERS.get(name)
    if builder is None:
        raise ValueError(f"unknown law {name!r}; valid names: {', '.join(LAW_NAMES)}")
    ps = dict(params)
    law = builder(ps)
    if ps:
        raise ValueError(f"law {name!r}: unknown parameters {sorted(ps)}")
    return law


def law_from_spec(text: str) -> PairwiseLaw:
    name, params = parse_spec(text)
    return make_law(name, **params)


def law_distribution(law: PairwiseLaw, eps_tail: float = _EPS_TAIL) -> Distribution:
    """Normalize the factor into a pmf, truncating infinite supports at the
    point where the remaining mass is below eps_tail."""
    lo = int(law.support[0])
    if math.isfinite(law.support[1]):
        hi = int(law.support[1])
        k = np.arange(lo, hi + 1, dtype=float)
        w = np.exp(law.log_weight(k))
        return Distribution(discrete_grid(lo, hi), w / w.sum())
    k = np.arange(lo, _KMAX_CAP + 1, dtype=float)
    logw = law.log_weight(k)
    w = np.exp(logw - logw.max())
    tail = 1.0 - np.cumsum(w) / w.sum()
    idx = np.nonzero(tail <= eps_tail)[0]
    if idx.size == 0:
        raise ValueError(f"{law.name}: tail target {eps_tail:g} unreachable")
    hi = lo + int(idx[0])
    w = w[: idx[0] + 1]
    return Distribution(discrete_grid(lo, hi), w / w.sum())


# ---------------------------------------------------------------------------
# the pairwise kernel


@dataclass(frozen=True)
class PairwiseKernel:
    """K(k) = log(w^P_k / w^Q_k) on the common support, with differences."""

    grid: SupportGrid
    values: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    p_law: PairwiseLaw
    q_law: PairwiseLaw


def pairwise_kernel(
    P_spec: str | PairwiseLaw,
    Q_spec: str | PairwiseLaw,
    grid: SupportGrid | None = None,
    kmax: int = 200,
) -> PairwiseKernel:
    """Build the pairwise kernel on the intersection of the two supports,
    clipped to `grid` (or to kmax points when both supports are infinite)."""
    p = law_from_spec(P_spec) if isinstance(P_spec, str) else P_spec
    q = law_from_spec(Q_spec) if isinstance(Q_spec, str) else Q_spec
    lo = max(int(p.support[0]), int(q.support[0]))
    hi = min(p.support[1], q.support[1])
    if grid is not None:
        if grid.kind != "discrete":
            raise ValueError("pairwise kernels live on discrete grids")
        lo = max(lo, int(grid.lower))
        hi = min(hi, grid.upper)
    hi = int(hi) if math.isfinite(hi) else lo + int(kmax)
    if hi < lo:
        raise ValueError(f"{p.name} and {q.name} have no common support")
    k = np.arange(lo, hi + 1, dtype=float)
    vals = np.asarray(p.log_weight(k), dtype=float) - np.asarray(q.log_weight(k), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise ValueError("pairwise kernel undefined: factor vanishes on the common support")
    return PairwiseKernel(
        grid=discrete_grid(lo, hi),
        values=vals,
        d1=np.diff(vals),
        d2=np.diff(vals, 2),
        p_law=p,
        q_law=q,
    )


def check_pairwise(
    pk: PairwiseKernel,
    order: str,
    tol_shape: float = _TOL_SHAPE,
    cross_check: bool = True,
) -> OrderVerdict:
    """Decide the lr or lc relation from the pairwise kernel's shape.

    order 'lr' tests K nondecreasing, claiming Q <=lr P; order 'lc' tests K
    concave, claiming P <=lc Q. A claim whose dominated side out-reaches the
    dominating support fails outright. Holds/fails verdicts are cross-checked
    against the brute oracle on the normalized laws.
    """
    if order not in ("lr", "lc"):
        raise ValueError("pairwise checks decide 'lr' or 'lc' only")
    p, q = pk.p_law, pk.q_law
    tolerances = {"tol_shape": tol_shape, "grid_points": pk.grid.size}
    if order == "lr":
        claim = f"{q.describe()} <=lr {p.describe()}"
        support_ok = q.support[1] <= p.support[1]
        margins = pk.d1
        xs = pk.grid.points[:-1]
        kind = "adjacent-pair"
    else:
        claim = f"{p.describe()} <=lc {q.describe()}"
        support_ok = q.support[0] <= p.support[0] and p.support[1] <= q.support[1]
        margins = -pk.d2
        xs = pk.grid.points[1:-1]
        kind = "triplet"

    if not support_ok:
        w = Witness(x=float(pk.grid.points[-1]), margin=-math.inf, kind="support")
        return OrderVerdict(
            order=order, direction="up", status="fails", method="pairwise-kernel",
            tolerances=tolerances, witness=w, margin=w.margin, claim=claim,
            note="dominated support reaches beyond the dominating support",
        )

    bad = np.nonzero(margins < -tol_shape)[0]
    witness = None
    if bad.size:
        i = int(bad[0])
        witness = Witness(x=float(xs[i]), margin=float(margins[i]), kind=kind)
    status = "fails" if witness is not None else "holds"
    margin = witness.margin if witness is not None else (
        float(margins.min()) if margins.size else None
    )
    note = ""
    if cross_check:
        dp = law_distribution(p)
        dq = law_distribution(q)
        cross = oracle_lr(dq, dp) if order == "lr" else oracle_lc(dp, dq)
        note = f"endpoint oracle {cross.status}"
        if (cross.status == "holds") != (status == "holds"):
            return OrderVerdict(
                order=order, direction="up", status="inconclusive",
                method="pairwise-kernel", tolerances=tolerances, witness=witness,
                margin=margin, claim=claim,
                note=note + "; kernel test and oracle disagree",
            )
    return OrderVerdict(
        order=order, direction="up", status=status, method="pairwise-kernel",
        tolerances=tolerances, witness=witness, margin=margin, claim=claim, note=note,
    )


# ---------------------------------------------------------------------------
# closed-form thresholds


def katz_threshold(pair: str, params: Mapping[str, float]) -> dict[str, bool]:
    """Exact lr/st boundary inequalities for the three Katz-class pairings.

    bin-poi: Bin(n,p) against Poi(lambda); bin-nb: Bin(n,p) against NB(r,pi);
    poi-nb: Poi(lambda) against NB(r,p). Weak inequalities: boundary cases
    count as ordered.
    """
    ps = dict(params)

    def take(key: str) -> float:
        if key not in ps:
            raise ValueError(f"katz pair {pair!r} needs parameter {key!r}")
        return float(ps.pop(key))

    if pair == "bin-poi":
        n, p, lam = take("n"), take("p"), take("lambda")
        out = {
            "lr_condition": n * p <= (1.0 - p) * lam,
            "st_condition": (1.0 - p) ** n >= math.exp(-lam),
        }
    elif pair == "bin-nb":
        n, p, r, pi = take("n"), take("p"), take("r"), take("pi")
        # the odds form np <= r(1-pi)(1-p): the binomial power parameter is
        # p/(1-p), so the slope comparison keeps the (1-p) factor
        out = {
            "lr_condition": n * p <= r * (1.0 - pi) * (1.0 - p),
            "st_condition": (1.0 - p) ** n >= pi**r,
        }
    elif pair == "poi-nb":
        lam, r, p = take("lambda"), take("r"), take("p")
        out = {
            "lr_condition": lam <= r * (1.0 - p),
            "st_condition": math.exp(-lam) >= p**r,
        }
    else:
        raise ValueError(f"unknown katz pair {pair!r}; valid: bin-poi, bin-nb, poi-nb")
    if ps:
        raise ValueError(f"katz pair {pair!r}: unknown parameters {sorted(ps)}")
    return out


def betabin_hyp_delta(B: int, W: int, n: int, r: float, s: float, k) -> np.ndarray:
    """Forward difference of log(w^Hyp / w^BetaBin) at k, in closed form."""
    k = np.asarray(k, dtype=float)
    return np.log((B - k) * (s + n - k - 1.0)) - np.log((W - n + k + 1.0) * (r + k))


def betabin_hyp_condition(B: int, W: int, n: int, r: float, s: float) -> bool:
    """W(r+n-1) <= s(B-n+1): the endpoint slope test certifying
    BetaBin(n,r,s) <=lr Hyp(B,W,n). The slope profile is nonincreasing in k,
    so the k = n-1 cell governs."""
    if not (B >= n and W >= n and n >= 1):
        raise ValueError("need B, W >= n >= 1 so the hypergeometric support is {0..n}")
    if not (r > 0 and s > 0):
        raise ValueError("need r, s > 0")
    return W * (r + n - 1.0) <= s * (B - n + 1.0)


# ---------------------------------------------------------------------------
# parameter paths


@dataclass(frozen=True)
class ParamPath:
    """A moving parameter vector theta(t) with per-component kernels.

    component_kernels[i](theta, x) is the kernel of the i-th coordinate at
    the full parameter point; the chain rule weights it by theta_i'(t).
    """

    dim: int
    theta: Callable[[float], tuple[float, ...]]
    theta_dot: Callable[[float], tuple[float, ...]]
    t_interval: tuple[float, float]
    component_kernels: tuple[Callable, ...]

    def validate(self, ts, fd_tol: float = 1e-6, h: float = 1e-7) -> None:
        """theta_dot must match central differences of theta at the samples."""
        for t in ts:
            th_dot = np.asarray(self.theta_dot(float(t)), dtype=float)
            fd = (
                np.asarray(self.theta(float(t) + h), dtype=float)
                - np.asarray(self.theta(float(t) - h), dtype=float)
            ) / (2.0 * h)
            err = float(np.max(np.abs(th_dot - fd)))
            if err > fd_tol * max(1.0, float(np.max(np.abs(th_dot)))):
                raise ValueError(f"theta_dot mismatches finite differences at t={t}: {err:g}")


def path_kernel(path: ParamPath, t: float, x) -> np.ndarray:
    """K_t(x) = sum_i theta_i'(t) K^(i)_theta(t)(x)."""
    pts = np.atleast_1d(np.asarray(x, dtype=float))
    th = path.theta(float(t))
    dot = path.theta_dot(float(t))
    out = np.zeros(pts.shape)
    for i in range(path.dim):
        if dot[i] != 0.0:
            out += dot[i] * np.asarray(path.component_kernels[i](th, pts), dtype=float)
    return out


def _linear_path(theta0, theta1, kernels) -> ParamPath:
    a = np.asarray(theta0, dtype=float)
    b = np.asarray(theta1, dtype=float)
    return ParamPath(
        dim=a.size,
        theta=lambda t: tuple(a + t * (b - a)),
        theta_dot=lambda t: tuple(b - a),
        t_interval=(0.0, 1.0),
        component_kernels=tuple(kernels),
    )


def check_path_order(
    path: ParamPath,
    family_builder: Callable[[tuple[float, ...], SupportGrid], Distribution],
    order: str,
    t_grid=None,
    grid: SupportGrid | None = None,
    direction: str | None = None,
    tol_shape: float = _TOL_SHAPE,
    tol_tail: float = 1e-8,
) -> OrderVerdict:
    """Run the kernel shape test for `order` on K_t over a t-scan.

    direction defaults to 'up' (law at smaller t below law at larger t) for
    lr/st/hr and 'down' for lc. The two endpoint laws are compared by the
    brute oracle; disagreement with a conclusive shape verdict downgrades the
    status to inconclusive.
    """
    if grid is None:
        raise ValueError("check_path_order needs an explicit support grid")
    if order not in ("lr", "lc", "st", "hr"):
        raise ValueError(f"unknown order {order!r}")
    if direction is None:
        direction = "down" if order == "lc" else "up"
    lo, hi = path.t_interval
    ts = np.linspace(lo, hi, 33) if t_grid is None else np.asarray(t_grid, dtype=float)
    path.validate(ts)
    tolerances = {"tol_shape": tol_shape, "tol_tail": tol_tail, "t_points": int(ts.size)}
    pts = grid.points
    steps = np.ones(pts.size - 1) if grid.kind == "discrete" else np.diff(pts)

    worst = math.inf
    witness = None
    for t in ts:
        k = path_kernel(path, t, pts)
        if order in ("lr", "lc"):
            d = np.diff(k) / steps
            if order == "lr":
                margins = d if direction == "up" else -d
                xs = pts[:-1]
                kind = "adjacent-pair"
            else:
                dd = np.diff(d)
                margins = -dd if direction == "down" else dd
                xs = pts[1:-1]
                kind = "triplet"
            tol = tol_shape
        else:
            law = family_builder(path.theta(float(t)), grid)
            grand = float(np.dot(k, law.masses))
            surv = law.survival_all()
            tail_mean = np.cumsum((k * law.masses)[::-1])[::-1] / np.where(surv > 0, surv, 1.0)
            keep = surv > 1e-12
            quantity = (tail_mean - grand) if order == "st" else (tail_mean - k)
            margins = quantity[keep] if direction == "up" else -quantity[keep]
            xs = pts[keep]
            kind = "grid-point"
            tol = tol_tail
        bad = np.nonzero(margins < -tol)[0]
        if bad.size:
            i = int(bad[0])
            witness = Witness(x=float(xs[i]), margin=float(margins[i]), nu=float(t), kind=kind)
            break
        if margins.size:
            worst = min(worst, float(margins.min()))

    a = family_builder(path.theta(lo), grid)
    b = family_builder(path.theta(hi), grid)
    lo_law, hi_law = (a, b) if direction == "up" else (b, a)
    cross = oracle_for(order)(lo_law, hi_law)
    lohi = ("P[t0]", "P[t1]") if direction == "up" else ("P[t1]", "P[t0]")
    claim = f"{lohi[0]} <={order} {lohi[1]} along the path"
    status = "fails" if witness is not None else "holds"
    note = f"endpoint oracle {cross.status}"
    if (cross.status == "holds") != (status == "holds"):
        return OrderVerdict(
            order=order, direction=direction, status="inconclusive",
            method="path-kernel", tolerances=tolerances, witness=witness or cross.witness,
            margin=witness.margin if witness else cross.margin, claim=claim,
            note=note + "; path test and oracle disagree",
        )
    return OrderVerdict(
        order=order, direction=direction, status=status, method="path-kernel",
        tolerances=tolerances, witness=witness,
        margin=witness.margin if witness else (None if math.isinf(worst) else worst),
        claim=claim, note=note,
    )


def geometric_interpolation_path(P: PairwiseLaw, Q: PairwiseLaw) -> ParamPath:
    """w_t = (w^P)^t (w^Q)^(1-t): its path kernel is the pairwise kernel,
    constant in t."""

    def kern(th: tuple[float, ...], x: np.ndarray) -> np.ndarray:
        return np.asarray(P.log_weight(x), dtype=float) - np.asarray(
            Q.log_weight(x), dtype=float
        )

    return ParamPath(
        dim=1,
        theta=lambda t: (t,),
        theta_dot=lambda t: (1.0,),
        t_interval=(0.0, 1.0),
        component_kernels=(kern,),
    )


# -- named paths for the CLI --------------------------------------------------


def _nb_path(ps: dict):
    r0, r1 = _need(ps, "r1", "negbinomial path"), _need(ps, "r2", "negbinomial path")
    q0, q1 = _need(ps, "q1", "negbinomial path"), _need(ps, "q2", "negbinomial path")
    if not (0 < r0 <= r1 and 0 < q0 <= q1 < 1):
        raise ValueError("negbinomial path needs 0 < r1 <= r2 and 0 < q1 <= q2 < 1")

    def k_shape(th, k):
        return np.array([digamma(th[0] + v) - digamma(th[0]) for v in k])

    def k_power(th, k):
        return k / th[1]

    path = _linear_path((r0, q0), (r1, q1), (k_shape, k_power))

    def builder(th, grid: SupportGrid) -> Distribution:
        k = grid.points
        logw = (
            np.array([log_pochhammer(th[0], int(v)) for v in k.astype(np.int64)])
            - log_factorial_vec(k)
            + k * math.log(th[1])
        )
        w = np.exp(logw - logw.max())
        return Distribution(grid, w / w.sum())

    return path, builder


def _bb_path(ps: dict):
    n = int(_need(ps, "n", "betabinomial path"))
    r0, r1 = _need(ps, "r1", "betabinomial path"), _need(ps, "r2", "betabinomial path")
    s0, s1 = _need(ps, "s1", "betabinomial path"), _need(ps, "s2", "betabinomial path")
    if not (n >= 1 and 0 < r0 <= r1 and s0 >= s1 > 0):
        raise ValueError("betabinomial path needs n >= 1, r nondecreasing, s nonincreasing")

    def k_r(th, k):
        return np.array([digamma(th[0] + v) - digamma(th[0]) for v in k])

    def k_s(th, k):
        return np.array([digamma(th[1] + n - v) - digamma(th[1]) for v in k])

    path = _linear_path((r0, s0), (r1, s1), (k_r, k_s))

    def builder(th, grid: SupportGrid) -> Distribution:
        law = make_law("betabinomial", n=n, r=th[0], s=th[1])
        k = grid.points
        w = np.exp(law.log_weight(k))
        return Distribution(grid, w / w.sum())

    return path, builder


def _gamma_path(ps: dict):
    r0, r1 = _need(ps, "r1", "gamma path"), _need(ps, "r2", "gamma path")
    rho0, rho1 = _need(ps, "rho1", "gamma path"), _need(ps, "rho2", "gamma path")
    if not (0 < r0 <= r1 and rho0 >= rho1 > 0):
        raise ValueError("gamma path needs shape nondecreasing and rate nonincreasing")

    def k_shape(th, x):
        return np.log(x)

    def k_rate(th, x):
        return -x

    path = _linear_path((r0, rho0), (r1, rho1), (k_shape, k_rate))

    def builder(th, grid: SupportGrid) -> Distribution:
        x = grid.points
        logf = (th[0] - 1.0) * np.log(x) - th[1] * x
        w = np.exp(logf - logf.max()) * grid.weights()
        return Distribution(grid, w / w.sum())

    return path, builder


_PATH_BUILDERS = {
    "negbinomial": _nb_path,
    "betabinomial": _bb_path,
    "gamma": _gamma_path,
}

PATH_NAMES = tuple(sorted(_PATH_BUILDERS))


def make_path(name: str, **params: float):
    """(ParamPath, family_builder) for a named two-parameter move."""
    builder = _PATH_BUILDERS.get(name)
    if builder is None:
        raise ValueError(f"unknown path {name!r}; valid names: {', '.join(PATH_NAMES)}")
    ps = dict(params)
    out = builder(ps)
    if ps:
        raise ValueError(f"path {name!r}: unknown parameters {sorted(ps)}")
    return out


# ---------------------------------------------------------------------------
# beta-binomial to binomial interpolation


def interpolation_law(n: int, r: float, s: float, p: float, c: float) -> Distribution:
    """The normalized pseudo-sample law at c: BetaBin(n, r + cp, s + c(1-p))."""
    law = make_law("betabinomial", n=n, r=r + c * p, s=s + c * (1.0 - p))
    k = np.arange(0, n + 1, dtype=float)
    w = np.exp(law.log_weight(k) - law.log_weight(k).max())
    return Distribution(discrete_grid(0, n), w / w.sum())


@dataclass(frozen=True)
class InterpolationReport:
    condition: bool
    threshold: float
    c_values: tuple[float, ...]
    kernels: Mapping[float, np.ndarray]
    delta_margins: Mapping[float, float]


def betabin_bin_interpolation(
    n: int, r: float, s: float, p: float, c_values: tuple[float, ...] = (0.0, 1.0, 10.0, 100.0)
) -> InterpolationReport:
    """Move from BetaBin(n,r,s) toward Bin(n,p) by adding c pseudo-samples.

    The path kernel at pseudo-sample weight c is

        K_c(k) = p[psi(r+cp+k) - psi(r+cp)] + (1-p)[psi(s+c(1-p)+n-k) - psi(s+c(1-p))]

    whose forward difference has sign governed by p(s+n-1) - (1-p)r - k for
    every c. The condition p >= (r+n-1)/(r+s+n-1) makes every difference
    nonnegative, certifying BetaBin(n,r,s) <=lr Bin(n,p).
    """
    if not (n >= 1 and r > 0 and s > 0 and 0 < p < 1):
        raise ValueError("need n >= 1, r, s > 0 and p in (0,1)")
    threshold = (r + n - 1.0) / (r + s + n - 1.0)
    k = np.arange(0, n + 1, dtype=float)
    kernels: dict[float, np.ndarray] = {}
    delta_margins: dict[float, float] = {}
    for c in c_values:
        a = r + c * p
        b = s + c * (1.0 - p)
        vals = p * np.array([digamma(a + v) - digamma(a) for v in k]) + (1.0 - p) * np.array(
            [digamma(b + n - v) - digamma(b) for v in k]
        )
        kernels[float(c)] = vals
        delta_margins[float(c)] = float(np.diff(vals).min())
    return InterpolationReport(
        condition=p >= threshold,
        threshold=threshold,
        c_values=tuple(float(c) for c in c_values),
        kernels=kernels,
        delta_margins=delta_margins,
    )
