"""Compound sums X = J_1 + ... + J_N and their posterior-averaged kernels.

The counting variable N follows a one-parameter law with factor w_n(nu); the
summands J_i are i.i.d. on {1, 2, ...}. Writing G_nu(n) = d/dnu log w_n(nu)
for the counting kernel, the compound law has kernel

    K_nu(k) = E[G_nu(N) | X = k],

so monotonicity of G_nu in n transfers to K_nu in k whenever the posterior
P(N = . | X = k) is stochastically increasing in k, which holds when the
summand pmf is a Polya frequency sequence of order 2. For the catalogued
counting laws G_nu(n) = a(nu) + b(nu) n is affine and the lr direction is
the sign of b.

All arrays are truncated: summands at tail eps, counting at n_max, the
compound support at k_max; truncation budgets are recorded on the objects.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .catalog import DensityFamily, Distribution, discrete_grid, parse_spec
from .special import digamma_vec, log_factorial_vec, log_pochhammer
from .verdicts import OrderVerdict, Witness

__all__ = [
    "SummandLaw",
    "geometric_summand",
    "delta_summand",
    "two_point_summand",
    "poisson_shifted_summand",
    "summand_from_spec",
    "COUNTING_NAMES",
    "TABLE2_ROWS",
    "make_counting",
    "counting_from_spec",
    "CompoundModel",
    "make_compound",
    "convolution_power",
    "compound_pmf",
    "compound_kernel",
    "compound_kernel_all",
    "compound_score_all",
    "PosteriorMatrix",
    "posterior_matrix",
    "posterior_mean",
    "is_pf2",
    "is_tp2",
    "check_compound_lr",
    "poisson_binomial_pmf",
]

_EPS_TAIL = 1e-12
_TOL_SHAPE = 1e-9
_MINOR_TOL = 1e-12
_N_CAP = 500


# ---------------------------------------------------------------------------
# summands


@dataclass(frozen=True)
class SummandLaw:
    """Truncated summand pmf on {1, 2, ...}; masses[j-1] = P(J = j)."""

    masses: np.ndarray
    tail_mass: float

    def __post_init__(self) -> None:
        m = np.asarray(self.masses, dtype=float)
        object.__setattr__(self, "masses", m)
        if m.ndim != 1 or m.size == 0:
            raise ValueError("summand needs a nonempty mass vector")
        if np.any(m < 0):
            raise ValueError("summand masses must be nonnegative")
        nz = np.nonzero(m > 0)[0]
        if nz.size == 0:
            raise ValueError("summand has no mass")
        if np.any(m[nz[0] : nz[-1] + 1] == 0):
            raise ValueError("summand support must be an interval")
        total = m.sum() + self.tail_mass
        if not math.isclose(total, 1.0, rel_tol=0, abs_tol=1e-9):
            raise ValueError(f"summand masses + tail must sum to 1, got {total!r}")
        if not 0.0 <= self.tail_mass <= 1e-10:
            raise ValueError(f"summand tail mass {self.tail_mass!r} exceeds budget")

    @property
    def j_max(self) -> int:
        return int(self.masses.size)

    def pmf_from_zero(self) -> np.ndarray:
        """Masses re-indexed from 0 (with P(J=0) = 0), convolution-ready."""
        return np.concatenate(([0.0], self.masses))

    def mean(self) -> float:
        return float(np.dot(np.arange(1, self.j_max + 1), self.masses))


def geometric_summand(p: float, eps_tail: float = _EPS_TAIL) -> SummandLaw:
    """P(J = j) = p (1-p)^(j-1) on {1, 2, ...}, truncated at tail <= eps."""
    if not 0 < p < 1:
        raise ValueError("geometric summand needs p in (0,1)")
    j_max = max(1, math.ceil(math.log(eps_tail) / math.log1p(-p)))
    j = np.arange(1, j_max + 1)
    masses = p * (1.0 - p) ** (j - 1)
    return SummandLaw(masses, max(1.0 - masses.sum(), 0.0))


def delta_summand(j0: int) -> SummandLaw:
    if j0 < 1 or j0 != int(j0):
        raise ValueError("delta summand needs an integer j0 >= 1")
    masses = np.zeros(int(j0))
    masses[-1] = 1.0
    return SummandLaw(masses, 0.0)


def two_point_summand(w1: float) -> SummandLaw:
    """Mass w1 at 1 and 1-w1 at 2."""
    if not 0 < w1 < 1:
        raise ValueError("two-point summand needs w1 in (0,1)")
    return SummandLaw(np.array([w1, 1.0 - w1]), 0.0)


def poisson_shifted_summand(mu: float, eps_tail: float = _EPS_TAIL) -> SummandLaw:
    """J = 1 + M with M Poisson(mu), truncated at tail <= eps."""
    if not mu > 0:
        raise ValueError("shifted-poisson summand needs mu > 0")
    n = np.arange(0, 2000)
    pmf = np.exp(n * math.log(mu) - mu - log_factorial_vec(n.astype(float)))
    tail = 1.0 - np.cumsum(pmf)
    cut = np.nonzero(tail <= eps_tail)[0]
    if cut.size == 0:
        raise ValueError("shifted-poisson summand: tail target unreachable")
    j_hi = int(cut[0]) + 1
    return SummandLaw(pmf[:j_hi], max(1.0 - pmf[:j_hi].sum(), 0.0))


def _required(ps: dict, key: str, name: str) -> float:
    if key not in ps:
        raise ValueError(f"{name} summand needs parameter {key!r}")
    return float(ps.pop(key))


_SUMMAND_BUILDERS = {
    "geometric": lambda ps: geometric_summand(_required(ps, "p", "geometric")),
    "delta": lambda ps: delta_summand(int(ps.pop("j", 1))),
    "two-point": lambda ps: two_point_summand(_required(ps, "w1", "two-point")),
    "poisson-shifted": lambda ps: poisson_shifted_summand(_required(ps, "mu", "poisson-shifted")),
}


def summand_from_spec(text: str) -> SummandLaw:
    name, params = parse_spec(text)
    builder = _SUMMAND_BUILDERS.get(name)
    if builder is None:
        raise ValueError(
            f"unknown summand {name!r}; valid: {', '.join(sorted(_SUMMAND_BUILDERS))}"
        )
    out = builder(params)
    if params:
        raise ValueError(f"summand {name!r}: unknown parameters {sorted(params)}")
    return out


# ---------------------------------------------------------------------------
# counting laws

# per-family lr direction of the compound, i.e. the sign of b(nu)
TABLE2_ROWS = (
    ("poisson", "+", "up"),
    ("geometric", "-", "down"),
    ("negbinomial", "-", "down"),
    ("binomial", "+", "up"),
    ("logseries", "+", "up"),
)


def _count_poisson(fixed: dict) -> DensityFamily:
    if fixed:
        raise ValueError("poisson counting law takes no fixed parameters")
    return DensityFamily(
        name="poisson",
        kind="discrete",
        param_name="lam",
        param_interval=(0.0, math.inf),
        fixed_params={},
        support=(0.0, math.inf),
        log_factor=lambda lam, n: n * math.log(lam) - log_factorial_vec(n),
        kernel=lambda lam, n: n / lam,
        log_normalizer=lambda lam: lam,
        extras={
            "dlogA": lambda lam: 1.0,
            "affine": (lambda lam: 0.0, lambda lam: 1.0 / lam),
        },
    )


def _count_geometric(fixed: dict) -> DensityFamily:
    if fixed:
        raise ValueError("geometric counting law takes no fixed parameters")
    return DensityFamily(
        name="geometric",
        kind="discrete",
        param_name="p",
        param_interval=(0.0, 1.0),
        fixed_params={},
        support=(0.0, math.inf),
        log_factor=lambda p, n: n * math.log1p(-p),
        kernel=lambda p, n: -n / (1.0 - p),
        log_normalizer=lambda p: -math.log(p),
        extras={
            "dlogA": lambda p: -1.0 / p,
            "affine": (lambda p: 0.0, lambda p: -1.0 / (1.0 - p)),
        },
    )


def _count_negbinomial(fixed: dict) -> DensityFamily:
    alpha = float(fixed.pop("alpha", 2.0))
    if fixed:
        raise ValueError(f"negbinomial counting law: unknown parameters {sorted(fixed)}")
    if not alpha > 0:
        raise ValueError("negbinomial counting law needs alpha > 0")

    def log_factor(p: float, n: np.ndarray) -> np.ndarray:
        poch = np.array([log_pochhammer(alpha, int(v)) for v in n.astype(np.int64)])
        return poch - log_factorial_vec(n) + alpha * math.log(p) + n * math.log1p(-p)

    return DensityFamily(
        name="negbinomial",
        kind="discrete",
        param_name="p",
        param_interval=(0.0, 1.0),
        fixed_params={"alpha": alpha},
        support=(0.0, math.inf),
        log_factor=log_factor,
        kernel=lambda p, n: alpha / p - n / (1.0 - p),
        log_normalizer=lambda p: 0.0,
        extras={
            "dlogA": lambda p: 0.0,
            "affine": (lambda p: alpha / p, lambda p: -1.0 / (1.0 - p)),
        },
    )


def _count_binomial(fixed: dict) -> DensityFamily:
    n0 = float(fixed.pop("n0", 10))
    if fixed:
        raise ValueError(f"binomial counting law: unknown parameters {sorted(fixed)}")
    if n0 < 1 or n0 != int(n0):
        raise ValueError("binomial counting law needs integer n0 >= 1")
    n0 = int(n0)

    def log_factor(p: float, n: np.ndarray) -> np.ndarray:
        lb = (
            log_factorial_vec(np.full(n.shape, float(n0)))
            - log_factorial_vec(n)
            - log_factorial_vec(n0 - n)
        )
        return lb + n * math.log(p) + (n0 - n) * math.log1p(-p)

    return DensityFamily(
        name="binomial",
        kind="discrete",
        param_name="p",
        param_interval=(0.0, 1.0),
        fixed_params={"n0": n0},
        support=(0.0, float(n0)),
        log_factor=log_factor,
        kernel=lambda p, n: n / (p * (1.0 - p)) - n0 / (1.0 - p),
        log_normalizer=lambda p: 0.0,
        extras={
            "dlogA": lambda p: 0.0,
            "affine": (lambda p: -n0 / (1.0 - p), lambda p: 1.0 / (p * (1.0 - p))),
        },
    )


def _count_logseries(fixed: dict) -> DensityFamily:
    if fixed:
        raise ValueError("logseries counting law takes no fixed parameters")

    def log_factor(th: float, n: np.ndarray) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return n * math.log(th) - np.log(n)

    return DensityFamily(
        name="logseries",
        kind="discrete",
        param_name="theta",
        param_interval=(0.0, 1.0),
        fixed_params={},
        support=(1.0, math.inf),
        log_factor=log_factor,
        kernel=lambda th, n: n / th,
        log_normalizer=lambda th: math.log(-math.log1p(-th)),
        extras={
            "dlogA": lambda th: 1.0 / ((1.0 - th) * (-math.log1p(-th))),
            "affine": (lambda th: 0.0, lambda th: 1.0 / th),
        },
    )


def _count_negbinomial_in_shape(fixed: dict) -> DensityFamily:
    p = float(fixed.pop("p", 0.5))
    if fixed:
        raise ValueError(
            f"negbinomial-in-shape counting law: unknown parameters {sorted(fixed)}"
        )
    if not 0 < p < 1:
        raise ValueError("negbinomial-in-shape counting law needs p in (0,1)")
    logq = math.log1p(-p)

    def log_factor(alpha: float, n: np.ndarray) -> np.ndarray:
        poch = np.array([log_pochhammer(alpha, int(v)) for v in n.astype(np.int64)])
        return poch - log_factorial_vec(n) + n * logq

    return DensityFamily(
        name="negbinomial-in-shape",
        kind="discrete",
        param_name="alpha",
        param_interval=(0.0, math.inf),
        fixed_params={"p": p},
        support=(0.0, math.inf),
        log_factor=log_factor,
        kernel=lambda a, n: digamma_vec(a + n) - digamma_vec(np.full(n.shape, a)),
        log_normalizer=lambda a: -a * math.log(p),
        extras={"dlogA": lambda a: -math.log(p)},
    )


_COUNTING_BUILDERS = {
    "poisson": _count_poisson,
    "geometric": _count_geometric,
    "negbinomial": _count_negbinomial,
    "binomial": _count_binomial,
    "logseries": _count_logseries,
    "negbinomial-in-shape": _count_negbinomial_in_shape,
}

COUNTING_NAMES = tuple(sorted(_COUNTING_BUILDERS))


def make_counting(name: str, **fixed: float) -> DensityFamily:
    builder = _COUNTING_BUILDERS.get(name)
    if builder is None:
        raise ValueError(f"unknown counting law {name!r}; valid: {', '.join(COUNTING_NAMES)}")
    return builder(dict(fixed))


def counting_from_spec(text: str) -> DensityFamily:
    name, params = parse_spec(text)
    return make_counting(name, **params)


# ---------------------------------------------------------------------------
# convolution and the compound law


def convolution_power(F: SummandLaw, n: int, k_max: int) -> np.ndarray:
    """F^{*n} restricted to {0..k_max}; F^{*0} is the point mass at 0."""
    if n < 0:
        raise ValueError("convolution power needs n >= 0")
    base = F.pmf_from_zero()
    out = np.zeros(k_max + 1)
    out[0] = 1.0
    for _ in range(n):
        out = np.convolve(out, base)[: k_max + 1]
    return out


def _conv_table(F: SummandLaw, n_max: int, k_max: int) -> np.ndarray:
    base = F.pmf_from_zero()
    table = np.zeros((n_max + 1, k_max + 1))
    table[0, 0] = 1.0
    for n in range(1, n_max + 1):
        table[n] = np.convolve(table[n - 1], base)[: k_max + 1]
    return table


@dataclass(frozen=True)
class CompoundModel:
    """Counting law + summand with a precomputed convolution table.

    conv[n, k] = F^{*n}({k}) for n <= n_max, k <= k_max; k_max is chosen so
    the compound law at every construction-time parameter keeps tail mass
    below eps_tail.
    """

    counting: DensityFamily
    summand: SummandLaw
    k_max: int
    n_max: int
    conv: np.ndarray
    eps_tail: float

    @property
    def n_lo(self) -> int:
        return int(self.counting.support[0])

    def counting_pmf(self, nu: float) -> np.ndarray:
        """q_nu(n) for n = 0..n_max (zero below the counting support)."""
        nu = self.counting.validate_param(nu)
        n = np.arange(self.n_lo, self.n_max + 1, dtype=float)
        q = np.zeros(self.n_max + 1)
        q[self.n_lo :] = np.exp(
            self.counting.log_factor(nu, n) - self.counting.log_normalizer(nu)
        )
        return q

    def compound_masses(self, nu: float) -> np.ndarray:
        """Unnormalized compound pmf on {0..k_max}; deficit <= eps budgets."""
        return self.counting_pmf(nu) @ self.conv


def _counting_n_max(counting: DensityFamily, nus, eps_tail: float, n_cap: int) -> int:
    n_lo = int(counting.support[0])
    if math.isfinite(counting.support[1]):
        return int(counting.support[1])
    need = n_lo
    for nu in nus:
        n = np.arange(n_lo, n_cap + 1, dtype=float)
        q = np.exp(counting.log_factor(nu, n) - counting.log_normalizer(nu))
        tail = 1.0 - np.cumsum(q)
        idx = np.nonzero(tail <= eps_tail)[0]
        if idx.size == 0:
            raise ValueError(
                f"{counting.name}: counting tail target {eps_tail:g} "
                f"unreachable within n_max={n_cap}"
            )
        need = max(need, n_lo + int(idx[0]))
    return need


def make_compound(
    counting: DensityFamily,
    summand: SummandLaw,
    nus,
    *,
    eps_tail: float = _EPS_TAIL,
    k_cap: int = 2000,
    n_cap: int = _N_CAP,
    k_max: int | None = None,
) -> CompoundModel:
    """Build the model with truncations valid for every nu in `nus`."""
    nus = [counting.validate_param(nu) for nu in np.atleast_1d(nus)]
    n_max = _counting_n_max(counting, nus, eps_tail, n_cap)
    hi = k_max if k_max is not None else k_cap
    conv = _conv_table(summand, n_max, hi)
    model = CompoundModel(counting, summand, hi, n_max, conv, eps_tail)
    if k_max is not None:
        return model
    # shrink k_max to the smallest k keeping every scanned law's tail in budget;
    # the tail is measured within the computed table (the counting and summand
    # truncation deficits carry their own budgets and never shrink with k)
    need = 1
    for nu in nus:
        masses = model.compound_masses(nu)
        if masses.sum() < 1.0 - 1e-6:
            raise ValueError(
                f"compound mass beyond k_max={k_cap} exceeds 1e-6 at nu={nu:g}; "
                "raise k_cap or pass k_max explicitly"
            )
        beyond = np.cumsum(masses[::-1])[::-1] - masses
        need = max(need, int(np.nonzero(beyond <= eps_tail)[0][0]))
    return CompoundModel(counting, summand, need, n_max, conv[:, : need + 1], eps_tail)


def compound_pmf(m: CompoundModel, nu: float) -> Distribution:
    """The compound law at nu as a Distribution on {0..k_max}."""
    masses = m.compound_masses(nu)
    total = masses.sum()
    if not total > 0:
        raise ValueError("compound pmf has zero mass on the truncated support")
    return Distribution(discrete_grid(0, m.k_max), masses / total)


# ---------------------------------------------------------------------------
# total positivity


def is_pf2(pmf, tol: float = _TOL_SHAPE) -> tuple[bool, Witness | None]:
    """Polya frequency of order 2: interval support and log-concave there."""
    p = np.asarray(pmf, dtype=float)
    nz = np.nonzero(p > 0)[0]
    if nz.size == 0:
        raise ValueError("empty pmf")
    run = np.arange(int(nz[0]), int(nz[-1]) + 1)
    holes = run[p[run] == 0]
    if holes.size:
        return False, Witness(x=float(holes[0]), margin=-math.inf, kind="support-gap")
    curv = np.diff(np.log(p[run]), 2)
    bad = np.nonzero(curv > tol)[0]
    if bad.size:
        i = int(bad[0])
        return False, Witness(x=float(run[i + 1]), margin=float(-curv[i]), kind="triplet")
    return True, None


def is_tp2(M, tol: float = _MINOR_TOL) -> tuple[bool, Witness | None]:
    """All 2x2 minors nonnegative: adjacent minors when strictly positive,
    all row/column pairs otherwise (adjacency is only sufficient without
    zeros)."""
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or min(A.shape) < 1:
        raise ValueError("is_tp2 needs a 2-d matrix")
    if np.any(A < 0):
        raise ValueError("is_tp2 needs a nonnegative matrix")
    if min(A.shape) == 1:
        return True, None
    if np.all(A > 0):
        minors = A[:-1, :-1] * A[1:, 1:] - A[:-1, 1:] * A[1:, :-1]
        i, j = np.unravel_index(np.argmin(minors), minors.shape)
        worst = float(minors[i, j])
        if worst < -tol:
            return False, Witness(x=float(j), margin=worst, nu=float(i), kind="minor")
        return True, None
    rows, cols = A.shape
    for i1 in range(rows - 1):
        for i2 in range(i1 + 1, rows):
            # d[j1, j2] = A[i1,j1] A[i2,j2] - A[i1,j2] A[i2,j1]
            d = np.outer(A[i1], A[i2]) - np.outer(A[i2], A[i1])
            iu = np.triu_indices(cols, k=1)
            vals = d[iu]
            k = int(np.argmin(vals))
            if vals[k] < -tol:
                return False, Witness(
                    x=float(iu[1][k]), margin=float(vals[k]), nu=float(i1), kind="minor"
                )
    return True, None


# ---------------------------------------------------------------------------
# posterior and kernels


@dataclass(frozen=True)
class PosteriorMatrix:
    """P(N = n | X = k) over rows n = 0..n_max and support columns of X."""

    n_values: np.ndarray
    k_values: np.ndarray
    matrix: np.ndarray

    def column_sums(self) -> np.ndarray:
        return self.matrix.sum(axis=0)


def posterior_matrix(m: CompoundModel, nu: float) -> PosteriorMatrix:
    q = m.counting_pmf(nu)
    joint = q[:, None] * m.conv
    f = joint.sum(axis=0)
    supp = np.nonzero(f > 0)[0]
    return PosteriorMatrix(
        n_values=np.arange(m.n_max + 1, dtype=float),
        k_values=supp.astype(float),
        matrix=joint[:, supp] / f[supp],
    )


def posterior_mean(m: CompoundModel, nu: float) -> tuple[np.ndarray, np.ndarray]:
    """(support points k, E[N | X = k]) over the compound support."""
    pm = posterior_matrix(m, nu)
    return pm.k_values, pm.n_values @ pm.matrix


def compound_kernel_all(m: CompoundModel, nu: float) -> tuple[np.ndarray, np.ndarray]:
    """(support points k, E[G_nu(N) | X = k]) over the compound support."""
    pm = posterior_matrix(m, nu)
    g = np.zeros(m.n_max + 1)
    n = np.arange(m.n_lo, m.n_max + 1, dtype=float)
    g[m.n_lo :] = np.asarray(m.counting.kernel(nu, n), dtype=float)
    return pm.k_values, g @ pm.matrix


def compound_kernel(m: CompoundModel, nu: float, k: int) -> float:
    ks, vals = compound_kernel_all(m, nu)
    idx = np.nonzero(ks == float(k))[0]
    if idx.size == 0:
        raise ValueError(f"k={k} is outside the compound support")
    return float(vals[int(idx[0])])


def compound_score_all(m: CompoundModel, nu: float) -> tuple[np.ndarray, np.ndarray]:
    """(k, d/dnu log f_nu(k)): the posterior-averaged centred kernel."""
    dlogA = m.counting.extras.get("dlogA")
    if dlogA is None:
        raise ValueError(f"{m.counting.name}: no normalizer derivative registered")
    ks, vals = compound_kernel_all(m, nu)
    return ks, vals - float(dlogA(nu))


# ---------------------------------------------------------------------------
# the direction check


def check_compound_lr(
    m: CompoundModel,
    nu1: float,
    nu2: float,
    nu_points: int = 17,
    tol_shape: float = _TOL_SHAPE,
) -> OrderVerdict:
    """Monotone counting kernel + PF2 summand => compound lr order.

    Scans G_nu over n for each nu in [nu1, nu2]; nondecreasing gives the
    increasing direction, nonincreasing the decreasing one. The verdict is
    cross-checked by the brute oracle on the two endpoint compound laws. A
    non-PF2 summand or a non-monotone kernel yields inconclusive.
    """
    from .oracle import oracle_lr  # local import keeps oracle kernel-free

    lo, hi = sorted((float(nu1), float(nu2)))
    if lo == hi:
        raise ValueError("check_compound_lr needs two distinct parameter values")
    if lo > 0 and hi / lo >= 10.0:
        nus = np.geomspace(lo, hi, nu_points)
    else:
        nus = np.linspace(lo, hi, nu_points)
    tolerances = {"tol_shape": tol_shape, "nu_points": int(nu_points)}

    ok, w = is_pf2(m.summand.pmf_from_zero())
    if not ok:
        return OrderVerdict(
            order="lr", direction="up", status="inconclusive", method="compound-kernel",
            tolerances=tolerances, witness=w, margin=w.margin,
            claim="C[nu1] <=lr C[nu2] whenever nu1 <= nu2 in the scanned range",
            note="summand is not a PF2 sequence; hypothesis unmet",
        )

    n = np.arange(m.n_lo, m.n_max + 1, dtype=float)
    up_margin = math.inf
    down_margin = math.inf
    up_w = down_w = None
    for nu in nus:
        dg = np.diff(np.asarray(m.counting.kernel(nu, n), dtype=float))
        if up_w is None:
            i = np.nonzero(dg < -tol_shape)[0]
            if i.size:
                j = int(i[0])
                up_w = Witness(x=float(n[j]), margin=float(dg[j]), nu=float(nu),
                               kind="adjacent-pair")
            elif dg.size:
                up_margin = min(up_margin, float(dg.min()))
        if down_w is None:
            i = np.nonzero(-dg < -tol_shape)[0]
            if i.size:
                j = int(i[0])
                down_w = Witness(x=float(n[j]), margin=float(-dg[j]), nu=float(nu),
                                 kind="adjacent-pair")
            elif dg.size:
                down_margin = min(down_margin, float(-dg.max()))

    if up_w is not None and down_w is not None:
        return OrderVerdict(
            order="lr", direction="up", status="inconclusive", method="compound-kernel",
            tolerances=tolerances, witness=up_w, margin=up_w.margin,
            claim="C[nu1] <=lr C[nu2] whenever nu1 <= nu2 in the scanned range",
            note="counting kernel is not monotone in n; hypothesis unmet",
        )
    direction = "up" if up_w is None else "down"
    margin = up_margin if direction == "up" else down_margin
    claim = (
        "C[nu1] <=lr C[nu2] whenever nu1 <= nu2 in the scanned range"
        if direction == "up"
        else "C[nu2] <=lr C[nu1] whenever nu1 <= nu2 in the scanned range"
    )
    low, high = compound_pmf(m, lo), compound_pmf(m, hi)
    cross = oracle_lr(low, high) if direction == "up" else oracle_lr(high, low)
    note = f"endpoint oracle {cross.status}"
    status = "holds" if cross.holds else "inconclusive"
    return OrderVerdict(
        order="lr", direction=direction, status=status, method="compound-kernel",
        tolerances=tolerances,
        witness=None if cross.holds else cross.witness,
        margin=(None if math.isinf(margin) else margin) if cross.holds else cross.margin,
        claim=claim,
        note=note if cross.holds else note + "; kernel criterion and oracle disagree",
    )


def poisson_binomial_pmf(p_vec) -> Distribution:
    """Law of a sum of independent Bernoulli(p_i), by exact convolution."""
    ps = np.atleast_1d(np.asarray(p_vec, dtype=float))
    if ps.size == 0 or np.any((ps < 0) | (ps > 1)):
        raise ValueError("need a nonempty vector of probabilities in [0,1]")
    pmf = np.array([1.0])
    for p in ps:
        pmf = np.convolve(pmf, np.array([1.0 - p, p]))
    return Distribution(discrete_grid(0, ps.size), pmf)
