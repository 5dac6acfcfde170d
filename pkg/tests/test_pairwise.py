"""Cross-family kernels, closed-form thresholds, parameter paths."""

import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from scipy import stats

from stochorder.catalog import continuous_grid, discrete_grid
from stochorder.oracle import oracle_lr, oracle_st, total_variation
from stochorder.pairwise import (
    LAW_NAMES,
    PairwiseLaw,
    ParamPath,
    betabin_bin_interpolation,
    betabin_hyp_condition,
    betabin_hyp_delta,
    check_pairwise,
    check_path_order,
    geometric_interpolation_path,
    interpolation_law,
    katz_threshold,
    law_distribution,
    law_from_spec,
    make_law,
    make_path,
    pairwise_kernel,
    path_kernel,
)


# ---------------------------------------------------------------------------
# concrete laws


def test_binomial_law_matches_scipy():
    d = law_distribution(make_law("binomial", n=10, p=0.3))
    k = np.arange(11)
    assert np.array_equal(d.support.points, k.astype(float))
    assert np.allclose(d.masses, stats.binom(10, 0.3).pmf(k), atol=1e-12)


def test_poisson_and_geometric_laws_match_scipy():
    d = law_distribution(law_from_spec("poisson:lambda=3"))
    k = d.support.points.astype(int)
    assert np.allclose(d.masses, stats.poisson(3.0).pmf(k), atol=1e-10)
    # infinite support is cut where the remaining mass drops below the target
    assert stats.poisson(3.0).sf(d.support.upper) <= 1e-11
    g = law_distribution(make_law("geometric", p=0.35))
    kg = g.support.points.astype(int)
    assert np.allclose(g.masses, stats.geom(0.35).pmf(kg + 1), atol=1e-10)


def test_negbinomial_law_matches_scipy():
    d = law_distribution(make_law("negbinomial", r=2.5, p=0.4))
    k = d.support.points.astype(int)
    assert np.allclose(d.masses, stats.nbinom(2.5, 0.4).pmf(k), atol=1e-10)


def test_betabinomial_law_matches_scipy():
    d = law_distribution(make_law("betabinomial", n=8, r=2.0, s=3.0))
    k = np.arange(9)
    assert np.allclose(d.masses, stats.betabinom(8, 2.0, 3.0).pmf(k), atol=1e-12)


def test_hypergeometric_law_matches_scipy():
    law = make_law("hypergeometric", B=7, W=5, n=4)
    assert law.support == (0, 4)
    d = law_distribution(law)
    k = np.arange(5)
    assert np.allclose(d.masses, stats.hypergeom(12, 7, 4).pmf(k), atol=1e-12)


def test_hypergeometric_support_clips_when_draws_exceed_white():
    law = make_law("hypergeometric", B=6, W=3, n=5)
    assert law.support == (2, 5)
    d = law_distribution(law)
    k = np.arange(2, 6)
    assert np.array_equal(d.support.points, k.astype(float))
    assert np.allclose(d.masses, stats.hypergeom(9, 6, 5).pmf(k), atol=1e-12)


def test_cmp_law_normalizes_by_direct_series():
    d = law_distribution(make_law("cmp", mu=1.5, nu=2.0))
    k = np.arange(201, dtype=float)
    w = np.exp(k * math.log(1.5) - 2.0 * np.cumsum(np.log(np.maximum(k, 1.0))))
    ref = w / w.sum()
    assert np.allclose(d.masses, ref[: d.masses.size], atol=1e-9)


def test_cmp_with_unit_shape_is_poisson():
    a = law_distribution(make_law("cmp", mu=2.0, nu=1.0))
    b = law_distribution(law_from_spec("poisson:lambda=2"))
    assert total_variation(a, b) <= 1e-15


def test_law_validation_and_spec_parsing():
    assert LAW_NAMES == tuple(sorted(LAW_NAMES))
    with pytest.raises(ValueError, match="unknown law"):
        make_law("weibull", k=1.0)
    with pytest.raises(ValueError, match="needs parameter"):
        make_law("binomial", n=10)
    with pytest.raises(ValueError, match="unknown parameters"):
        make_law("poisson", **{"lambda": 1.0, "rate": 2.0})
    with pytest.raises(ValueError, match="p in"):
        make_law("binomial", n=10, p=1.0)
    with pytest.raises(ValueError, match="needs n >= 1"):
        make_law("binomial", n=0, p=0.5)
    with pytest.raises(ValueError, match="mu > 0"):
        make_law("cmp", mu=-1.0, nu=2.0)
    with pytest.raises(ValueError, match="B, W >= 0"):
        make_law("hypergeometric", B=3, W=3, n=7)


def test_law_describe():
    assert make_law("binomial", n=10, p=0.05).describe() == "binomial(n=10,p=0.05)"
    assert PairwiseLaw("flat", (0, 3), lambda k: 0.0 * k).describe() == "flat"


def test_law_distribution_truncation_follows_tail_target():
    law = law_from_spec("poisson:lambda=3")
    tight = law_distribution(law)
    loose = law_distribution(law, eps_tail=1e-6)
    assert loose.support.upper < tight.support.upper
    assert tight.masses.sum() == pytest.approx(1.0, abs=1e-12)
    assert loose.masses.sum() == pytest.approx(1.0, abs=1e-12)


# ---------------------------------------------------------------------------
# the pairwise kernel


def test_pairwise_kernel_on_support_intersection():
    pk = pairwise_kernel("poisson:lambda=0.6", "binomial:n=10,p=0.05")
    assert pk.grid.kind == "discrete"
    assert np.array_equal(pk.grid.points, np.arange(11, dtype=float))
    k = pk.grid.points
    direct = pk.p_law.log_weight(k) - pk.q_law.log_weight(k)
    assert np.allclose(pk.values, direct, atol=1e-14)
    assert np.allclose(pk.d1, np.diff(pk.values), atol=0)
    assert np.allclose(pk.d2, np.diff(pk.values, 2), atol=0)


def test_pairwise_kernel_closed_form_differences():
    # log w^Poi - log w^Bin steps by log(lam) - log(n-k) - logit(p)
    n, p, lam = 10, 0.05, 0.6
    pk = pairwise_kernel(f"poisson:lambda={lam}", f"binomial:n={n},p={p}")
    k = np.arange(n, dtype=float)
    expected = math.log(lam) - np.log(n - k) - (math.log(p) - math.log1p(-p))
    assert np.allclose(pk.d1, expected, atol=1e-12)


def test_pairwise_kernel_kmax_and_grid_clip():
    pk = pairwise_kernel("poisson:lambda=2", "geometric:p=0.5", kmax=50)
    assert pk.grid.points[0] == 0.0 and pk.grid.points[-1] == 50.0
    clipped = pairwise_kernel("poisson:lambda=2", "geometric:p=0.5", grid=discrete_grid(3, 7))
    assert np.array_equal(clipped.grid.points, np.arange(3.0, 8.0))
    inner = pairwise_kernel("binomial:n=4,p=0.5", "poisson:lambda=1", grid=discrete_grid(0, 99))
    assert inner.grid.points[-1] == 4.0


def test_pairwise_kernel_rejects_bad_input():
    with pytest.raises(ValueError, match="discrete grids"):
        pairwise_kernel("poisson:lambda=1", "poisson:lambda=2", grid=continuous_grid(0.0, 10.0, n=10))
    with pytest.raises(ValueError, match="no common support"):
        pairwise_kernel(make_law("hypergeometric", B=6, W=3, n=5), "binomial:n=1,p=0.5")
    holed = PairwiseLaw("holed", (0, 5), lambda k: np.where(k == 2.0, -np.inf, 0.0))
    with pytest.raises(ValueError, match="factor vanishes"):
        pairwise_kernel(holed, "poisson:lambda=1")


def test_poisson_and_unit_cmp_share_pairwise_kernels():
    # two parameterizations of the same law must give the same kernel
    q = make_law("geometric", p=0.5)
    a = pairwise_kernel(law_from_spec("poisson:lambda=2"), q, kmax=60)
    b = pairwise_kernel(make_law("cmp", mu=2.0, nu=1.0), q, kmax=60)
    assert np.allclose(a.values, b.values, atol=1e-12)
    assert np.allclose(a.d1, b.d1, atol=1e-12)


def test_geometric_and_unit_negbinomial_share_pairwise_kernels():
    q = law_from_spec("poisson:lambda=1")
    a = pairwise_kernel(make_law("geometric", p=0.3), q, kmax=60)
    b = pairwise_kernel(make_law("negbinomial", r=1.0, p=0.3), q, kmax=60)
    assert np.allclose(a.values, b.values, atol=1e-12)
    assert np.allclose(a.d1, b.d1, atol=1e-12)


# ---------------------------------------------------------------------------
# pairwise verdicts


def test_check_pairwise_lr_holds_for_small_binomial_under_poisson():
    pk = pairwise_kernel("poisson:lambda=0.6", "binomial:n=10,p=0.05")
    v = check_pairwise(pk, "lr")
    assert v.status == "holds" and v.witness is None
    assert v.claim == "binomial(n=10,p=0.05) <=lr poisson(lambda=0.6)"
    assert v.direction == "up" and v.method == "pairwise-kernel"
    # the worst step sits at k=0: log(lam * (1-p) / (n p))
    assert v.margin == pytest.approx(math.log(1.14), abs=1e-12)
    assert v.note == "endpoint oracle holds"
    assert v.tolerances == {"tol_shape": 1e-9, "grid_points": 11}


def test_check_pairwise_lc_holds_for_binomial_within_poisson():
    pk = pairwise_kernel("binomial:n=10,p=0.05", "poisson:lambda=0.6")
    v = check_pairwise(pk, "lc")
    assert v.status == "holds"
    assert v.claim == "binomial(n=10,p=0.05) <=lc poisson(lambda=0.6)"
    assert v.margin == pytest.approx(math.log(10.0 / 9.0), abs=1e-12)
    assert v.note == "endpoint oracle holds"


def test_check_pairwise_lr_failure_carries_witness():
    pk = pairwise_kernel("poisson:lambda=0.6", "binomial:n=10,p=0.5")
    v = check_pairwise(pk, "lr")
    assert v.status == "fails"
    assert v.witness.kind == "adjacent-pair" and v.witness.x == 0.0
    assert v.margin == pytest.approx(math.log(0.06), abs=1e-12)
    assert v.note == "endpoint oracle fails"


def test_check_pairwise_guards_support_reach():
    pk = pairwise_kernel("binomial:n=10,p=0.05", "poisson:lambda=0.6")
    v = check_pairwise(pk, "lr")  # claims poisson <=lr binomial
    assert v.status == "fails" and v.witness.kind == "support"
    assert v.margin == -math.inf
    assert v.note == "dominated support reaches beyond the dominating support"
    w = check_pairwise(pairwise_kernel("poisson:lambda=0.6", "binomial:n=10,p=0.05"), "lc")
    assert w.status == "fails" and w.witness.kind == "support"


def test_check_pairwise_flags_shape_oracle_disagreement():
    # a tolerance wide enough to swallow real violations must not go unnoticed
    pk = pairwise_kernel("poisson:lambda=0.6", "binomial:n=10,p=0.5")
    v = check_pairwise(pk, "lr", tol_shape=10.0)
    assert v.status == "inconclusive"
    assert v.note.endswith("kernel test and oracle disagree")


def test_check_pairwise_without_cross_check():
    pk = pairwise_kernel("poisson:lambda=0.6", "binomial:n=10,p=0.05")
    v = check_pairwise(pk, "lr", cross_check=False)
    assert v.status == "holds" and v.note == ""


def test_check_pairwise_identical_laws_hold_weakly():
    pk = pairwise_kernel("poisson:lambda=1.5", "poisson:lambda=1.5", kmax=40)
    v = check_pairwise(pk, "lr")
    assert v.status == "holds" and v.margin == 0.0


def test_check_pairwise_rejects_other_orders():
    pk = pairwise_kernel("poisson:lambda=1", "poisson:lambda=2", kmax=20)
    with pytest.raises(ValueError, match="'lr' or 'lc'"):
        check_pairwise(pk, "st")


@settings(max_examples=25, deadline=None)
@given(
    lam1=st.floats(min_value=0.2, max_value=4.0),
    bump=st.floats(min_value=0.1, max_value=3.0),
)
def test_poisson_pair_lr_margin_is_log_rate_ratio(lam1, bump):
    lam2 = lam1 + bump
    pk = pairwise_kernel(f"poisson:lambda={lam2!r}", f"poisson:lambda={lam1!r}", kmax=60)
    v = check_pairwise(pk, "lr")
    assert v.status == "holds"
    assert v.margin == pytest.approx(math.log(lam2 / lam1), abs=1e-12)


# ---------------------------------------------------------------------------
# closed-form thresholds


def test_katz_bin_poi_interior_cells():
    inside = katz_threshold("bin-poi", {"n": 10, "p": 0.05, "lambda": 0.6})
    assert inside == {"lr_condition": True, "st_condition": True}
    outside = katz_threshold("bin-poi", {"n": 10, "p": 0.5, "lambda": 0.6})
    assert outside == {"lr_condition": False, "st_condition": False}


def test_katz_bin_nb_interior_cells():
    inside = katz_threshold("bin-nb", {"n": 5, "p": 0.1, "r": 5.0, "pi": 0.5})
    assert inside == {"lr_condition": True, "st_condition": True}
    outside = katz_threshold("bin-nb", {"n": 5, "p": 0.5, "r": 2.0, "pi": 0.8})
    assert outside == {"lr_condition": False, "st_condition": False}


def test_katz_poi_nb_interior_cells():
    inside = katz_threshold("poi-nb", {"lambda": 0.5, "r": 2.0, "p": 0.6})
    assert inside == {"lr_condition": True, "st_condition": True}
    outside = katz_threshold("poi-nb", {"lambda": 3.0, "r": 2.0, "p": 0.6})
    assert outside == {"lr_condition": False, "st_condition": False}


def test_katz_boundary_cells_count_as_ordered():
    # exact equality on either side of each inequality still reports True
    assert katz_threshold("bin-poi", {"n": 10, "p": 0.5, "lambda": 10.0})["lr_condition"]
    assert katz_threshold("bin-nb", {"n": 10, "p": 0.5, "r": 20.0, "pi": 0.5})["lr_condition"]
    assert katz_threshold("bin-nb", {"n": 10, "p": 0.5, "r": 10.0, "pi": 0.5})["st_condition"]
    assert katz_threshold("poi-nb", {"lambda": 1.0, "r": 2.0, "p": 0.5})["lr_condition"]
    p_eq = math.exp(-1.0)
    assert katz_threshold("poi-nb", {"lambda": 1.0, "r": 1.0, "p": p_eq})["st_condition"]


def test_katz_boundary_cells_agree_with_oracle():
    cells = [
        ("binomial:n=10,p=0.5", "poisson:lambda=10"),
        ("binomial:n=10,p=0.5", "negbinomial:r=20,p=0.5"),
        ("poisson:lambda=1", "negbinomial:r=2,p=0.5"),
    ]
    for low, high in cells:
        dl, dh = law_distribution(law_from_spec(low)), law_distribution(law_from_spec(high))
        assert oracle_lr(dl, dh).holds
    # the st equality cell fails lr but still dominates stochastically
    db = law_distribution(law_from_spec("binomial:n=10,p=0.5"))
    dn = law_distribution(make_law("negbinomial", r=10.0, p=0.5))
    assert oracle_lr(db, dn).status == "fails"
    assert oracle_st(db, dn).holds


def test_katz_conditions_match_oracle_on_grid():
    for p in (0.1, 0.3, 0.5):
        for lam in (0.3, 1.0, 3.0):
            cond = katz_threshold("bin-poi", {"n": 6, "p": p, "lambda": lam})
            db = law_distribution(make_law("binomial", n=6, p=p))
            dp = law_distribution(make_law("poisson", **{"lambda": lam}))
            assert oracle_lr(db, dp).holds == cond["lr_condition"], (p, lam)
            assert oracle_st(db, dp).holds == cond["st_condition"], (p, lam)


@settings(max_examples=20, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=8),
    p=st.floats(min_value=0.05, max_value=0.6),
    lam=st.floats(min_value=0.2, max_value=4.0),
)
def test_bin_poi_condition_matches_oracle_randomized(n, p, lam):
    # keep clear of the boundaries so float noise cannot flip either route
    assume(abs(n * p - (1.0 - p) * lam) > 1e-3)
    assume(abs((1.0 - p) ** n - math.exp(-lam)) > 1e-3)
    cond = katz_threshold("bin-poi", {"n": n, "p": p, "lambda": lam})
    db = law_distribution(make_law("binomial", n=n, p=p))
    dp = law_distribution(make_law("poisson", **{"lambda": lam}))
    assert oracle_lr(db, dp).holds == cond["lr_condition"]
    assert oracle_st(db, dp).holds == cond["st_condition"]


def test_katz_validates_input():
    with pytest.raises(ValueError, match="unknown katz pair"):
        katz_threshold("bin-geo", {})
    with pytest.raises(ValueError, match="needs parameter"):
        katz_threshold("bin-poi", {"n": 5, "p": 0.2})
    with pytest.raises(ValueError, match="unknown parameters"):
        katz_threshold("poi-nb", {"lambda": 1.0, "r": 2.0, "p": 0.5, "q": 0.5})


def test_betabin_hyp_delta_matches_kernel_differences():
    B, W, n, r, s = 20, 20, 5, 1.0, 10.0
    pk = pairwise_kernel(
        make_law("hypergeometric", B=B, W=W, n=n), make_law("betabinomial", n=n, r=r, s=s)
    )
    d = betabin_hyp_delta(B, W, n, r, s, np.arange(n, dtype=float))
    assert np.allclose(pk.d1, d, atol=1e-12)
    assert np.all(np.diff(d) <= 0.0)  # the k = n-1 cell governs


def test_betabin_hyp_condition_certifies_lr():
    assert betabin_hyp_condition(20, 20, 5, 1.0, 10.0)
    bb = law_distribution(make_law("betabinomial", n=5, r=1.0, s=10.0))
    hyp = law_distribution(make_law("hypergeometric", B=20, W=20, n=5))
    assert oracle_lr(bb, hyp).holds
    # raise r until the endpoint slope flips sign: the order fails with it
    assert not betabin_hyp_condition(20, 20, 5, 5.0, 10.0)
    assert betabin_hyp_delta(20, 20, 5, 5.0, 10.0, np.array([4.0]))[0] < 0.0
    bb5 = law_distribution(make_law("betabinomial", n=5, r=5.0, s=10.0))
    assert oracle_lr(bb5, hyp).status == "fails"


def test_betabin_hyp_condition_validates():
    with pytest.raises(ValueError, match="B, W >= n >= 1"):
        betabin_hyp_condition(4, 20, 5, 1.0, 1.0)
    with pytest.raises(ValueError, match="r, s > 0"):
        betabin_hyp_condition(20, 20, 5, 0.0, 1.0)


# ---------------------------------------------------------------------------
# parameter paths


def test_param_path_validates_velocity():
    good = ParamPath(1, lambda t: (2.0 * t,), lambda t: (2.0,), (0.0, 1.0), (lambda th, x: x,))
    good.validate(np.linspace(0.0, 1.0, 5))
    bad = ParamPath(1, lambda t: (t * t,), lambda t: (1.0,), (0.0, 1.0), (lambda th, x: x,))
    with pytest.raises(ValueError, match="mismatches finite differences"):
        bad.validate([1.0])


def test_path_kernel_weights_components_and_skips_idle_ones():
    def boom(th, x):
        raise AssertionError("a zero-velocity component must not be evaluated")

    path = ParamPath(
        2,
        lambda t: (t, 5.0),
        lambda t: (3.0, 0.0),
        (0.0, 1.0),
        (lambda th, x: np.log(x), boom),
    )
    x = np.array([1.0, 2.0, 4.0])
    assert np.allclose(path_kernel(path, 0.5, x), 3.0 * np.log(x))


@pytest.mark.parametrize(
    "order,direction", [("lr", "up"), ("st", "up"), ("hr", "up"), ("lc", "down")]
)
def test_gamma_path_orders(order, direction):
    # shape up, rate down: K_t(x) = log(x) + x for every t
    path, builder = make_path("gamma", r1=1.0, r2=2.0, rho1=2.0, rho2=1.0)
    grid = continuous_grid(0.0, 60.0, n=3000)
    v = check_path_order(path, builder, order, grid=grid)
    assert v.status == "holds"
    assert v.direction == direction
    assert v.margin > -1e-8
    assert v.note == "endpoint oracle holds"
    assert v.tolerances["t_points"] == 33


def test_path_failure_agrees_with_endpoint_oracle():
    path, builder = make_path("gamma", r1=1.0, r2=2.0, rho1=2.0, rho2=1.0)
    grid = continuous_grid(0.0, 60.0, n=3000)
    v = check_path_order(path, builder, "lr", grid=grid, direction="down")
    assert v.status == "fails"
    assert v.witness.kind == "adjacent-pair"
    assert v.note == "endpoint oracle fails"


def test_negbinomial_path_holds_lr():
    path, builder = make_path("negbinomial", r1=2.0, r2=3.0, q1=0.4, q2=0.5)
    v = check_path_order(
        path, builder, "lr", t_grid=np.linspace(0.0, 1.0, 9), grid=discrete_grid(0, 120)
    )
    assert v.status == "holds" and v.margin > 0.0
    assert v.tolerances["t_points"] == 9
    assert v.note == "endpoint oracle holds"


def test_betabinomial_path_holds_lr():
    path, builder = make_path("betabinomial", n=8, r1=1.0, r2=2.0, s1=3.0, s2=2.0)
    v = check_path_order(path, builder, "lr", grid=discrete_grid(0, 8))
    assert v.status == "holds" and v.note == "endpoint oracle holds"


def test_check_path_order_validates_input():
    path, builder = make_path("gamma", r1=1.0, r2=2.0, rho1=2.0, rho2=1.0)
    with pytest.raises(ValueError, match="explicit support grid"):
        check_path_order(path, builder, "lr")
    with pytest.raises(ValueError, match="unknown order"):
        check_path_order(path, builder, "total", grid=continuous_grid(0.0, 10.0, n=10))


def test_make_path_validates_parameters():
    with pytest.raises(ValueError, match="unknown path"):
        make_path("weibull", a=1.0)
    with pytest.raises(ValueError, match="unknown parameters"):
        make_path("gamma", r1=1.0, r2=2.0, rho1=2.0, rho2=1.0, bogus=3.0)
    with pytest.raises(ValueError, match="negbinomial path needs"):
        make_path("negbinomial", r1=1.0, r2=2.0, q1=0.5, q2=1.0)
    with pytest.raises(ValueError, match="betabinomial path needs"):
        make_path("betabinomial", n=8, r1=1.0, r2=2.0, s1=1.0, s2=3.0)
    with pytest.raises(ValueError, match="gamma path needs"):
        make_path("gamma", r1=1.0, r2=2.0, rho1=1.0, rho2=2.0)


def test_geometric_interpolation_has_constant_pairwise_kernel():
    p = law_from_spec("poisson:lambda=2")
    q = make_law("geometric", p=0.5)
    pk = pairwise_kernel(p, q, kmax=40)
    path = geometric_interpolation_path(p, q)
    path.validate([0.25, 0.75])
    k = pk.grid.points
    assert np.allclose(path_kernel(path, 0.2, k), pk.values, atol=0)
    assert np.allclose(path_kernel(path, 0.9, k), pk.values, atol=0)


# ---------------------------------------------------------------------------
# pseudo-sample interpolation


def test_interpolation_above_threshold_certifies_lr():
    rep = betabin_bin_interpolation(5, 1.0, 10.0, 0.5)
    assert rep.condition and rep.threshold == pytest.approx(1.0 / 3.0)
    assert rep.c_values == (0.0, 1.0, 10.0, 100.0)
    for c in rep.c_values:
        assert rep.kernels[c].shape == (6,)
        assert rep.delta_margins[c] == pytest.approx(float(np.diff(rep.kernels[c]).min()))
        assert rep.delta_margins[c] >= 0.0
    # worst step at c=0, k=4: p/(r+k) - (1-p)/(s+n-k-1) = 1/10 - 1/20
    assert rep.delta_margins[0.0] == pytest.approx(0.05, abs=1e-10)


def test_interpolation_below_threshold_reports_negative_differences():
    rep = betabin_bin_interpolation(5, 1.0, 10.0, 0.2)
    assert not rep.condition
    assert rep.threshold == pytest.approx(1.0 / 3.0)
    assert all(m < 0.0 for m in rep.delta_margins.values())
    assert rep.delta_margins[0.0] == pytest.approx(-0.04, abs=1e-10)


def test_interpolation_law_endpoints():
    start = interpolation_law(5, 1.0, 10.0, 0.5, 0.0)
    bb = law_distribution(make_law("betabinomial", n=5, r=1.0, s=10.0))
    assert np.allclose(start.masses, bb.masses, atol=1e-12)
    far = interpolation_law(5, 1.0, 10.0, 0.5, 1e4)
    target = law_distribution(make_law("binomial", n=5, p=0.5))
    assert total_variation(far, target) <= 1e-3


def test_interpolation_validates_input():
    with pytest.raises(ValueError, match="n >= 1"):
        betabin_bin_interpolation(0, 1.0, 1.0, 0.5)
    with pytest.raises(ValueError, match="p in"):
        betabin_bin_interpolation(5, 1.0, 1.0, 1.0)
