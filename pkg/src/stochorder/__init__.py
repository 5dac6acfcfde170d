"""Stochastic-order toolkit for one-parameter families.

The package decides the likelihood-ratio, log-concavity, usual, and
hazard-rate orders three ways that deliberately share no code path:

* kernel criteria (`criteria`): shape tests on K_nu(x) = d/dnu log w_nu(x)
  and on the conditional tail means of the score;
* a brute-force oracle (`oracle`): direct comparisons of two mass vectors,
  with no kernel or family information;
* closed forms (`pairwise`): exact threshold inequalities for cross-family
  pairs, parameter paths, and pseudo-sample interpolations.

`catalog` carries the family definitions and grid policy, `compound` the
random-sum layer (posterior-averaged kernels, PF2/TP2 certificates), and
`cli` a deterministic JSON/CSV front end with golden-file table checks.
"""

from .catalog import (
    Distribution,
    DensityFamily,
    FAMILY_NAMES,
    SupportGrid,
    continuous_grid,
    default_grid,
    density,
    discrete_grid,
    family_from_spec,
    hazard,
    make_family,
    mixed_grid,
    parse_spec,
    survival,
)
from .compound import (
    COUNTING_NAMES,
    CompoundModel,
    TABLE2_ROWS,
    check_compound_lr,
    compound_kernel,
    compound_kernel_all,
    compound_pmf,
    compound_score_all,
    convolution_power,
    counting_from_spec,
    delta_summand,
    geometric_summand,
    is_pf2,
    is_tp2,
    make_compound,
    make_counting,
    poisson_binomial_pmf,
    posterior_matrix,
    posterior_mean,
    summand_from_spec,
)
from .criteria import (
    EPS_TAIL,
    NU_POINTS,
    TOL_SHAPE,
    TOL_TAIL,
    TailMeanProfile,
    check_concave_endpoint,
    check_hr,
    check_lc,
    check_lr,
    check_st,
    check_superlevel,
    check_unimodal_endpoint,
    nu_scan,
    tail_mean_profile,
    weighted_log_derivative,
)
from .oracle import (
    LikelihoodRatioSeq,
    likelihood_ratio_seq,
    oracle_for,
    oracle_hr,
    oracle_lc,
    oracle_lr,
    oracle_st,
    total_variation,
)
from .pairwise import (
    LAW_NAMES,
    PATH_NAMES,
    PairwiseKernel,
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
from .verdicts import DIRECTIONS, METHODS, ORDERS, STATUSES, OrderVerdict, Witness

__version__ = "0.1.0"

__all__ = [
    "Distribution",
    "DensityFamily",
    "FAMILY_NAMES",
    "SupportGrid",
    "continuous_grid",
    "default_grid",
    "density",
    "discrete_grid",
    "family_from_spec",
    "hazard",
    "make_family",
    "mixed_grid",
    "parse_spec",
    "survival",
    "COUNTING_NAMES",
    "CompoundModel",
    "TABLE2_ROWS",
    "check_compound_lr",
    "compound_kernel",
    "compound_kernel_all",
    "compound_pmf",
    "compound_score_all",
    "convolution_power",
    "counting_from_spec",
    "delta_summand",
    "geometric_summand",
    "is_pf2",
    "is_tp2",
    "make_compound",
    "make_counting",
    "poisson_binomial_pmf",
    "posterior_matrix",
    "posterior_mean",
    "summand_from_spec",
    "EPS_TAIL",
    "NU_POINTS",
    "TOL_SHAPE",
    "TOL_TAIL",
    "TailMeanProfile",
    "check_concave_endpoint",
    "check_hr",
    "check_lc",
    "check_lr",
    "check_st",
    "check_superlevel",
    "check_unimodal_endpoint",
    "nu_scan",
    "tail_mean_profile",
    "weighted_log_derivative",
    "LikelihoodRatioSeq",
    "likelihood_ratio_seq",
    "oracle_for",
    "oracle_hr",
    "oracle_lc",
    "oracle_lr",
    "oracle_st",
    "total_variation",
    "LAW_NAMES",
    "PATH_NAMES",
    "PairwiseKernel",
    "PairwiseLaw",
    "ParamPath",
    "betabin_bin_interpolation",
    "betabin_hyp_condition",
    "betabin_hyp_delta",
    "check_pairwise",
    "check_path_order",
    "geometric_interpolation_path",
    "interpolation_law",
    "katz_threshold",
    "law_distribution",
    "law_from_spec",
    "make_law",
    "make_path",
    "pairwise_kernel",
    "path_kernel",
    "DIRECTIONS",
    "METHODS",
    "ORDERS",
    "STATUSES",
    "OrderVerdict",
    "Witness",
]
