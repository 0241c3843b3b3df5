"""Weighted cumulative residual extropy and weighted negative cumulative extropy."""

from ._extropy import (  # noqa: F401
    BoundReport,
    Distribution,
    DistortionFunction,
    DomainError,
    EstimateResult,
    InsufficientData,
    MeasureValue,
    Origin,
    WeightSpec,
    bootstrap_ci,
    cumulative_past_extropy,
    cumulative_residual_extropy,
    cwncj_expectation_gap,
    extropy,
    gwcrj,
    gwncj,
    ncj_empirical,
    ncre_empirical,
    run_bounds,
    system_bounds_distortion,
    system_wncj,
    t1cm,
    t1m,
    t2cm,
    t2m,
    wncj_empirical_step,
    wncj_empirical_vasicek,
    wncj_max_order_stat,
)

__version__ = "0.1.0"
