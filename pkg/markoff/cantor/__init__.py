from .hausdorff import (
    DRatios,
    SurdRatio,
    d_bound,
    d_bound_check,
    d_ratio_checks,
    d_ratios,
    h_partial_products,
)
from .intervals import (
    COVER_COLUMNS,
    MAX_COVER_DEPTH,
    SpectrumInterval,
    affine_map_check,
    cover,
    cover_length,
    cover_rows,
    endpoint_a,
    endpoint_b,
    gap_length,
    gap_sum,
    gap_sum_below,
    gap_sum_checks,
    interval_checks,
    interval_length,
    intervals,
    measure_certificate,
    nesting_checks,
)
from .limits import (
    SPECTRA,
    LimitPoint,
    SpectrumEntry,
    branch_limit_checks,
    convergent_check,
    format_tail_path,
    left_period,
    limit_affine_checks,
    limit_point,
    parse_tail_path,
    period_complement_checks,
    right_period,
    root_spectrum,
    spectrum_pair,
)
