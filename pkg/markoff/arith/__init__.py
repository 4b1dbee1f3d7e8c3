from .continuants import (
    canonical_digits,
    cassini2_check,
    cassini_check,
    complement_transform,
    concat_cf,
    continuant,
    continuant_checks,
    convergents,
    eval_hj,
    eval_regular,
    expand_digits,
    factorization_check,
    format_cf,
    hj_digits,
    is_convergent,
    kl,
    parse_cf,
    regular_digits,
    reverse_denominator,
    same_cf,
)
from .periodic import (
    PeriodicCF,
    format_display_period,
    format_periodic,
    parse_periodic,
    periodic_to_quadratic,
    quadratic_to_periodic,
    shift_and_reverse_checks,
)
from .quadratic import QuadraticIrrational, sqrt_of
from .radicals import floor_surd, is_square, squarefree_decompose
from .surd import SurdSum
