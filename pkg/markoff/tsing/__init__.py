from .singularity import (
    TSingularity,
    branch_le,
    cf_of_pair,
    cf_of_pair_strict,
    hj_label,
    hj_of_tsing,
    ksb_trace,
    le_from_pair,
    le_of_node_path,
    opposite_le_checks,
    opposite_le_sum,
    pair_from_le,
)
from .square import (
    SquareCF,
    append8_suite,
    branch_mutation_seed,
    branch_seed,
    digit_family,
    digit_family_checks,
    digit_structure,
    insert,
    juxtapose,
    le_check,
    le_of_square,
    pattern,
    related_cfs,
    square_cf,
    square_cf_of_node,
    square_cf_tree,
    square_from_digits,
)
from .tcontinuants import (
    IndexFamily,
    TPolyEval,
    eval_ST,
    evenodd_member,
    identity_suite,
    index_set_checks,
    index_sets,
    monomials,
    reverse_pair,
    semicontinuant,
    subset_sum_ST,
    tcontinuant,
)
