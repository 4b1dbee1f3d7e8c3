from .branches import (
    branch,
    branch_checks,
    branch_path,
    complementary_weights,
    fibonacci,
    growth_checks,
    growth_coefficients,
    growth_sequence,
    lucas,
    pell,
    pell_q,
    pell_r,
    pell_s,
    sequence_table,
)
from .delta import DeltaValue, delta, somewhat_sharp_bounds, third_element
from .node import (
    MarkoffNode,
    check_path,
    children,
    decorations_direct,
    is_left_position,
    is_markoff,
    iter_below,
    iter_level,
    iter_paths,
    iter_tree,
    mirror,
    mutate,
    node_at,
    node_checks,
    node_from_triple,
    parent,
    root,
    tree_dump,
    tree_rows,
)
from .stern_brocot import (
    SBFraction,
    fraction_of_path,
    markoff_of_fraction,
    node_of_fraction,
    path_of_fraction,
    sb_split,
    triple_of_path,
    weight_of_fraction,
)
