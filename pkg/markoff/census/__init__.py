from .enumerate import (
    MAX_NODES,
    CensusResult,
    enumerate_markoff,
    iter_triples,
    markoff_count,
    uniqueness_check,
)
from .tables import TABLE_COLUMNS, TableRow, singular_rows, table_gen, table_row
from .zagier import (
    REFERENCE_INTERCEPT,
    REFERENCE_SLOPE,
    SWEEP_COLUMNS,
    ZAGIER_C,
    DeviationRow,
    RegressionResult,
    deviations,
    regression,
    rows_from_records,
    zagier_constant,
    zagier_deviation,
    zagier_sweep,
)
