from .frobenius import (
    FrobeniusCF,
    complement,
    fibonacci_segments,
    frobenius_cf,
    frobenius_checks,
    frobenius_word,
    kappa,
    reconstruct_triple,
    recursion_check,
    segment_kappas,
    segment_values,
    swap_digits,
)
from .snake import SnakeDiagram, snake_diagram
