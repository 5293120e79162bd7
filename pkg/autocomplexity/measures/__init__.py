from .empirical import empirical_ratio_table
from .entropy import (
    BoundConstants,
    bound_constants,
    bounds_table,
    delta,
    entropy,
    entropy_gap,
    entropy_inv,
    log2_binomial,
    phi,
    psi,
    scaled_entropy,
    u_bound,
    u_inverse,
)
