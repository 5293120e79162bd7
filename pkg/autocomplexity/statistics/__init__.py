"""
Exact rational probabilities for run events under the uniform null model.
"""

from .longest_run import as_probability, exact_run_probability, longest_run_cdf
from .pvalues import (
    ModelReport,
    PValueReport,
    best_model,
    min_threshold_n,
    p_unary_adjacent,
    prob_restricted_alphabet,
    run_event_pvalue,
    run_union_estimate,
    window_count,
)
