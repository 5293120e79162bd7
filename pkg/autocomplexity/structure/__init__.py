"""
Structure functions of words: the exact search over all NFAs, the conjecture harness and the
restricted single-run and multi-run classes.
"""

from .base import GTable, StructureFunction
from .conjectures import ConjectureReport, StructureCache, inequality_suite, verify_conjectures
from .exact import (
    automatic_complexity,
    automatic_complexity_with_witness,
    converse_values,
    deficiency,
    exact_h,
    exact_h_with_witnesses,
    g_of,
    g_table,
    hyde_bound,
    min_count_per_k,
)
from .runs import (
    ModelCount,
    MultiRunModel,
    RunSelection,
    binary_unary_coverage,
    block_limits,
    composition_count,
    max_coverage,
    multi_run_decide,
    multi_run_sf,
    multi_run_sf_with_witnesses,
    selection_count,
    single_run_sf,
    single_run_sf_with_witnesses,
)
