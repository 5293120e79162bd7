"""
Finite-n trend of the normalized structure function against the asymptotic bound u.
"""

import logging
from typing import Optional

import pandas as pd

from ..config import DEFAULT_SETTINGS, Settings
from ..structure.conjectures import StructureCache
from ..words import canonical_words
from .entropy import u_bound

logger = logging.getLogger(__name__)

SLACK = 0.25


def empirical_ratio_table(
    n_max: int, alphabet_size: int = 2, settings: Settings = DEFAULT_SETTINGS, cache: Optional[StructureCache] = None
) -> pd.DataFrame:
    """
    max_{|x| = n} h_x(m) / n next to u(m / n), for n = 1..n_max and m = 0..n.

    u is an asymptotic bound, so small n may exceed it; the `within_slack` column marks rows with
    ratio <= u + 0.25.

    Returns:
        pd.DataFrame: columns n, m, a, max_h, ratio, u, excess, within_slack
    """
    cache = StructureCache(settings) if cache is None else cache
    rows = []
    for n in range(1, n_max + 1):
        maxima = [0] * (n + 1)
        for word in canonical_words(n, alphabet_size):
            maxima = [max(current, value) for current, value in zip(maxima, cache.h(word))]
        for m, max_h in enumerate(maxima):
            a = m / n
            u = u_bound(a, alphabet_size)
            ratio = max_h / n
            rows.append(
                {
                    "n": n,
                    "m": m,
                    "a": a,
                    "max_h": max_h,
                    "ratio": ratio,
                    "u": u,
                    "excess": ratio - u,
                    "within_slack": ratio <= u + SLACK,
                }
            )
    table = pd.DataFrame(rows, columns=["n", "m", "a", "max_h", "ratio", "u", "excess", "within_slack"])
    logger.info(f"{int((~table.within_slack).sum())} of {len(table)} rows exceed u + {SLACK}")
    return table
