"""
Verification suites run by `autocomplexity verify`.

    gn            G_n(k) tables and the statements about them
    inequalities  basic properties of h over all words up to a length
    oracles       independent recomputations (brute force, alternative algorithms)
    bounds        numeric properties of the entropy bound
"""

import logging
import math
import warnings
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Dict, Optional

import numpy as np
from scipy.special import comb

from ..automata import build_chain_with_loops, build_kayleigh, build_symbol_counter, count_accepted_strings
from ..automata import count_accepting_paths
from ..config import DEFAULT_SETTINGS, Settings
from ..measures.entropy import bound_constants, delta, entropy, phi, psi, u_bound
from ..statistics.longest_run import longest_run_cdf
from ..structure.conjectures import StructureCache, inequality_suite, verify_conjectures
from ..structure.runs import MultiRunModel, RunSelection, selection_count, single_run_sf
from ..words import Valence, all_words, maximal_runs
from .tracking import CheckTracker

logger = logging.getLogger(__name__)

SUITES = ("gn", "inequalities", "oracles", "bounds")


def gn_suite(max_n: int, max_k: int, settings: Settings, tracker: CheckTracker) -> CheckTracker:
    report = verify_conjectures(max_n, max_k, 2, settings, tracker)
    for k, values in report.sequences.items():
        logger.info(f"G_n({k}) for n = {sorted(values)}: {[values[n] for n in sorted(values)]}")
    return tracker


def oracle_suite(max_n: int, settings: Settings, tracker: CheckTracker, cache: Optional[StructureCache] = None):
    """
    Recompute quantities independently over all binary words of length <= max_n.
    """
    cache = StructureCache(settings) if cache is None else cache
    suite = "oracles"
    for n in range(1, max_n + 1):
        for word in all_words(n, 2):
            if n % 2:
                kayleigh = build_kayleigh(word)
                tracker.check(
                    suite,
                    "Kayleigh graph: floor(n/2)+1 states, one path, one string",
                    kayleigh.state_count == n // 2 + 1
                    and count_accepting_paths(kayleigh, word) == 1
                    and count_accepted_strings(kayleigh, n) == 1,
                    f"x={word}",
                )

            runs = sorted(
                (run for symbol in (0, 1) for run in maximal_runs(word, Valence((symbol,)))), key=lambda r: r.start
            )
            for size in range(len(runs) + 1):
                for chosen in combinations(runs, size):
                    if any(right.start <= left.stop for left, right in zip(chosen, chosen[1:])):
                        continue
                    selection = RunSelection(tuple((run, run.valence) for run in chosen))
                    automaton = build_chain_with_loops(word, selection.loops)
                    tracker.check(
                        suite,
                        "selection_count = accepted strings of the chain automaton",
                        selection_count(selection, n, 2) == count_accepted_strings(automaton, n),
                        f"x={word} runs={selection.as_list()}",
                    )

            general = MultiRunModel(word, fast_path=False)
            fast = MultiRunModel(word, fast_path=True)
            tracker.check(
                suite,
                "binary unary-run criterion = general multi-run search",
                all(general.best(q)[0] == fast.best(q)[0] for q in range(1, n + 2)),
                f"x={word}",
            )

            zeros = word.count(0)
            tracker.check(
                suite,
                "symbol counter accepts C(n, z) strings",
                count_accepted_strings(build_symbol_counter(word, 0), n) == int(comb(n, zeros, exact=True)),
                f"x={word}",
            )

            if n <= settings.max_length(2):
                exact = cache.h(word)
                multi, _ = general.structure_function()
                single = single_run_sf(word)
                tracker.check(
                    suite,
                    "exact <= multi-run <= single-run <= n-m+1",
                    all(exact[m] <= multi[m] <= single[m] <= n - m + 1 for m in range(n + 1)),
                    f"x={word} exact={exact} multi={multi} single={single}",
                )
                one_loop, _ = MultiRunModel(word, max_loops=1).structure_function()
                tracker.check(
                    suite, "multi-run with one loop = single-run", one_loop.values == single.values, f"x={word}"
                )

    for b in (2, 3):
        for n in range(0, max_n + 1):
            if b**n > settings.exhaustive_limit:
                warnings.warn(f"longest-run CDF oracle skipped for b = {b}, n >= {n}: b^n exceeds exhaustive_limit")
                break
            for s in range(1, b):
                valence = set(range(s))
                histogram: Dict[int, int] = {}
                for symbols in product(range(b), repeat=n):
                    longest, current = 0, 0
                    for symbol in symbols:
                        current = current + 1 if symbol in valence else 0
                        longest = max(longest, current)
                    histogram[longest] = histogram.get(longest, 0) + 1
                cumulative = 0
                agree = True
                for x in range(n + 1):
                    cumulative += histogram.get(x, 0)
                    agree &= longest_run_cdf(n, x, Fraction(s, b)) == Fraction(cumulative, b**n)
                tracker.check(suite, "longest-run CDF = exhaustive enumeration", agree, f"n={n} b={b} s={s}")
    return tracker


def _sign_changes_at(f: Callable[[float], float], grid: np.ndarray, point: float, gap: float) -> bool:
    return all((f(t) > 0) == (t < point) for t in grid if abs(t - point) > gap)


def bounds_suite(tracker: CheckTracker, b: int = 2) -> CheckTracker:
    """Numeric properties of the bound constants, u, psi and the exponents phi and delta."""
    suite = "bounds"
    k = bound_constants(b)
    if b == 2:
        tracker.check(suite, "c_2 = 2", k.c_b == 2.0, f"c_2={k.c_b}")
        h_prime = math.log2((1 - (0.5 - math.sqrt(3) / 4)) / (0.5 - math.sqrt(3) / 4))
        tracker.check(
            suite,
            "alpha = 3.79994 = H'(1/2 - sqrt(3)/4)",
            abs(k.alpha_b - 3.79994) < 5e-5 and abs(k.alpha_b - h_prime) < 1e-4,
            f"alpha={k.alpha_b}",
        )
    tracker.check(
        suite,
        "u continuous at a1",
        abs(0.5 - (0.5 - k.L_b / 2) - (k.c_b - k.a1) / k.alpha_b) < 1e-9,
        f"a1={k.a1}",
    )
    tracker.check(
        suite, "u continuous at a2", abs((k.c_b - k.a2) / k.alpha_b - (1 - k.a2)) < 1e-9, f"a2={k.a2}"
    )
    for p in np.round(np.arange(1, 50) / 100, 2):
        tracker.check(suite, "u(psi(p)) = p", abs(u_bound(psi(float(p), b), b) - p) < 1e-8, f"p={p}")

    a_grid = np.linspace(0, 1, 201)
    u_values = [u_bound(float(a), b) for a in a_grid]
    tracker.check(suite, "u nonincreasing", all(x >= y - 1e-12 for x, y in zip(u_values, u_values[1:])))
    p_grid = np.linspace(0, 0.5, 201)
    psi_values = [psi(float(p), b) for p in p_grid]
    tracker.check(suite, "psi nonincreasing", all(x >= y - 1e-12 for x, y in zip(psi_values, psi_values[1:])))

    p, T, r = 0.1, 0.6, 0.2
    centre = delta(T / 2, T / 2, r, p, b)
    tracker.check(
        suite,
        "delta(T1, T2, r) is maximized at T1 = T2",
        all(delta(T / 2 + e, T / 2 - e, r, p, b) <= centre + 1e-12 for e in np.linspace(0.01, T / 2 - p, 20)),
    )
    step = 1e-4
    for T in (0.2, 0.4, 0.6):
        r_star = (1 - T) * b / (b + 2)
        slope = (delta(T / 2, T / 2, r_star + step, p, b) - delta(T / 2, T / 2, r_star - step, p, b)) / (2 * step)
        tracker.check(suite, "d delta / d r = 0 at r = (1-T) b/(b+2)", abs(slope) < 1e-6, f"T={T} slope={slope}")

    for p in (0.05, 0.1, 0.15, 0.2):
        T_p = k.T(p)

        def derivative(T: float) -> float:
            return (phi(min(1.0, T + step), p, b) - phi(max(2 * p, T - step), p, b)) / (
                min(1.0, T + step) - max(2 * p, T - step)
            )

        grid = np.linspace(2 * p + 0.01, 1.0, 60)
        tracker.check(
            suite, "d phi / d T > 0 exactly for T < T(p)", _sign_changes_at(derivative, grid, T_p, 0.01), f"p={p}"
        )
    tracker.check(suite, "phi(1, p) = H(1/2 - p)", abs(phi(1.0, 0.2, 2) - entropy(0.3)) < 1e-12)
    return tracker


def run_suite(
    suite: str,
    max_n: int = 6,
    max_k: int = 2,
    settings: Settings = DEFAULT_SETTINGS,
    tracker: Optional[CheckTracker] = None,
) -> CheckTracker:
    """
    Run one suite (or "all") and return the tracker holding its records.

    Args:
        suite: one of "gn", "inequalities", "oracles", "bounds" or "all"
        max_n: largest word length enumerated
        max_k: largest k of the G_n(k) tables
    """
    tracker = CheckTracker() if tracker is None else tracker
    cache = StructureCache(settings)
    selected = SUITES if suite == "all" else (suite,)
    for name in selected:
        logger.info(f"Running suite {name} (max_n={max_n}, max_k={max_k})")
        if name == "gn":
            gn_suite(max_n, max_k, settings, tracker)
        elif name == "inequalities":
            inequality_suite(max_n, 2, settings, tracker, cache)
        elif name == "oracles":
            oracle_suite(max_n, settings, tracker, cache)
        elif name == "bounds":
            bounds_suite(tracker)
        else:
            raise ValueError(f"suite must be one of {SUITES + ('all',)}, got {suite!r}")
    tracker.finalize()
    return tracker
