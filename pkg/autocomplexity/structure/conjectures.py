"""
Finite evidence for the statements about structure functions: the basic inequalities (which
are theorems, so a failure is a bug) and the conjectures about G_n(k) (where a failure is a
counterexample). Nothing here proves anything; every result only covers the words enumerated.
"""

import logging
import warnings
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import pandas as pd
from tqdm import tqdm

from ..config import DEFAULT_SETTINGS, Settings
from ..verification.tracking import CheckTracker
from ..words import Word, all_words, canonical_form, parse_word
from .base import GTable, StructureFunction
from .exact import automatic_complexity, exact_h, g_table, hyde_bound

logger = logging.getLogger(__name__)

EVIDENCE_NOTE = "finite evidence, not proof"


class StructureCache:
    """
    Exact structure functions and automatic complexities, computed once per word up to a
    relabeling of the alphabet.
    """

    def __init__(self, settings: Settings = DEFAULT_SETTINGS):
        self.settings = settings
        self._h: Dict[Tuple[int, ...], StructureFunction] = {}
        self._an: Dict[Tuple[int, ...], int] = {}

    def h(self, word: Word) -> StructureFunction:
        key = canonical_form(word).symbols
        if key not in self._h:
            self._h[key] = exact_h(word, self.settings)
        return self._h[key]

    def automatic_complexity(self, word: Word) -> int:
        key = canonical_form(word).symbols
        if key not in self._an:
            self._an[key] = automatic_complexity(word, self.settings)
        return self._an[key]


def _extensions(word: Word, max_length: int) -> Iterator[Word]:
    for extra in range(1, max_length + 1):
        for suffix in all_words(extra, word.alphabet_size):
            yield word.concatenate(suffix)


def inequality_suite(
    n_max: int,
    alphabet_size: int = 2,
    settings: Settings = DEFAULT_SETTINGS,
    tracker: Optional[CheckTracker] = None,
    cache: Optional[StructureCache] = None,
) -> CheckTracker:
    """
    Check the basic properties of h exhaustively over all words of length at most `n_max`.

    Checked for every word x of length n:
        - h_x is nonincreasing in m and 1 <= h_x(m) <= n - m + 1
        - h_x(0) = A_N(x) <= floor(n/2) + 1
        - h_x(n - k) >= 2 unless x is unary or k = 0 (binary words)
        - h_x(m) = 1 exactly when the letters of x span at most b^m strings of length n
        - for extensions y of length 1 and 2 (within `n_max`): h_x(m) <= h_xy(m) <= h_x(m) + |y|
        - for one-symbol extensions xb: h_x(n - 1) + 1 >= h_xb(n - 1) and
          g_x(k) <= g_xb(k + 1) <= g_x(k) + 1

    Args:
        n_max: longest word length to enumerate
        alphabet_size: alphabet of the enumerated words
        settings: search limits, see `Settings`
        tracker: tracker to log into; a new one is created if omitted
        cache: structure functions shared with other suites

    Returns:
        CheckTracker: the tracker holding one record per evaluated check
    """
    tracker = CheckTracker() if tracker is None else tracker
    cache = StructureCache(settings) if cache is None else cache
    suite = "inequalities"
    words = [w for n in range(n_max + 1) for w in all_words(n, alphabet_size)]
    for x in tqdm(words, desc="inequalities", disable=not settings.progress, leave=False):
        n = len(x)
        h = cache.h(x)
        tracker.check(suite, "h_x(m) >= h_x(m+1)", all(h[m] >= h[m + 1] for m in range(n)), f"x={x} h={h}")
        tracker.check(
            suite, "1 <= h_x(m) <= n-m+1", all(1 <= h[m] <= n - m + 1 for m in range(n + 1)), f"x={x} h={h}"
        )
        an = cache.automatic_complexity(x)
        tracker.check(suite, "h_x(0) = A_N(x)", h[0] == an, f"x={x} h(0)={h[0]} A_N={an}")
        tracker.check(suite, "A_N(x) <= floor(n/2)+1", an <= hyde_bound(n), f"x={x} A_N={an}")
        if alphabet_size == 2 and not x.is_unary():
            tracker.check(
                suite, "h_x(n-k) >= 2 unless unary or k=0", all(h[n - k] >= 2 for k in range(1, n + 1)), f"x={x} h={h}"
            )
        # a single state loops on every letter of x
        letters = len(x.letters) ** n
        tracker.check(
            suite,
            "h_x(m) = 1 iff |letters(x)|^n <= b^m",
            all((h[m] == 1) == (letters <= alphabet_size**m) for m in range(n + 1)),
            f"x={x} h={h}",
        )

        for xy in _extensions(x, min(2, n_max - n)):
            hxy = cache.h(xy)
            grown = len(xy) - n
            tracker.check(suite, "h_x(m) <= h_xy(m)", all(h[m] <= hxy[m] for m in range(n + 1)), f"x={x} xy={xy}")
            tracker.check(
                suite, "h_xy(m) <= h_x(m) + |y|", all(hxy[m] <= h[m] + grown for m in range(n + 1)), f"x={x} xy={xy}"
            )
            if grown != 1:
                continue
            if n >= 1:
                tracker.check(
                    suite, "h_x(|x|-1) + 1 >= h_xb(|xb|-2)", h[n - 1] + 1 >= hxy[n - 1], f"x={x} xb={xy}"
                )
            # g_x(k) = h_x(n - k) and g_xb(k + 1) = h_xb(n - k)
            tracker.check(
                suite,
                "g_x(k) <= g_xb(k+1) <= g_x(k)+1",
                all(h[n - k] <= hxy[n - k] <= h[n - k] + 1 for k in range(n + 1)),
                f"x={x} xb={xy}",
            )

    if n_max >= 5 and alphabet_size == 2:
        x, xb = parse_word("0100", 2), parse_word("01000", 2)
        hx, hxb = cache.h(x), cache.h(xb)
        tracker.check(
            suite,
            "per-word g is not monotone in n: g_0100(3) > g_01000(3)",
            hx.converse(3) == 3 and hxb.converse(3) == 2,
            f"h_0100={hx} h_01000={hxb}",
        )
    logger.info(f"Inequality suite over n <= {n_max}: passed={tracker.passed}")
    return tracker


@dataclass
class ConjectureReport:
    """
    G_n(k) sequences and what they say about the conjectures, for n = 1..n_max and k = 0..k_max.

    Attributes:
        sequences: k -> {n: G_n(k)}
        witnesses: k -> {n: first canonical word attaining G_n(k)}
        monotone_counterexamples: pairs with G_n(k) > G_{n+1}(k), which would refute the
            conjectured monotonicity in n
        shift_violations: pairs with G_n(k) > G_{n+1}(k + 1); this is a theorem, so any entry is a bug
        first_maximal: k -> least n with G_n(k) = k + 1, or None if not reached within n_max
    """

    alphabet_size: int
    n_max: int
    k_max: int
    sequences: Dict[int, Dict[int, int]] = field(default_factory=dict)
    witnesses: Dict[int, Dict[int, str]] = field(default_factory=dict)
    monotone_counterexamples: List[Dict[str, object]] = field(default_factory=list)
    shift_violations: List[Dict[str, object]] = field(default_factory=list)
    first_maximal: Dict[int, Optional[int]] = field(default_factory=dict)
    note: str = EVIDENCE_NOTE

    def reaches_maximum(self, k: int) -> bool:
        return self.first_maximal.get(k) is not None

    def as_frame(self) -> pd.DataFrame:
        rows = [
            {"k": k, "n": n, "G": value, "witness": self.witnesses[k][n], "maximal": value == k + 1}
            for k, values in sorted(self.sequences.items())
            for n, value in sorted(values.items())
        ]
        return pd.DataFrame(rows, columns=["k", "n", "G", "witness", "maximal"])

    def as_dict(self) -> Dict[str, object]:
        return {
            "alphabet": self.alphabet_size,
            "n_max": self.n_max,
            "k_max": self.k_max,
            "note": self.note,
            "sequences": {
                str(k): {str(n): values[n] for n in sorted(values)} for k, values in sorted(self.sequences.items())
            },
            "G_n(k) <= G_n+1(k)": {
                "held": not self.monotone_counterexamples,
                "counterexamples": self.monotone_counterexamples,
            },
            "G_n(k) <= G_n+1(k+1)": {"held": not self.shift_violations, "violations": self.shift_violations},
            "G_n(k) reaches k+1": {str(k): n for k, n in sorted(self.first_maximal.items())},
        }


def verify_conjectures(
    n_max: int,
    k_max: int,
    alphabet_size: Optional[int] = None,
    settings: Settings = DEFAULT_SETTINGS,
    tracker: Optional[CheckTracker] = None,
) -> ConjectureReport:
    """
    Tabulate G_n(k) for n = 1..n_max and k = 0..k_max and collect evidence on
    lim_n G_n(k) = k + 1 and on G_n(k) <= G_{n+1}(k).

    Args:
        n_max: largest word length
        k_max: largest k reported
        alphabet_size: alphabet of the supremum defining G_n. Binary is assumed (with a warning)
            when omitted.
        settings: search limits, see `Settings`
        tracker: optional tracker receiving one record per compared pair

    Returns:
        ConjectureReport: the sequences and the outcome of every comparison
    """
    if alphabet_size is None:
        warnings.warn("The alphabet of the supremum in G_n is not fixed; assuming a binary alphabet")
        alphabet_size = 2
    report = ConjectureReport(alphabet_size, n_max, k_max)
    tables: Dict[int, GTable] = {
        n: g_table(n, k_max + 1, alphabet_size, settings) for n in range(1, n_max + 1)
    }

    for k in range(k_max + 1):
        report.sequences[k] = {n: table[k] for n, table in tables.items() if k < len(table.entries)}
        report.witnesses[k] = {n: tables[n].witnesses[k] for n in report.sequences[k]}
        reached = [n for n, value in sorted(report.sequences[k].items()) if value == k + 1]
        report.first_maximal[k] = reached[0] if reached else None

    for n in range(1, n_max):
        current, following = tables[n], tables[n + 1]
        for k in range(min(k_max, n) + 1):
            pair = {"n": n, "k": k, "G_n": current[k], "witness": current.witnesses[k]}
            if current[k] > following[k]:
                report.monotone_counterexamples.append({**pair, "G_n+1": following[k]})
            if tracker is not None:
                tracker.check("gn", "G_n(k) <= G_n+1(k)", current[k] <= following[k], str(pair), proven=False)
            if k + 1 < len(following.entries):
                held = current[k] <= following[k + 1]
                if not held:
                    report.shift_violations.append({**pair, "G_n+1(k+1)": following[k + 1]})
                if tracker is not None:
                    tracker.check("gn", "G_n(k) <= G_n+1(k+1)", held, str(pair))

    if tracker is not None:
        for n, table in tables.items():
            tracker.check("gn", "G_n(0) = 1", table[0] == 1, f"n={n} G={table.entries}")
            tracker.check(
                "gn", "G_n(k) <= k+1", all(g <= k + 1 for k, g in enumerate(table.entries)), f"n={n} G={table.entries}"
            )
    logger.info(f"G_n(k) for n <= {n_max}, k <= {k_max}: {report.sequences}")
    return report
