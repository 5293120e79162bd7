"""
Exact p-values for run events and model selection by the smallest p-value.

The null hypothesis is a uniformly random word over b symbols. A run of length r over a valence
of s symbols is scored by the probability of a run at least that long over that fixed valence,
multiplied by the number C(b, s) of valences of the same size that could have been reported
instead (Bonferroni, capped at 1).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from scipy.special import comb

from ..config import DEFAULT_SETTINGS, Settings
from ..exceptions import InvalidAlphabet, InvalidProbability
from ..utils import format_decimal, format_fraction
from ..words import Valence, Word, all_valences, maximal_runs
from .longest_run import Probability, as_probability, exact_run_probability, longest_run_cdf

logger = logging.getLogger(__name__)

RESTRICTED_MODES = ("binary-any", "binary-fixed", "ary-minus-one")


def _binomial(n: int, k: int) -> int:
    return int(comb(n, k, exact=True))


@dataclass(frozen=True)
class PValueReport:
    """
    A run event (a run of `run_length` symbols from `valence` in a word of length n over b symbols)
    with its exact and adjusted p-values and the verdict at `threshold`.

    `exact_p` is the exact probability of such a run over any valence of the same size, filled in
    when b^n is small enough to be enumerated.
    """

    n: int
    b: int
    valence: Valence
    run_length: int
    raw_p: Fraction
    adjusted_p: Fraction
    adjustment: int
    threshold: Fraction
    exact_p: Optional[Fraction] = None
    start: Optional[int] = None

    @property
    def verdict(self) -> str:
        return "reject" if self.adjusted_p < self.threshold else "accept"

    @property
    def model_exponent(self) -> int:
        """Least m with s^r <= b^m: the m at which this run's single-loop model first applies."""
        m = 0
        while self.valence.size**self.run_length > self.b**m:
            m += 1
        return m

    @property
    def model_states(self) -> int:
        return self.n - self.run_length + 1

    def as_dict(self, digits: int = 6) -> Dict[str, object]:
        d: Dict[str, object] = {
            "n": self.n,
            "b": self.b,
            "valence": list(self.valence.members),
            "run_length": self.run_length,
            "start": self.start,
            "raw_p": format_fraction(self.raw_p),
            "adjusted_p": format_fraction(self.adjusted_p),
            "adjustment": self.adjustment,
            "decimal": format_decimal(self.adjusted_p, digits),
            "verdict": self.verdict,
            "threshold": format_fraction(self.threshold),
            "exact_p": None if self.exact_p is None else format_fraction(self.exact_p),
        }
        return d


def p_unary_adjacent(n: int, b: int) -> Fraction:
    """
    Probability that a uniform word of length n >= 1 has two equal adjacent symbols: 1 - (1 - 1/b)^(n-1).
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if b < 1:
        raise InvalidAlphabet(f"alphabet size must be at least 1, got {b}")
    return 1 - (1 - Fraction(1, b)) ** (n - 1)


def window_count(n: int, r: int) -> int:
    """Number of positions a window of r symbols can take in a word of length n."""
    return max(0, n - r + 1)


def run_union_estimate(n: int, b: int, s: int, r: int, coefficient: Optional[int] = None) -> Fraction:
    """
    Union-bound style estimate coefficient * s^r * b^(n-r) / b^n = coefficient * (s/b)^r for a run of
    length r over some valence of size s.

    Args:
        coefficient: multiplier in front of the single-window probability. Defaults to the number
            of valences C(b, s); `window_count(n, r)` gives the count of window positions instead.
    """
    if not 1 <= s <= b:
        raise ValueError(f"valence size must lie in 1..{b}, got {s}")
    if not 1 <= r <= n:
        raise ValueError(f"run length must lie in 1..{n}, got {r}")
    coefficient = _binomial(b, s) if coefficient is None else coefficient
    return coefficient * Fraction(s, b) ** r


def run_event_pvalue(
    n: int,
    b: int,
    valence: Valence,
    r: int,
    threshold: Optional[Probability] = None,
    settings: Settings = DEFAULT_SETTINGS,
    start: Optional[int] = None,
) -> PValueReport:
    """
    Score a run of length r over `valence` in a uniform word of length n over b symbols.

    raw_p = Pr(longest run over the valence >= r) = 1 - Pr(R_n <= r - 1) with success
    probability s/b, and adjusted_p = min(1, C(b, s) * raw_p).

    Args:
        n: word length
        b: alphabet size
        valence: the valence of the run
        r: run length, r >= 1
        threshold: significance level, defaults to `settings.alpha`
        settings: provides the default threshold and the limit on b^n for `exact_p`
        start: position of the run, only reported

    Returns:
        PValueReport: the scored event
    """
    if r < 1:
        raise ValueError(f"run length must be positive, got {r}")
    if not valence.fits(b):
        raise InvalidAlphabet(f"valence {valence} does not fit into an alphabet of size {b}")
    threshold = settings.alpha if threshold is None else as_probability(threshold)
    s = valence.size
    raw = 1 - longest_run_cdf(n, r - 1, Fraction(s, b))
    adjustment = _binomial(b, s)
    adjusted = min(Fraction(1), adjustment * raw)
    exact = exact_run_probability(n, b, s, r) if b**n <= settings.exhaustive_limit else None
    return PValueReport(n, b, valence, r, raw, adjusted, adjustment, threshold, exact, start)


def prob_restricted_alphabet(n: int, a: int, mode: str = "binary-any") -> Fraction:
    """
    Probability that a uniform word of length n over a symbols avoids part of the alphabet.

    Modes:
        binary-any: uses at most 2 symbols, (C(a, 2) 2^n - a(a - 2)) / a^n
        binary-fixed: uses only symbols from one given pair, (2/a)^n
        ary-minus-one: misses at least one symbol, by inclusion-exclusion
            a^-n sum_{k=1}^{a-1} (-1)^(k+1) C(a, k) (a - k)^n

    Raises:
        InvalidAlphabet: if a < 2
    """
    if a < 2:
        raise InvalidAlphabet(f"the alphabet needs at least 2 symbols, got {a}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if mode == "binary-any":
        return Fraction(_binomial(a, 2) * 2**n - a * (a - 2), a**n)
    if mode == "binary-fixed":
        return Fraction(2, a) ** n
    if mode == "ary-minus-one":
        missing = sum((-1) ** (k + 1) * _binomial(a, k) * (a - k) ** n for k in range(1, a))
        return Fraction(missing, a**n)
    raise ValueError(f"mode must be one of {RESTRICTED_MODES}, got {mode!r}")


def min_threshold_n(a: int, alpha: Probability) -> int:
    """
    Least n for which a uniform word over a symbols uses at most two of them with probability
    below alpha.

    Raises:
        InvalidAlphabet: if a < 3, where the probability never drops below 1
        InvalidProbability: unless 0 < alpha < 1
    """
    alpha = as_probability(alpha)
    if not 0 < alpha < 1:
        raise InvalidProbability(f"alpha must lie strictly between 0 and 1, got {alpha}")
    if a < 3:
        raise InvalidAlphabet(f"words over {a} symbols always use at most two of them")
    n = 1
    while prob_restricted_alphabet(n, a, "binary-any") >= alpha:
        n += 1
    return n


@dataclass
class ModelReport:
    """
    Outcome of model selection for one word: every candidate run event, the one with the smallest
    adjusted p-value, and whether it beats the null model of an arbitrary b-ary word.
    """

    word: Word
    alpha: Fraction
    candidates: List[PValueReport] = field(default_factory=list)
    best: Optional[PValueReport] = None

    @property
    def verdict(self) -> str:
        return "reject" if self.best is not None and self.best.verdict == "reject" else "accept"

    @property
    def model(self) -> Dict[str, object]:
        if self.verdict == "accept" or self.best is None:
            return {"kind": "null", "description": f"arbitrary {self.word.alphabet_size}-ary string"}
        return {
            "kind": "single_run",
            "states": self.best.model_states,
            "m": self.best.model_exponent,
            "run": {
                "start": self.best.start,
                "length": self.best.run_length,
                "valence": list(self.best.valence.members),
            },
        }

    def as_dict(self, digits: int = 6) -> Dict[str, object]:
        return {
            "word": str(self.word),
            "alphabet": self.word.alphabet_size,
            "alpha": format_fraction(self.alpha),
            "best": None if self.best is None else self.best.as_dict(digits),
            "verdict": self.verdict,
            "model": self.model,
            "candidates": [c.as_dict(digits) for c in self.candidates],
        }


def _ranking(report: PValueReport):
    return (report.adjusted_p, -report.run_length, report.valence.size, report.start, report.valence.members)


def best_model(word: Word, alpha: Optional[Probability] = None, settings: Settings = DEFAULT_SETTINGS) -> ModelReport:
    """
    Select the single-run model with the smallest adjusted p-value.

    Every maximal run over every proper valence is a candidate. Ties are broken by the longer run,
    then the smaller valence, then the earlier position. If even the best candidate has an adjusted
    p-value of at least alpha, the null model (an arbitrary b-ary string) is kept.

    Args:
        word: the observed word
        alpha: significance level, defaults to `settings.alpha`
        settings: see `Settings`

    Returns:
        ModelReport: candidates in ranking order and the selected model
    """
    alpha = settings.alpha if alpha is None else as_probability(alpha)
    n, b = len(word), word.alphabet_size
    candidates = []
    for s in range(1, b):
        for valence in all_valences(b, s):
            for run in maximal_runs(word, valence):
                candidates.append(run_event_pvalue(n, b, valence, run.length, alpha, settings, start=run.start))
    candidates.sort(key=_ranking)
    report = ModelReport(word, alpha, candidates, candidates[0] if candidates else None)
    logger.info(f"Best model for {word}: {report.model} (verdict {report.verdict})")
    return report
