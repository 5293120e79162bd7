"""
Exact distribution of the longest success run in Bernoulli trials, and the exact probability
that a uniformly random word contains a long run over some valence.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple, Union

from ..exceptions import InvalidProbability

logger = logging.getLogger(__name__)

Probability = Union[Fraction, int, str]


def as_probability(p: Probability) -> Fraction:
    """
    Convert to an exact probability.

    Raises:
        InvalidProbability: if the value is not a number in [0, 1]
    """
    try:
        value = Fraction(p)
    except (TypeError, ValueError) as e:
        raise InvalidProbability(f"{p!r} is not a rational number") from e
    if not 0 <= value <= 1:
        raise InvalidProbability(f"probability must lie in [0, 1], got {value}")
    return value


def longest_run_cdf(n: int, x: int, p: Probability) -> Fraction:
    """
    Pr(R_n <= x): probability that the longest run of successes among n independent trials with
    success probability p has length at most x.

    Conditioning on the first failure, which happens at trial i <= x + 1 whenever n > x,

        Pr(R_n <= x) = sum_{i=1}^{x+1} Pr(R_{n-i} <= x) p^{i-1} (1 - p),

    with Pr(R_j <= x) = 1 for j <= x. For x < 0 the probability is 0, except for n = 0 where the
    (empty) longest run has length 0 and the probability is 1.

    Args:
        n: number of trials, n >= 0
        x: run length bound
        p: success probability, converted with `Fraction`

    Returns:
        Fraction: the exact probability

    Raises:
        InvalidProbability: if p is outside of [0, 1]
    """
    p = as_probability(p)
    if n < 0:
        raise ValueError(f"number of trials must be nonnegative, got {n}")
    if x < 0:
        return Fraction(1) if n == 0 else Fraction(0)
    if n <= x:
        return Fraction(1)
    q = 1 - p
    weights = [p**i * q for i in range(x + 1)]
    cdf = [Fraction(1)] * (x + 1)
    for j in range(x + 1, n + 1):
        cdf.append(sum(cdf[j - i] * weights[i - 1] for i in range(1, x + 2)))
    return cdf[n]


@lru_cache(maxsize=None)
def exact_run_probability(n: int, alphabet_size: int, valence_size: int, run_length: int) -> Fraction:
    """
    Probability that a uniformly random word of length n over b symbols contains a block of
    `run_length` consecutive symbols that uses at most `valence_size` distinct symbols, i.e. a run
    of length >= r over *some* valence of that size.

    The complement is counted with a dynamic program over the last r - 1 symbols read.
    """
    b, s, r = alphabet_size, valence_size, run_length
    if not 1 <= s <= b:
        raise ValueError(f"valence size must lie in 1..{b}, got {s}")
    if r < 1:
        raise ValueError(f"run length must be positive, got {r}")
    if r > n:
        return Fraction(0)
    if s == b:
        return Fraction(1)
    # suffix of the last (at most r - 1) symbols -> number of run-free prefixes ending with it
    states: Dict[Tuple[int, ...], int] = {(): 1}
    for _ in range(n):
        following: Dict[Tuple[int, ...], int] = {}
        for suffix, count in states.items():
            for symbol in range(b):
                window = suffix + (symbol,)
                if len(window) == r:
                    if len(set(window)) <= s:
                        continue
                    window = window[1:]
                following[window] = following.get(window, 0) + count
        states = following
    free = sum(states.values())
    return 1 - Fraction(free, b**n)
