"""
Entropy function machinery and the asymptotic upper bound u(a) on the normalized structure
function, with its inverse psi and the auxiliary exponents phi and delta.

All values are 64-bit floats; these are asymptotic curves, not exact counts.
"""

import logging
import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Dict, Union

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike
from scipy.optimize import bisect
from scipy.special import comb

from ..exceptions import DomainError, InvalidAlphabet

logger = logging.getLogger(__name__)

ENTROPY_TOL = 1e-12


def entropy(p: ArrayLike) -> Union[float, np.ndarray]:
    """
    Binary entropy H(p) = -p log2 p - (1 - p) log2 (1 - p), with 0 log 0 = 0.

    Args:
        p: probability or array of probabilities in [0, 1]

    Returns:
        float for scalar input, otherwise an array of the same shape

    Raises:
        DomainError: if any value is outside of [0, 1]
    """
    p = np.asarray(p, dtype=float)
    if np.any((p < 0) | (p > 1)) or np.any(np.isnan(p)):
        raise DomainError("entropy is only defined on [0, 1]")
    with np.errstate(divide="ignore", invalid="ignore"):
        h = np.where(p > 0, -p * np.log2(p), 0.0) + np.where(p < 1, -(1 - p) * np.log2(1 - p), 0.0)
    return float(h) if h.ndim == 0 else h


def scaled_entropy(p: ArrayLike, b: int = 2) -> Union[float, np.ndarray]:
    """H(p) / log2 b, the entropy in base-b units."""
    return entropy(p) / math.log2(b)


def entropy_inv(y: float, tol: float = ENTROPY_TOL) -> float:
    """
    The unique x in [0, 1/2] with H(x) = y, found by bisection to absolute tolerance `tol`.

    Raises:
        DomainError: if y is outside of [0, 1]
    """
    if not 0 <= y <= 1:
        raise DomainError(f"the inverse entropy is only defined on [0, 1], got {y}")
    if y == 0:
        return 0.0
    if y == 1:
        return 0.5
    return float(bisect(lambda x: entropy(x) - y, 0.0, 0.5, xtol=tol))


def _scaled_entropy_inv(a: float, b: int, tol: float = ENTROPY_TOL) -> float:
    return entropy_inv(min(1.0, a * math.log2(b)), tol)


def log2_binomial(n: int, k: int) -> float:
    """log2 C(n, k) from the exact integer binomial."""
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got n = {n}, k = {k}")
    return math.log2(int(comb(n, k, exact=True)))


def entropy_gap(n: int, k: int) -> float:
    """|log2 C(n, k) - n H(k/n)|, which grows like O(log n)."""
    if n == 0:
        return 0.0
    return abs(log2_binomial(n, k) - n * entropy(k / n))


@dataclass(frozen=True)
class BoundConstants:
    """
    Constants of the bound for alphabet size b.

    Attributes:
        c_b: 1 + Ĥ(b/(b+2)) + (1 - 1/log2 b) b/(b+2), equal to 2 for b = 2
        L_b: sqrt(1 - (4/(b(b+2)))^2), so that T(p) = 2p/L_b
        alpha_b: slope of the linear piece, (2/L_b)(c_b - Ĥ(1/2 - L_b/2))
        a1: Ĥ(1/2 - L_b/2), where u switches from the entropy piece to the linear piece
        a2: (alpha_b - c_b)/(alpha_b - 1), where u switches to the trivial bound 1 - a
    """

    b: int
    c_b: float
    L_b: float
    alpha_b: float
    a1: float
    a2: float

    @property
    def slope(self) -> float:
        """T(p) = slope * p"""
        return 2 / self.L_b

    def T(self, p: float) -> float:
        return self.slope * p

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)


@lru_cache(maxsize=None)
def bound_constants(b: int = 2) -> BoundConstants:
    """
    Raises:
        InvalidAlphabet: if b < 2
    """
    if b < 2:
        raise InvalidAlphabet(f"the bound needs an alphabet of at least 2 symbols, got {b}")
    ratio = b / (b + 2)
    c_b = 1 + scaled_entropy(ratio, b) + (1 - 1 / math.log2(b)) * ratio
    L_b = math.sqrt(1 - (4 / (b * (b + 2))) ** 2)
    a1 = scaled_entropy(0.5 - L_b / 2, b)
    alpha_b = (2 / L_b) * (c_b - a1)
    a2 = (alpha_b - c_b) / (alpha_b - 1)
    return BoundConstants(b, c_b, L_b, alpha_b, a1, a2)


def u_bound(a: float, b: int = 2, tol: float = ENTROPY_TOL) -> float:
    """
    Upper bound u(a) on limsup_n max_{|x|=n} h_x([a n]) / n.

        u(a) = 1/2 - Ĥ^{-1}(a)       for a <= a1
             = (c_b - a) / alpha_b    for a1 <= a <= a2
             = 1 - a                  for a >= a2

    Raises:
        DomainError: if a is outside of [0, 1]
    """
    if not 0 <= a <= 1:
        raise DomainError(f"u is defined on [0, 1], got {a}")
    k = bound_constants(b)
    if a <= k.a1:
        return 0.5 - _scaled_entropy_inv(a, b, tol)
    if a <= k.a2:
        return (k.c_b - a) / k.alpha_b
    return 1 - a


def phi(T: float, p: float, b: int = 2) -> float:
    """
    phi(T, p) = T Ĥ(1/2 - p/T) + (1 - T) c_b, the path-count exponent once the loop share is optimal.

    Raises:
        DomainError: unless 0 <= p <= 1/2 and 2p <= T <= 1
    """
    if not 0 <= p <= 0.5 or not 2 * p <= T <= 1 or T <= 0:
        raise DomainError(f"phi needs 0 <= p <= 1/2 and 2p <= T <= 1, got T = {T}, p = {p}")
    return T * scaled_entropy(0.5 - p / T, b) + (1 - T) * bound_constants(b).c_b


def delta(T1: float, T2: float, r: float, p: float, b: int = 2) -> float:
    """
    Path-count exponent with T1, T2 the shares of time before the first and after the last visit
    of the loop state and r the share of self-loops:

        sum_i T_i Ĥ(1/2 - p/(2 T_i)) + (1 - T1 - T2) Ĥ(r/(1 - T1 - T2)) + 1 - T1 - T2 + (1 - 1/log2 b) r

    Raises:
        DomainError: unless p <= T_i, T1 + T2 <= 1 and 0 <= r <= 1 - T1 - T2
    """
    rest = 1 - T1 - T2
    if not 0 <= p <= 0.5 or min(T1, T2) < p or T1 <= 0 or T2 <= 0 or rest < 0 or not 0 <= r <= rest:
        raise DomainError(f"delta is undefined at T1 = {T1}, T2 = {T2}, r = {r}, p = {p}")
    value = sum(T * scaled_entropy(0.5 - p / (2 * T), b) for T in (T1, T2))
    if rest > 0:
        value += rest * scaled_entropy(r / rest, b)
    return value + rest + (1 - 1 / math.log2(b)) * r


def psi(p: float, b: int = 2, trivial_cap: bool = True) -> float:
    """
    psi(p) = phi(min(1, T(p)), p): Ĥ(1/2 - p) for p >= L_b/2 and c_b - alpha_b p below.

    Args:
        p: state share, 0 <= p <= 1/2
        b: alphabet size
        trivial_cap: also apply the trivial bound 1 - p, which makes psi the inverse of u. Without
            it the linear piece exceeds 1 for small p.

    Raises:
        DomainError: if p is outside of [0, 1/2]
    """
    if not 0 <= p <= 0.5:
        raise DomainError(f"psi is defined on [0, 1/2], got {p}")
    k = bound_constants(b)
    value = scaled_entropy(0.5 - p, b) if p >= k.L_b / 2 else k.c_b - k.alpha_b * p
    return min(value, 1 - p) if trivial_cap else value


def u_inverse(p: float, b: int = 2) -> float:
    """The inverse of u: min(psi(p), 1 - p)."""
    return psi(p, b, trivial_cap=True)


def bounds_table(grid: int = 101, b: int = 2) -> pd.DataFrame:
    """
    Sample u on [0, 1] and psi on [0, 1/2] at `grid` evenly spaced points each.

    Returns:
        pd.DataFrame: columns a, u, p, psi
    """
    if grid < 2:
        raise ValueError(f"grid needs at least 2 points, got {grid}")
    a = np.linspace(0, 1, grid)
    p = np.linspace(0, 0.5, grid)
    return pd.DataFrame(
        {
            "a": a,
            "u": [u_bound(float(x), b) for x in a],
            "p": p,
            "psi": [psi(float(x), b) for x in p],
        }
    )
