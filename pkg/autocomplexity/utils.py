import collections.abc
from fractions import Fraction
from typing import TypeVar

T = TypeVar("T", bound=collections.abc.Mapping)


def deep_update(d: T, u: collections.abc.Mapping) -> T:
    """
    Recursively update a dictionary with the values from another dictionary
    Args:
        d: dictionary to be updated
        u: dictionary that is used to update `d`

    Returns:
        updated dictionary `d`
    """
    for k, v in u.items():
        if isinstance(v, collections.abc.Mapping):
            d[k] = deep_update(d.get(k, {}), v)
        else:
            d[k] = v
    return d


def parse_fraction(text: str) -> Fraction:
    """
    Parse `num/den`, an integer or a decimal literal into an exact Fraction.
    """
    return Fraction(text.strip())


def format_fraction(value: Fraction) -> str:
    """Render a Fraction as `num/den` (always with a denominator)."""
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, digits: int = 6) -> str:
    """
    Render an exact rational with a fixed number of significant digits.

    Args:
        value: number to render
        digits: number of significant digits

    Returns:
        str: decimal rendering, e.g. `0.974` style output with `digits` significant digits
    """
    return f"{float(value):.{digits}g}"
