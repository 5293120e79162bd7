"""
Search limits, thresholds and tolerances shared by the library and the command line.

Settings are layered: built-in defaults, then an optional `key = value` file, then explicit
overrides (e.g. command-line flags). Dotted keys build nested mappings, so a file line
`exact_max_n.3 = 9` only changes the ternary limit.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from .exceptions import SearchLimitExceeded
from .utils import deep_update, format_fraction

logger = logging.getLogger(__name__)

DEFAULT_EXACT_MAX_N = {2: 10, 3: 8}
FALLBACK_EXACT_MAX_N = 6


@dataclass(frozen=True)
class Settings:
    exact_max_n: Dict[int, int] = field(default_factory=lambda: dict(DEFAULT_EXACT_MAX_N))
    alpha: Fraction = Fraction(1, 20)
    exhaustive_limit: int = 10**6
    entropy_tol: float = 1e-12
    significant_digits: int = 6
    progress: bool = False

    def max_length(self, alphabet_size: int) -> int:
        """Longest word the exact search accepts for an alphabet of `alphabet_size` symbols."""
        return self.exact_max_n.get(alphabet_size, FALLBACK_EXACT_MAX_N)

    def check_exact_limit(self, length: int, alphabet_size: int) -> None:
        """
        Raises:
            SearchLimitExceeded: if a word of `length` symbols is too long for the exact search.
        """
        limit = self.max_length(alphabet_size)
        if length > limit:
            raise SearchLimitExceeded(
                f"exact search is limited to n <= {limit} for b = {alphabet_size} (got n = {length}); "
                f"raise exact_max_n.{alphabet_size} to override"
            )

    def echo(self) -> Dict[str, Any]:
        """JSON friendly view of the settings, used to echo the configuration in CLI output."""
        d = asdict(self)
        d["alpha"] = format_fraction(self.alpha)
        d["exact_max_n"] = {str(k): v for k, v in sorted(self.exact_max_n.items())}
        return d


def _coerce(key: str, value: Any) -> Any:
    if key == "alpha":
        return Fraction(str(value).strip())
    if key in ("exhaustive_limit", "significant_digits"):
        return int(value)
    if key == "entropy_tol":
        return float(value)
    if key == "progress":
        return str(value).strip().lower() in ("1", "true", "yes", "on") if isinstance(value, str) else bool(value)
    return value


def read_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a `key = value` file into a (possibly nested) dictionary.

    Args:
        path: location of the file. Blank lines and lines starting with `#` are ignored.

    Returns:
        dict: raw values keyed as in the file, dotted keys expanded into nested dictionaries
    """
    values: Dict[str, Any] = {}
    with open(path, "r") as fid:
        for lineno, line in enumerate(fid, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected `key = value`, got {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            *parents, leaf = key.split(".")
            nested: Dict[str, Any] = {leaf: value}
            for parent in reversed(parents):
                nested = {parent: nested}
            deep_update(values, nested)
    logger.debug(f"Read configuration {values} from {path}")
    return values


def load_settings(path: Optional[Union[str, Path]] = None, **overrides: Any) -> Settings:
    """
    Build `Settings` from the defaults, an optional configuration file and keyword overrides.

    Args:
        path: optional `key = value` configuration file
        **overrides: values taking precedence over the file, e.g. `alpha=Fraction(1, 100)`.
            `None` values are ignored so that unset command line flags can be passed through.

    Returns:
        Settings: the merged configuration
    """
    merged: Dict[str, Any] = asdict(Settings())
    merged["exact_max_n"] = {str(k): v for k, v in merged["exact_max_n"].items()}
    if path is not None:
        deep_update(merged, read_config_file(path))
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if "exact_max_n" in overrides:
        overrides["exact_max_n"] = {str(k): v for k, v in overrides["exact_max_n"].items()}
    deep_update(merged, overrides)

    unknown = set(merged) - set(asdict(Settings()))
    if unknown:
        raise ValueError(f"Unknown configuration keys: {sorted(unknown)}")

    limits: Mapping[Any, Any] = merged.pop("exact_max_n")
    kwargs = {k: _coerce(k, v) for k, v in merged.items()}
    return Settings(exact_max_n={int(k): int(v) for k, v in limits.items()}, **kwargs)


DEFAULT_SETTINGS = Settings()
