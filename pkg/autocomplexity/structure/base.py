from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

import pandas as pd

CLASS_TAGS = ("exact", "single_run", "multi_run")


@dataclass(frozen=True)
class StructureFunction:
    """
    Values h_w(0), ..., h_w(n) of a structure function for one automaton class.

    `values[m]` is the least number of states of an automaton in the class that accepts the
    word and at most b^m strings of its length.
    """

    values: Tuple[int, ...]
    class_tag: str = "exact"

    def __post_init__(self) -> None:
        if self.class_tag not in CLASS_TAGS:
            raise ValueError(f"class_tag must be one of {CLASS_TAGS}, got {self.class_tag!r}")
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def __getitem__(self, m: int) -> int:
        return self.values[m]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)

    @property
    def length(self) -> int:
        """Length n of the underlying word."""
        return len(self.values) - 1

    def converse(self, m: int) -> int:
        """g(m) = h(n - m)."""
        return self.values[self.length - m]

    def as_dict(self) -> Dict[str, object]:
        return {"class": self.class_tag, "values": list(self.values)}


@dataclass(frozen=True)
class GTable:
    """
    G_n(m) = max over words x of length n of g_x(m), for m = 0..len(entries) - 1.

    `witnesses[m]` is the first canonical word (in enumeration order) attaining the maximum.
    """

    n: int
    entries: Tuple[int, ...]
    witnesses: Tuple[str, ...]
    alphabet_size: int = 2

    def __getitem__(self, m: int) -> int:
        return self.entries[m]

    def as_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "n": self.n,
                "m": range(len(self.entries)),
                "G": self.entries,
                "witness": self.witnesses,
                "alphabet": self.alphabet_size,
            }
        )
