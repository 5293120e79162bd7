"""
Words, valences and maximal runs: the vocabulary shared by every other module.

A word is a finite sequence over the alphabet {0, ..., b-1}. A valence is a nonempty
sub-alphabet, and a run over a valence is a contiguous block of the word whose symbols all
belong to that valence.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .exceptions import InvalidAlphabet, InvalidArity, InvalidSymbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Word:
    symbols: Tuple[int, ...]
    alphabet_size: int

    def __post_init__(self) -> None:
        if self.alphabet_size < 1:
            raise InvalidAlphabet(f"alphabet size must be at least 1, got {self.alphabet_size}")
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        for position, symbol in enumerate(self.symbols):
            if not 0 <= symbol < self.alphabet_size:
                raise InvalidSymbol(
                    f"symbol {symbol} at position {position} is outside of the alphabet of size {self.alphabet_size}"
                )

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index: Union[int, slice]) -> Union[int, Word]:
        if isinstance(index, slice):
            return Word(self.symbols[index], self.alphabet_size)
        return self.symbols[index]

    def __str__(self) -> str:
        if self.alphabet_size <= 10:
            return "".join(str(s) for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)

    @property
    def letters(self) -> FrozenSet[int]:
        """Set of symbols that occur in the word."""
        return frozenset(self.symbols)

    def is_unary(self) -> bool:
        """True if at most one distinct symbol occurs (the empty word counts as unary)."""
        return len(self.letters) <= 1

    def count(self, symbol: int) -> int:
        return self.symbols.count(symbol)

    def concatenate(self, suffix: Union[Word, Iterable[int]]) -> Word:
        """Return the word `self` followed by `suffix` over the same alphabet."""
        return Word(self.symbols + tuple(suffix), self.alphabet_size)

    def relabel(self, permutation: Sequence[int]) -> Word:
        """
        Apply a permutation of the alphabet, symbol `s` becoming `permutation[s]`.
        """
        if sorted(permutation) != list(range(self.alphabet_size)):
            raise InvalidAlphabet(f"{list(permutation)} is not a permutation of the alphabet")
        return Word(tuple(permutation[s] for s in self.symbols), self.alphabet_size)


@dataclass(frozen=True, order=True)
class Valence:
    members: Tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted(set(self.members)))
        if not members:
            raise InvalidArity("a valence must contain at least one symbol")
        object.__setattr__(self, "members", members)

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.members) + "}"

    def fits(self, alphabet_size: int) -> bool:
        return all(0 <= s < alphabet_size for s in self.members)


@dataclass(frozen=True)
class Run:
    start: int
    length: int
    valence: Valence

    @property
    def stop(self) -> int:
        """One past the last position of the run."""
        return self.start + self.length

    def as_dict(self) -> dict:
        return {"start": self.start, "length": self.length, "valence": list(self.valence.members)}


def parse_word(text: str, alphabet_size: Optional[int] = None) -> Word:
    """
    Parse a word written as a digit string (`0100`) or as comma separated integers (`0,11,3`).

    Args:
        text: textual representation of the word. The empty string is the empty word.
        alphabet_size: size b of the alphabet. If omitted, b is one more than the largest symbol
            (and 1 for the empty word).

    Returns:
        Word: the parsed word

    Raises:
        InvalidAlphabet: if `alphabet_size` is smaller than 1
        InvalidSymbol: if a character is not a digit or a symbol is not smaller than b
    """
    if alphabet_size is not None and alphabet_size < 1:
        raise InvalidAlphabet(f"alphabet size must be at least 1, got {alphabet_size}")
    text = text.strip()
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    else:
        tokens = list(text)
    symbols = []
    for token in tokens:
        if not token.isdigit():
            raise InvalidSymbol(f"{token!r} is not a nonnegative integer symbol")
        symbols.append(int(token))
    if alphabet_size is None:
        alphabet_size = max(symbols) + 1 if symbols else 1
    return Word(tuple(symbols), alphabet_size)


def all_valences(alphabet_size: int, size: int) -> List[Valence]:
    """
    All sub-alphabets of `size` symbols, in lexicographic order.

    Raises:
        InvalidArity: if `size` is not in 1..alphabet_size
    """
    if not 1 <= size <= alphabet_size:
        raise InvalidArity(f"valence size must lie in 1..{alphabet_size}, got {size}")
    return [Valence(c) for c in combinations(range(alphabet_size), size)]


def every_valence(alphabet_size: int) -> List[Valence]:
    """All 2^b - 1 valences, ordered by size and then lexicographically."""
    return [v for s in range(1, alphabet_size + 1) for v in all_valences(alphabet_size, s)]


def maximal_runs(word: Word, valence: Valence) -> List[Run]:
    """
    All maximal runs of `word` over `valence`, sorted by start position.

    A maximal run can be extended neither to the left nor to the right without leaving the
    valence, so runs over the same valence are pairwise disjoint (and even separated).
    """
    runs = []
    start = None
    for position, symbol in enumerate(word.symbols):
        if symbol in valence:
            if start is None:
                start = position
        elif start is not None:
            runs.append(Run(start, position - start, valence))
            start = None
    if start is not None:
        runs.append(Run(start, len(word) - start, valence))
    return runs


def longest_run(word: Word, valence: Valence) -> Optional[Run]:
    """The earliest of the longest maximal runs over `valence`, or None if no symbol belongs to it."""
    best = None
    for run in maximal_runs(word, valence):
        if best is None or run.length > best.length:
            best = run
    return best


def all_words(length: int, alphabet_size: int) -> Iterator[Word]:
    """Every word of the given length, in lexicographic order."""
    for symbols in product(range(alphabet_size), repeat=length):
        yield Word(symbols, alphabet_size)


def canonical_words(length: int, alphabet_size: int) -> Iterator[Word]:
    """
    One representative per class of words equal up to a permutation of the alphabet.

    The representative is the word whose symbols appear for the first time in increasing
    order (0 first, then 1, ...). For b = 2 this is every word that starts with 0.
    """

    def extend(prefix: Tuple[int, ...], used: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == length:
            yield prefix
            return
        for symbol in range(min(used + 1, alphabet_size)):
            yield from extend(prefix + (symbol,), max(used, symbol + 1))

    for symbols in extend((), 0):
        yield Word(symbols, alphabet_size)


def canonical_form(word: Word) -> Word:
    """
    The representative of `word` among `canonical_words`: symbols renamed in order of first occurrence.
    """
    names: dict = {}
    for symbol in word.symbols:
        if symbol not in names:
            names[symbol] = len(names)
    return Word(tuple(names[s] for s in word.symbols), word.alphabet_size)
