"""
Explicit nondeterministic finite automata without epsilon transitions, and exact counting.

Two different counts matter for automatic complexity:

- the number of accepting *paths* a word (or all words of a given length) has, and
- the number of accepted *strings* of a given length.

Path counts are products of per-symbol transition matrices (exact integers held in numpy
object arrays). String counts need determinization: only the subsets of states reachable
from the start state are ever materialized, and the number of strings leading into each
subset is carried along.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from ..exceptions import AlphabetMismatch, InvalidAutomaton
from ..words import Word

logger = logging.getLogger(__name__)

Transition = Tuple[int, int, int]


@dataclass(frozen=True)
class Nfa:
    state_count: int
    alphabet_size: int
    transitions: FrozenSet[Transition]
    start: int = 0
    accepting: FrozenSet[int] = frozenset({0})

    def __post_init__(self) -> None:
        object.__setattr__(self, "transitions", frozenset(tuple(t) for t in self.transitions))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if self.state_count < 1:
            raise InvalidAutomaton(f"an automaton needs at least one state, got {self.state_count}")
        if self.alphabet_size < 1:
            raise InvalidAutomaton(f"alphabet size must be at least 1, got {self.alphabet_size}")
        states = range(self.state_count)
        if self.start not in states or not self.accepting <= set(states):
            raise InvalidAutomaton("start and accepting states must be smaller than the state count")
        for source, symbol, target in self.transitions:
            if source not in states or target not in states:
                raise InvalidAutomaton(f"transition {(source, symbol, target)} leaves the state space")
            if not 0 <= symbol < self.alphabet_size:
                raise InvalidAutomaton(f"transition {(source, symbol, target)} uses a symbol outside the alphabet")

    @cached_property
    def successors(self) -> Tuple[Tuple[int, ...], ...]:
        """`successors[q][a]` is the bit mask of the states reachable from `q` reading `a`."""
        table = [[0] * self.alphabet_size for _ in range(self.state_count)]
        for source, symbol, target in self.transitions:
            table[source][symbol] |= 1 << target
        return tuple(tuple(row) for row in table)

    @cached_property
    def symbol_matrices(self) -> List[np.ndarray]:
        """Exact 0/1 transition matrices, one per symbol, as numpy object arrays."""
        matrices = [np.zeros((self.state_count, self.state_count), dtype=object) for _ in range(self.alphabet_size)]
        for source, symbol, target in self.transitions:
            matrices[symbol][source, target] = 1
        return matrices

    @property
    def accepting_mask(self) -> int:
        return sum(1 << q for q in self.accepting)

    def as_dict(self) -> Dict[str, object]:
        return {
            "states": self.state_count,
            "alphabet": self.alphabet_size,
            "start": self.start,
            "accepting": sorted(self.accepting),
            "transitions": [list(t) for t in sorted(self.transitions)],
        }

    @classmethod
    def from_dict(cls, d: Dict[str, object]) -> Nfa:
        return cls(
            state_count=int(d["states"]),
            alphabet_size=int(d["alphabet"]),
            transitions=frozenset(tuple(int(x) for x in t) for t in d["transitions"]),
            start=int(d["start"]),
            accepting=frozenset(int(q) for q in d["accepting"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> Nfa:
        return cls.from_dict(json.loads(text))


def _check_alphabet(nfa: Nfa, word: Word) -> None:
    if nfa.alphabet_size != word.alphabet_size:
        raise AlphabetMismatch(
            f"automaton over {nfa.alphabet_size} symbols cannot read a word over {word.alphabet_size} symbols"
        )


def _initial_vector(nfa: Nfa) -> np.ndarray:
    vector = np.zeros(nfa.state_count, dtype=object)
    vector[nfa.start] = 1
    return vector


def count_accepting_paths(nfa: Nfa, word: Word) -> int:
    """
    Number of state sequences q_0, ..., q_n that start in the start state, end in an accepting
    state and follow a transition labeled w_i at every step.

    Args:
        nfa: automaton reading the word
        word: input word over the same alphabet

    Returns:
        int: exact number of accepting paths labeled by `word`

    Raises:
        AlphabetMismatch: if automaton and word use different alphabet sizes
    """
    _check_alphabet(nfa, word)
    vector = _initial_vector(nfa)
    for symbol in word:
        vector = vector.dot(nfa.symbol_matrices[symbol])
    return int(sum(vector[q] for q in nfa.accepting))


def count_paths(nfa: Nfa, length: int) -> int:
    """
    Number of accepting paths of the given length, whatever their labels.

    Parallel edges with different labels count as different paths, so this equals the sum of
    `count_accepting_paths` over all words of that length.
    """
    adjacency = sum(nfa.symbol_matrices[1:], nfa.symbol_matrices[0].copy())
    vector = _initial_vector(nfa)
    for _ in range(length):
        vector = vector.dot(adjacency)
    return int(sum(vector[q] for q in nfa.accepting))


def count_strings(
    successors: Sequence[Sequence[int]], start: int, accepting_mask: int, length: int, alphabet_size: int
) -> int:
    """
    Count the strings of `length` symbols accepted by an automaton given as successor masks.

    Only subsets of states reachable from `{start}` are visited. Each step maps the number of
    strings leading into every subset to its images under the alphabet; strings that reach the
    empty subset are dropped.
    """
    images: Dict[Tuple[int, int], int] = {}

    def image(subset: int, symbol: int) -> int:
        key = (subset, symbol)
        if key not in images:
            target = 0
            remaining, state = subset, 0
            while remaining:
                if remaining & 1:
                    target |= successors[state][symbol]
                remaining >>= 1
                state += 1
            images[key] = target
        return images[key]

    frontier: Dict[int, int] = {1 << start: 1}
    for _ in range(length):
        following: Dict[int, int] = {}
        for subset, count in frontier.items():
            for symbol in range(alphabet_size):
                target = image(subset, symbol)
                if target:
                    following[target] = following.get(target, 0) + count
        frontier = following
        if not frontier:
            return 0
    return sum(count for subset, count in frontier.items() if subset & accepting_mask)


def count_accepted_strings(nfa: Nfa, length: int) -> int:
    """
    Exact size of L(M) ∩ Σ^length, computed on the reachable part of the subset construction.

    Args:
        nfa: automaton to count
        length: string length n >= 0

    Returns:
        int: number of distinct accepted strings of that length
    """
    if length < 0:
        raise ValueError(f"length must be nonnegative, got {length}")
    return count_strings(nfa.successors, nfa.start, nfa.accepting_mask, length, nfa.alphabet_size)


def accepts(nfa: Nfa, word: Word) -> bool:
    """True if some path labeled `word` leads from the start state to an accepting state."""
    _check_alphabet(nfa, word)
    subset = 1 << nfa.start
    for symbol in word:
        target = 0
        for state in range(nfa.state_count):
            if subset >> state & 1:
                target |= nfa.successors[state][symbol]
        subset = target
        if not subset:
            return False
    return bool(subset & nfa.accepting_mask)


def path_induced_nfa(word: Word, states: Iterable[int]) -> Nfa:
    """
    The automaton whose transitions are exactly the edges of one path through `word`.

    Args:
        word: word w_1 ... w_n read along the path
        states: state sequence q_0, ..., q_n of length n + 1

    Returns:
        Nfa: start q_0, single accepting state q_n, state count max(q_i) + 1
    """
    states = list(states)
    if len(states) != len(word) + 1:
        raise InvalidAutomaton(f"a path through {len(word)} symbols visits {len(word) + 1} states, got {len(states)}")
    transitions = frozenset((states[i], word[i], states[i + 1]) for i in range(len(word)))
    return Nfa(max(states) + 1, word.alphabet_size, transitions, states[0], frozenset({states[-1]}))
