"""
Exact structure functions by exhaustive search over path-induced automata.

Any automaton accepting a word w can be pruned to the transitions used by one accepting path
for w and to the final state of that path without accepting more strings of length |w| and
without creating new accepting paths. The search therefore only enumerates state sequences
q_0, ..., q_n in which states appear in first-visit order (q_0 = 0, every new state is one
more than the largest seen so far) and evaluates the automaton induced by each sequence.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Tuple

from tqdm import tqdm

from ..automata.nfa import Nfa, Transition, count_accepting_paths, count_strings
from ..config import DEFAULT_SETTINGS, Settings
from ..exceptions import InvariantViolation
from ..words import Word, canonical_words
from .base import GTable, StructureFunction

logger = logging.getLogger(__name__)

Leaf = Tuple[FrozenSet[Transition], int, int]


def hyde_bound(n: int) -> int:
    """b(n) = floor(n/2) + 1, the upper bound on A_N for words of length n."""
    return n // 2 + 1


class PathSearch:
    """
    Enumerates the canonical state sequences of a word and counts the automata they induce.

    Induced automata are memoized by (transitions, final state), since many state sequences
    induce the same automaton.

    Args:
        word: the word every enumerated automaton accepts
        max_states: largest number of states a sequence may use
    """

    def __init__(self, word: Word, max_states: int) -> None:
        self.word = word
        self.max_states = max(1, max_states)
        self._string_counts: Dict[Tuple[FrozenSet[Transition], int], int] = {}
        self._unique: Dict[Tuple[FrozenSet[Transition], int], bool] = {}

    def leaves(self) -> Iterator[Leaf]:
        """
        Yields:
            (transitions, final state, number of states used) for every canonical sequence
        """
        word, n = self.word, len(self.word)
        edges: Dict[Transition, int] = {}

        def extend(position: int, state: int, used: int) -> Iterator[Leaf]:
            if position == n:
                yield frozenset(edges), state, used
                return
            symbol = word[position]
            for target in range(min(used + 1, self.max_states)):
                edge = (state, symbol, target)
                edges[edge] = edges.get(edge, 0) + 1
                yield from extend(position + 1, target, max(used, target + 1))
                edges[edge] -= 1
                if not edges[edge]:
                    del edges[edge]

        yield from extend(0, 0, 1)

    def to_nfa(self, transitions: FrozenSet[Transition], final: int, used: int) -> Nfa:
        return Nfa(used, self.word.alphabet_size, transitions, 0, frozenset({final}))

    def string_count(self, transitions: FrozenSet[Transition], final: int, used: int) -> int:
        key = (transitions, final)
        if key not in self._string_counts:
            successors = [[0] * self.word.alphabet_size for _ in range(used)]
            for source, symbol, target in transitions:
                successors[source][symbol] |= 1 << target
            self._string_counts[key] = count_strings(
                successors, 0, 1 << final, len(self.word), self.word.alphabet_size
            )
        return self._string_counts[key]

    def has_unique_path(self, transitions: FrozenSet[Transition], final: int, used: int) -> bool:
        """True if the induced automaton has exactly one accepting path of length |w|."""
        key = (transitions, final)
        if key not in self._unique:
            unique = self.string_count(transitions, final, used) == 1
            if unique:
                unique = count_accepting_paths(self.to_nfa(transitions, final, used), self.word) == 1
            self._unique[key] = unique
        return self._unique[key]

    def minima(self) -> Tuple[Dict[int, int], Dict[int, Nfa]]:
        """
        Minimum accepted-string count for every state budget k = 1..max_states.

        Returns:
            counts: k -> minimum of |L(M) ∩ Σ^n| over automata with at most k states accepting w
            witnesses: k -> an automaton attaining `counts[k]` (the first one found)
        """
        best: Dict[int, Tuple[int, Leaf]] = {}
        for leaf in self.leaves():
            count = self.string_count(*leaf)
            used = leaf[2]
            if used not in best or count < best[used][0]:
                best[used] = (count, leaf)

        counts: Dict[int, int] = {}
        witnesses: Dict[int, Nfa] = {}
        running: Optional[Tuple[int, Leaf]] = None
        for k in range(1, self.max_states + 1):
            if k in best and (running is None or best[k][0] < running[0]):
                running = best[k]
            if running is not None:
                counts[k] = running[0]
                witnesses[k] = self.to_nfa(*running[1])
        logger.debug(f"Minimum string counts for {self.word}: {counts}")
        return counts, witnesses

    def exists(self, states: int, predicate: Callable[[FrozenSet[Transition], int, int], bool]) -> Optional[Nfa]:
        """The first induced automaton with at most `states` states satisfying `predicate`, or None."""
        for leaf in self.leaves():
            if leaf[2] <= states and predicate(*leaf):
                return self.to_nfa(*leaf)
        return None


def min_count_per_k(word: Word, k_max: int, settings: Settings = DEFAULT_SETTINGS) -> Dict[int, int]:
    """
    For every k <= k_max the minimum number of length-n strings accepted by a k-state NFA
    that accepts `word`. The result is nonincreasing in k.

    Raises:
        SearchLimitExceeded: if the word is longer than the configured exact-search limit
    """
    settings.check_exact_limit(len(word), word.alphabet_size)
    counts, _ = PathSearch(word, k_max).minima()
    return counts


def _structure_from_counts(word: Word, counts: Dict[int, int]) -> List[int]:
    values = []
    b, n = word.alphabet_size, len(word)
    for m in range(n + 1):
        feasible = [k for k, count in counts.items() if count <= b**m]
        if not feasible:
            raise InvariantViolation(f"no automaton with at most {max(counts)} states accepts {word} and b^{m} strings")
        values.append(min(feasible))
    return values


def exact_h_with_witnesses(
    word: Word, settings: Settings = DEFAULT_SETTINGS
) -> Tuple[StructureFunction, Dict[int, Nfa]]:
    """
    Exact structure function together with one minimizing automaton for every m.

    Returns:
        StructureFunction: h_w(0), ..., h_w(n) for the class of all NFAs
        dict: m -> automaton with h_w(m) states accepting w and at most b^m strings of length n
    """
    settings.check_exact_limit(len(word), word.alphabet_size)
    counts, witnesses = PathSearch(word, hyde_bound(len(word))).minima()
    values = _structure_from_counts(word, counts)
    logger.info(f"h_{word} = {values}")
    return StructureFunction(tuple(values), "exact"), {m: witnesses[k] for m, k in enumerate(values)}


def exact_h(word: Word, settings: Settings = DEFAULT_SETTINGS) -> StructureFunction:
    """
    h_w(m) = min{k : some k-state NFA accepts w and at most b^m strings of length |w|}.

    Raises:
        SearchLimitExceeded: if the word is longer than the configured exact-search limit
    """
    return exact_h_with_witnesses(word, settings)[0]


def automatic_complexity_with_witness(word: Word, settings: Settings = DEFAULT_SETTINGS) -> Tuple[int, Nfa]:
    """
    Nondeterministic automatic complexity A_N(w) and an automaton witnessing it.

    A_N(w) is the least number of states of an NFA accepting w with exactly one accepting path
    of length |w|. Uniqueness is checked as "one accepted string of that length and one
    accepting path for w".
    """
    settings.check_exact_limit(len(word), word.alphabet_size)
    search = PathSearch(word, hyde_bound(len(word)))
    for k in range(1, hyde_bound(len(word)) + 1):
        witness = search.exists(k, search.has_unique_path)
        if witness is not None:
            return k, witness
    raise InvariantViolation(f"no automaton with at most {hyde_bound(len(word))} states has a unique path for {word}")


def automatic_complexity(word: Word, settings: Settings = DEFAULT_SETTINGS) -> int:
    """A_N(w); at most floor(n/2) + 1."""
    return automatic_complexity_with_witness(word, settings)[0]


def deficiency(word: Word, settings: Settings = DEFAULT_SETTINGS) -> int:
    """Complexity deficiency D_n(w) = floor(n/2) + 1 - A_N(w)."""
    return hyde_bound(len(word)) - automatic_complexity(word, settings)


def g_of(word: Word, m: int) -> int:
    """
    Converse structure function g_w(m) = h_w(n - m).

    Only automata with at most m + 1 states are searched, since the chain that reads n - m
    symbols and then loops on everything already witnesses h_w(n - m) <= m + 1.
    """
    n = len(word)
    if not 0 <= m <= n:
        raise ValueError(f"m must lie in 0..{n}, got {m}")
    budget = min(m + 1, hyde_bound(n))
    threshold = word.alphabet_size ** (n - m)
    search = PathSearch(word, budget)
    for k in range(1, budget + 1):
        if search.exists(k, lambda t, f, u: search.string_count(t, f, u) <= threshold) is not None:
            return k
    raise InvariantViolation(f"g_{word}({m}) exceeds its bound {budget}")


def converse_values(word: Word, m_max: int) -> List[int]:
    """g_w(0), ..., g_w(min(m_max, n)) from a single search with at most m_max + 1 states."""
    n = len(word)
    m_max = min(m_max, n)
    counts, _ = PathSearch(word, min(m_max + 1, hyde_bound(n))).minima()
    b = word.alphabet_size
    return [min(k for k, count in counts.items() if count <= b ** (n - m)) for m in range(m_max + 1)]


def g_table(n: int, m_max: int, alphabet_size: int = 2, settings: Settings = DEFAULT_SETTINGS) -> GTable:
    """
    G_n(m) = max over all words x of length n of g_x(m), for m = 0..min(m_max, n).

    Words are enumerated up to a relabeling of the alphabet, which leaves g unchanged.

    Raises:
        SearchLimitExceeded: if n is beyond the configured exact-search limit
    """
    settings.check_exact_limit(n, alphabet_size)
    m_max = min(m_max, n)
    entries = [0] * (m_max + 1)
    witnesses = [""] * (m_max + 1)
    words = canonical_words(n, alphabet_size)
    for word in tqdm(words, desc=f"G_{n}", disable=not settings.progress, leave=False):
        for m, value in enumerate(converse_values(word, m_max)):
            if value > entries[m]:
                entries[m], witnesses[m] = value, str(word)
    logger.info(f"G_{n}(0..{m_max}) = {entries}")
    return GTable(n, tuple(entries), tuple(witnesses), alphabet_size)
