"""
Structure functions for chain automata with self-loops and no back edges.

A q-state chain automaton for a word w of length n reads n - (q - 1) = n + 1 - q symbols on
self-loops. Each loop state collapses one block of w whose symbols lie in the loop's valence,
and consecutive blocks are separated by at least one forward edge. When the loops carry
valences v_1, ..., v_l, the automaton has

    sum over y_1 + ... + y_l = n + 1 - q of  prod |v_i|^{y_i}

accepting paths of length n, which is the count the multi-run decision compares with b^m.
With a single loop (the single-run class) the count is |v|^{n+1-q}.
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from scipy.special import comb

from ..exceptions import InvalidSelection, OverlappingRuns
from ..words import Run, Valence, Word, maximal_runs
from .base import StructureFunction

logger = logging.getLogger(__name__)

ModelCount = int
Block = Tuple[int, int, int]  # (start, length, valence size)


@dataclass(frozen=True)
class RunSelection:
    """
    Runs collapsed into looping states, in position order, with the valence of each loop.
    """

    loops: Tuple[Tuple[Run, Valence], ...] = ()

    def __post_init__(self) -> None:
        loops = tuple(sorted((tuple(pair) for pair in self.loops), key=lambda pair: pair[0].start))
        object.__setattr__(self, "loops", loops)
        previous_stop = None
        for run, valence in loops:
            if previous_stop is not None and run.start <= previous_stop:
                raise OverlappingRuns(f"run starting at {run.start} is not separated from the previous run")
            previous_stop = run.stop

    @property
    def total_loop_length(self) -> int:
        """X = x_1 + ... + x_l"""
        return sum(run.length for run, _ in self.loops)

    @property
    def loop_count(self) -> int:
        return len(self.loops)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(valence.size for _, valence in self.loops)

    def states(self, n: int) -> int:
        """Number of states of the chain automaton for a word of length n."""
        return n + 1 - self.total_loop_length

    def as_list(self) -> List[Dict[str, object]]:
        return [
            {"start": run.start, "length": run.length, "valence": list(valence.members)} for run, valence in self.loops
        ]


def composition_count(sizes: Sequence[int], total: int) -> ModelCount:
    """
    sum over y_1 + ... + y_l = total (y_i >= 0) of prod sizes[i]^{y_i}.

    Equal sizes v reduce to v^total * C(total + l - 1, l - 1).
    """
    if total < 0:
        return 0
    if not sizes:
        return 1 if total == 0 else 0
    if len(set(sizes)) == 1:
        return sizes[0] ** total * int(comb(total + len(sizes) - 1, len(sizes) - 1, exact=True))
    counts = [1] + [0] * total
    for size in sizes:
        # counts[t] <- sum_y counts[t - y] * size^y, i.e. counts[t] + size * new[t - 1]
        updated = [0] * (total + 1)
        for t in range(total + 1):
            updated[t] = counts[t] + (size * updated[t - 1] if t else 0)
        counts = updated
    return counts[total]


def selection_count(selection: RunSelection, n: int, alphabet_size: int) -> ModelCount:
    """
    Exact number of accepting paths of length n of the chain automaton built from `selection`.

    This equals the number of accepted strings whenever the automaton is deterministic, e.g.
    when every run is a maximal run of the word over its loop valence.

    Raises:
        InvalidSelection: if the runs are longer than the word or a valence leaves the alphabet
    """
    total = selection.total_loop_length
    if total > n:
        raise InvalidSelection(f"runs of total length {total} do not fit into a word of length {n}")
    for _, valence in selection.loops:
        if not valence.fits(alphabet_size):
            raise InvalidSelection(f"valence {valence} uses symbols outside of the alphabet of size {alphabet_size}")
    return composition_count(selection.sizes, total)


def block_limits(word: Word) -> Dict[int, List[int]]:
    """
    `limits[s][i]` is the length of the longest block starting at position i that uses at most s
    distinct symbols.
    """
    n, b = len(word), word.alphabet_size
    limits: Dict[int, List[int]] = {}
    for s in range(1, b + 1):
        row = []
        for i in range(n):
            seen = set()
            j = i
            while j < n and (word[j] in seen or len(seen) < s):
                seen.add(word[j])
                j += 1
            row.append(j - i)
        limits[s] = row
    return limits


def binary_unary_coverage(word: Word) -> List[int]:
    """
    Largest total length of separated unary blocks of a binary word, for every number of blocks.

    Unary blocks live inside maximal runs, and maximal runs of a binary word alternate, so two
    chosen neighbouring runs must give up one symbol as a separator.

    Returns:
        list: entry l is the best coverage with at most l blocks, for l = 0..number of maximal runs
    """
    runs = sorted(
        (run for symbol in range(word.alphabet_size) for run in maximal_runs(word, Valence((symbol,)))),
        key=lambda run: run.start,
    )
    # (blocks used, last run chosen) -> best coverage
    states: Dict[Tuple[int, bool], int] = {(0, False): 0}
    for run in runs:
        following: Dict[Tuple[int, bool], int] = {}
        for (used, last), value in states.items():
            for key, candidate in (
                ((used, False), value),
                ((used + 1, True), value + run.length - (1 if last else 0)),
            ):
                if candidate > following.get(key, -1):
                    following[key] = candidate
        states = following
    coverage = [0] * (len(runs) + 1)
    for (used, _), value in states.items():
        coverage[used] = max(coverage[used], value)
    for used in range(1, len(coverage)):
        coverage[used] = max(coverage[used], coverage[used - 1])
    return coverage


def _pad_valence(symbols: Iterable[int], size: int, alphabet_size: int) -> Valence:
    members = sorted(set(symbols))
    for symbol in range(alphabet_size):
        if len(members) >= size:
            break
        if symbol not in members:
            members.append(symbol)
    return Valence(tuple(members))


class MultiRunModel:
    """
    Decision procedure for the multi-run class of one word.

    The maximum coverage F(i, S) of separated blocks with valence sizes from the multiset S
    placed at positions >= i does not depend on m or q, so it is computed once and reused for
    every (m, q). A pair (m, q) is feasible if some multiset S has F(0, S) >= n + 1 - q and
    composition count at most b^m.

    Args:
        word: the word to model
        max_loops: largest number of self-loop states allowed, None for no limit
        fast_path: for binary words, decide through the unary-run criterion instead of the
            general search. Defaults to True exactly when the alphabet is binary.
    """

    def __init__(self, word: Word, max_loops: Optional[int] = None, fast_path: Optional[bool] = None):
        self.word = word
        self.n = len(word)
        self.alphabet_size = word.alphabet_size
        self.max_loops = max_loops
        self.fast_path = self.alphabet_size == 2 if fast_path is None else fast_path
        if self.fast_path and self.alphabet_size != 2:
            raise ValueError("the unary-run criterion only applies to binary words")
        self.limits = block_limits(word)
        self._coverage: Dict[Tuple[int, Tuple[int, ...]], int] = {}
        self._unary: Optional[List[int]] = None

    @property
    def loop_bound(self) -> int:
        bound = (self.n + 1) // 2
        return bound if self.max_loops is None else min(bound, self.max_loops)

    def coverage(self, sizes: Sequence[int], start: int = 0) -> int:
        """F(start, sizes): most positions >= start covered by separated blocks, one per size at most."""
        sizes = tuple(sorted(sizes))
        key = (start, sizes)
        if key in self._coverage:
            return self._coverage[key]
        best = 0
        if start < self.n and sizes:
            best = self.coverage(sizes, start + 1)
            for s in sorted(set(sizes)):
                rest = _remove_one(sizes, s)
                for length in range(1, self.limits[s][start] + 1):
                    best = max(best, length + self.coverage(rest, start + length + 1))
        self._coverage[key] = best
        return best

    def _blocks(self, sizes: Tuple[int, ...], start: int = 0) -> List[Block]:
        target = self.coverage(sizes, start)
        if target == 0:
            return []
        for s in sorted(set(sizes)):
            rest = _remove_one(sizes, s)
            for length in range(self.limits[s][start], 0, -1):
                if length + self.coverage(rest, start + length + 1) == target:
                    return [(start, length, s)] + self._blocks(rest, start + length + 1)
        return self._blocks(sizes, start + 1)

    def candidates(self) -> Iterable[Tuple[int, ...]]:
        """Multisets of valence sizes, by number of loops and then lexicographically."""
        for loops in range(1, self.loop_bound + 1):
            yield from combinations_with_replacement(range(1, self.alphabet_size + 1), loops)

    def best(self, q: int) -> Tuple[ModelCount, Tuple[int, ...]]:
        """
        Smallest path count reachable with q states, and the valence sizes attaining it.

        Ties go to fewer loops, then to lexicographically smaller sizes. Returns `(-1, ())` when
        no selection covers enough of the word.
        """
        total = self.n + 1 - q
        if total <= 0:
            return 1, ()
        if self.fast_path:
            return self._best_binary(total)
        best: Tuple[ModelCount, Tuple[int, ...]] = (-1, ())
        for sizes in self.candidates():
            if self.coverage(sizes) < total:
                continue
            count = composition_count(sizes, total)
            if best[0] < 0 or count < best[0]:
                best = (count, sizes)
        return best

    def _best_binary(self, total: int) -> Tuple[ModelCount, Tuple[int, ...]]:
        if self._unary is None:
            self._unary = binary_unary_coverage(self.word)
        best: Tuple[ModelCount, Tuple[int, ...]] = (-1, ())
        if self.loop_bound < 1:
            return best
        # the full valence covers any block, and adding it to unary loops never beats it alone
        best = (2**total, (2,))
        for loops in range(1, min(self.loop_bound, len(self._unary) - 1) + 1):
            if self._unary[loops] >= total:
                count = int(comb(total + loops - 1, loops - 1, exact=True))
                if count < best[0]:
                    best = (count, (1,) * loops)
                break
        return best

    def witness(self, q: int, sizes: Tuple[int, ...]) -> RunSelection:
        """
        Blocks realizing `sizes`, trimmed to exactly n + 1 - q looped symbols.

        Blocks lose symbols from their left end, rightmost block first; blocks trimmed to nothing
        are dropped. Each kept block ends where the untrimmed one ended.
        """
        excess = sum(length for _, length, _ in self._blocks(tuple(sorted(sizes)))) - (self.n + 1 - q)
        loops = []
        for start, length, s in reversed(self._blocks(tuple(sorted(sizes)))):
            cut = min(excess, length)
            excess -= cut
            if cut == length:
                continue
            start, length = start + cut, length - cut
            valence = _pad_valence(self.word[start : start + length], s, self.alphabet_size)
            loops.append((Run(start, length, valence), valence))
        return RunSelection(tuple(loops))

    def decide(self, m: int, q: int) -> Tuple[bool, Optional[RunSelection]]:
        if not 0 <= m <= self.n:
            raise ValueError(f"m must lie in 0..{self.n}, got {m}")
        if q < 1:
            raise ValueError(f"an automaton has at least one state, got q = {q}")
        count, sizes = self.best(q)
        if count < 0 or count > self.alphabet_size**m:
            return False, None
        return True, self.witness(q, sizes)

    def structure_function(self) -> Tuple[StructureFunction, Dict[int, RunSelection]]:
        values, witnesses = [], {}
        for m in range(self.n + 1):
            for q in range(1, self.n + 2):
                held, selection = self.decide(m, q)
                if held:
                    values.append(q)
                    witnesses[m] = selection
                    break
        logger.debug(f"multi-run structure function of {self.word}: {values}")
        return StructureFunction(tuple(values), "multi_run" if self.max_loops != 1 else "single_run"), witnesses


def _remove_one(sizes: Tuple[int, ...], size: int) -> Tuple[int, ...]:
    index = sizes.index(size)
    return sizes[:index] + sizes[index + 1 :]


def max_coverage(word: Word, sizes: Sequence[int]) -> int:
    """Largest total length of separated blocks of `word`, one block per entry of `sizes` at most."""
    return MultiRunModel(word, fast_path=False).coverage(sizes)


def multi_run_decide(
    word: Word, m: int, q: int, max_loops: Optional[int] = None
) -> Tuple[bool, Optional[RunSelection]]:
    """
    Decide h_w(m) <= q for the multi-run class.

    Args:
        word: the word w of length n
        m: exponent of the string budget b^m, 0 <= m <= n
        q: number of states, q >= 1
        max_loops: optional cap on the number of looping states (1 gives the single-run class)

    Returns:
        tuple: whether a q-state chain automaton with loops accepts w within b^m paths, and a
            witness selection if it does
    """
    return MultiRunModel(word, max_loops).decide(m, q)


def multi_run_sf_with_witnesses(
    word: Word, max_loops: Optional[int] = None
) -> Tuple[StructureFunction, Dict[int, RunSelection]]:
    return MultiRunModel(word, max_loops).structure_function()


def multi_run_sf(word: Word, max_loops: Optional[int] = None) -> StructureFunction:
    """For each m the least q for which `multi_run_decide(word, m, q)` holds."""
    return multi_run_sf_with_witnesses(word, max_loops)[0]


def _longest_block(limits: Dict[int, List[int]], size: int) -> Tuple[int, int]:
    best_start, best_length = 0, 0
    for start, length in enumerate(limits[size]):
        if length > best_length:
            best_start, best_length = start, length
    return best_start, best_length


def single_run_sf_with_witnesses(word: Word) -> Tuple[StructureFunction, Dict[int, RunSelection]]:
    """
    Structure function of the single-run class together with the loop used for every m.

    A loop of valence size s over a block of length r costs n - r + 1 states and accepts s^r
    strings, so for each m the best block of size s has length min(longest block, max r with
    s^r <= b^m). The full alphabet is one of the valences, which yields h(m) <= n - m + 1.
    """
    n, b = len(word), word.alphabet_size
    limits = block_limits(word)
    longest = {s: _longest_block(limits, s) for s in range(1, b + 1)}
    values, witnesses = [], {}
    for m in range(n + 1):
        best = (n + 1, RunSelection())
        for s in range(1, b + 1):
            start, length = longest[s]
            if s > 1:
                r = 0
                while r < length and s ** (r + 1) <= b**m:
                    r += 1
                length = r
            if n - length + 1 < best[0]:
                stop = start + longest[s][1]
                valence = _pad_valence(word[stop - length : stop], s, b)
                best = (n - length + 1, RunSelection(((Run(stop - length, length, valence), valence),)))
        values.append(best[0])
        witnesses[m] = best[1]
    return StructureFunction(tuple(values), "single_run"), witnesses


def single_run_sf(word: Word) -> StructureFunction:
    """
    h_w(m) for automata whose only self-loops sit at one state (a chain otherwise).
    """
    return single_run_sf_with_witnesses(word)[0]
