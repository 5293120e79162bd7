"""
Constructors for the automaton families used as witnesses: Kayleigh graphs, chains whose
selected runs are collapsed into looping states, symbol counters and the linear-bound chain.
"""

import logging
from typing import List, Sequence, Set, Tuple

from ..exceptions import EvenLengthUnsupported, InvalidSelection, OverlappingRuns
from ..words import Run, Valence, Word
from .nfa import Nfa, Transition

logger = logging.getLogger(__name__)


def build_kayleigh(word: Word) -> Nfa:
    """
    Kayleigh graph of a word of odd length n = 2m + 1.

    States 0..m form a line. Reading the word walks forward along edges labeled x_1..x_m,
    takes the self-loop x_{m+1} at the far end once and walks back along edges labeled
    x_{m+2}..x_n. State 0 is both start and accepting state, so the automaton has
    floor(n/2) + 1 states and accepts `word` as its only string of length n.

    Raises:
        EvenLengthUnsupported: if the word has even length
    """
    n = len(word)
    if n % 2 == 0:
        raise EvenLengthUnsupported(f"Kayleigh graphs are only built for odd lengths, got n = {n}")
    m = n // 2
    transitions: Set[Transition] = set()
    for i in range(m):
        transitions.add((i, word[i], i + 1))
    transitions.add((m, word[m], m))
    for j in range(1, m + 1):
        transitions.add((m + 1 - j, word[m + j], m - j))
    return Nfa(m + 1, word.alphabet_size, frozenset(transitions), 0, frozenset({0}))


def _check_selection(word: Word, selection: Sequence[Tuple[Run, Valence]]) -> None:
    previous_stop = None
    for run, loop_valence in selection:
        if run.length < 1 or run.start < 0 or run.stop > len(word):
            raise InvalidSelection(f"run {run.as_dict()} does not fit into a word of length {len(word)}")
        if not loop_valence.fits(word.alphabet_size):
            raise InvalidSelection(f"loop valence {loop_valence} uses symbols outside of the alphabet")
        for position in range(run.start, run.stop):
            if word[position] not in loop_valence:
                raise InvalidSelection(
                    f"symbol {word[position]} at position {position} is not in the loop valence {loop_valence}"
                )
        if previous_stop is not None:
            if run.start < previous_stop:
                raise OverlappingRuns(f"run starting at {run.start} overlaps or precedes the previous run")
            if run.start == previous_stop:
                # without a forward edge in between both runs would share one looping state
                raise OverlappingRuns(f"run starting at {run.start} touches the previous run")
        previous_stop = run.stop


def build_chain_with_loops(word: Word, selection: Sequence[Tuple[Run, Valence]]) -> Nfa:
    """
    Chain automaton for `word` in which every selected run is collapsed into a single state
    carrying one self-loop per symbol of its loop valence.

    Symbols outside of the selected runs become forward edges. The automaton has
    n + 1 - sum(run lengths) states, starts in the first state, accepts in the last one and
    always accepts `word`.

    Args:
        word: the word to be accepted
        selection: (run, loop valence) pairs, ordered by position, separated by at least one
            symbol, each run's symbols contained in its loop valence

    Raises:
        OverlappingRuns: if two runs overlap or touch
        InvalidSelection: if a run leaves the word or a symbol lies outside its loop valence
    """
    _check_selection(word, selection)
    loops_at = {run.start: (run, valence) for run, valence in selection}
    transitions: Set[Transition] = set()
    state, position = 0, 0
    while position < len(word):
        if position in loops_at:
            run, valence = loops_at[position]
            transitions.update((state, symbol, state) for symbol in valence.members)
            position = run.stop
            continue
        transitions.add((state, word[position], state + 1))
        state += 1
        position += 1
    return Nfa(state + 1, word.alphabet_size, frozenset(transitions), 0, frozenset({state}))


def build_symbol_counter(word: Word, symbol: int = 0) -> Nfa:
    """
    Automaton with z + 1 states accepting exactly the strings with z occurrences of `symbol`,
    z being the number of occurrences in `word`.

    Every occurrence of `symbol` is a forward edge, and every state loops on all other symbols.
    It therefore accepts C(n, z) * (b - 1)^(n - z) strings of length n.
    """
    if not 0 <= symbol < word.alphabet_size:
        raise InvalidSelection(f"symbol {symbol} is outside of the alphabet of size {word.alphabet_size}")
    zeros = word.count(symbol)
    others: List[int] = [a for a in range(word.alphabet_size) if a != symbol]
    transitions: Set[Transition] = {(q, symbol, q + 1) for q in range(zeros)}
    transitions.update((q, a, q) for q in range(zeros + 1) for a in others)
    return Nfa(zeros + 1, word.alphabet_size, frozenset(transitions), 0, frozenset({zeros}))


def build_linear_bound(word: Word, m: int) -> Nfa:
    """
    Chain of n - m + 1 states that reads the first n - m symbols deterministically and then
    loops on every symbol, accepting exactly b^m strings of length n.
    """
    n = len(word)
    if not 0 <= m <= n:
        raise InvalidSelection(f"m must lie in 0..{n}, got {m}")
    prefix = n - m
    transitions: Set[Transition] = {(i, word[i], i + 1) for i in range(prefix)}
    if m > 0:
        transitions.update((prefix, a, prefix) for a in range(word.alphabet_size))
    return Nfa(prefix + 1, word.alphabet_size, frozenset(transitions), 0, frozenset({prefix}))
