"""
Finite automata without epsilon transitions:
  - nfa: the automaton value type, path counting and accepted-string counting
  - constructions: witness families (Kayleigh graphs, chains with loops, symbol counters)
"""

from .constructions import build_chain_with_loops, build_kayleigh, build_linear_bound, build_symbol_counter
from .nfa import (
    Nfa,
    accepts,
    count_accepted_strings,
    count_accepting_paths,
    count_paths,
    count_strings,
    path_induced_nfa,
)
