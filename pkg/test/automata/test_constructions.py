import numpy as np
import pytest
from scipy.special import comb

from autocomplexity.automata import (
    accepts,
    build_chain_with_loops,
    build_kayleigh,
    build_linear_bound,
    build_symbol_counter,
    count_accepted_strings,
    count_accepting_paths,
)
from autocomplexity.exceptions import EvenLengthUnsupported, InvalidSelection, OverlappingRuns
from autocomplexity.words import Run, Valence, Word, all_words, parse_word


class TestKayleigh:
    @pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11])
    def test_unique_string_and_path(self, n):
        for word in all_words(n, 2):
            nfa = build_kayleigh(word)
            assert nfa.state_count == n // 2 + 1
            assert count_accepting_paths(nfa, word) == 1
            assert count_accepted_strings(nfa, n) == 1

    def test_ternary(self):
        word = parse_word("0120210", 3)
        nfa = build_kayleigh(word)
        assert nfa.state_count == 4
        assert count_accepted_strings(nfa, 7) == 1

    def test_even_length(self):
        with pytest.raises(EvenLengthUnsupported):
            build_kayleigh(parse_word("0100"))


class TestChainWithLoops:
    def test_unary_loop(self):
        word = parse_word("0011")
        zeros = Valence((0,))
        nfa = build_chain_with_loops(word, [(Run(0, 2, zeros), zeros)])
        assert nfa.state_count == 3
        assert count_accepted_strings(nfa, 4) == 1
        assert count_accepting_paths(nfa, word) == 1

    def test_wider_loop_valence(self):
        word = parse_word("0011")
        both = Valence((0, 1))
        nfa = build_chain_with_loops(word, [(Run(0, 2, both), both)])
        assert count_accepted_strings(nfa, 4) == 4

    def test_two_loops(self):
        word = parse_word("00100")
        zeros = Valence((0,))
        nfa = build_chain_with_loops(word, [(Run(0, 2, zeros), zeros), (Run(3, 2, zeros), zeros)])
        assert nfa.state_count == 2
        assert accepts(nfa, word)
        # 0^a 1 0^b with a + b = 4
        assert count_accepted_strings(nfa, 5) == 5

    def test_touching_runs(self):
        word = parse_word("0011")
        with pytest.raises(OverlappingRuns):
            build_chain_with_loops(
                word, [(Run(0, 2, Valence((0,))), Valence((0,))), (Run(2, 2, Valence((1,))), Valence((1,)))]
            )

    def test_symbol_outside_valence(self):
        with pytest.raises(InvalidSelection):
            build_chain_with_loops(parse_word("0011"), [(Run(1, 2, Valence((0,))), Valence((0,)))])

    def test_run_outside_word(self):
        with pytest.raises(InvalidSelection):
            build_chain_with_loops(parse_word("0011"), [(Run(3, 2, Valence((1,))), Valence((1,)))])


class TestSymbolCounter:
    def test_random_binary_words(self):
        rng = np.random.default_rng(2024)
        for _ in range(200):
            word = Word(tuple(int(s) for s in rng.integers(0, 2, size=20)), 2)
            nfa = build_symbol_counter(word, 0)
            zeros = word.count(0)
            assert nfa.state_count == zeros + 1
            assert accepts(nfa, word)
            assert count_accepted_strings(nfa, 20) == int(comb(20, zeros, exact=True))

    @pytest.mark.parametrize("text", ["0120", "2222", "10201"])
    def test_ternary(self, text):
        word = parse_word(text, 3)
        zeros, n = word.count(0), len(word)
        expected = int(comb(n, zeros, exact=True)) * 2 ** (n - zeros)
        assert count_accepted_strings(build_symbol_counter(word, 0), n) == expected

    def test_symbol_outside_alphabet(self):
        with pytest.raises(InvalidSelection):
            build_symbol_counter(parse_word("01"), 2)


class TestLinearBound:
    @pytest.mark.parametrize("m", range(6))
    def test_counts(self, m):
        word = parse_word("01101", 2)
        nfa = build_linear_bound(word, m)
        assert nfa.state_count == 5 - m + 1
        assert accepts(nfa, word)
        assert count_accepted_strings(nfa, 5) == 2**m

    def test_out_of_range(self):
        with pytest.raises(InvalidSelection):
            build_linear_bound(parse_word("01"), 3)
