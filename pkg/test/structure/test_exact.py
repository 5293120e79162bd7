from typing import Protocol

import pytest
from utils_for_tests import brute_force_min_counts, brute_force_path_min_counts

from autocomplexity.automata import accepts, count_accepted_strings
from autocomplexity.config import Settings
from autocomplexity.exceptions import SearchLimitExceeded
from autocomplexity.structure import (
    StructureCache,
    automatic_complexity,
    automatic_complexity_with_witness,
    converse_values,
    deficiency,
    exact_h,
    exact_h_with_witnesses,
    g_of,
    g_table,
    hyde_bound,
    min_count_per_k,
)
from autocomplexity.words import all_words, parse_word


class StructureOf(Protocol):
    def __call__(self, text: str, alphabet_size: int = 2) -> tuple:
        ...


@pytest.fixture
def structure_of(settings: Settings) -> StructureOf:
    def _structure_of(text: str, alphabet_size: int = 2) -> tuple:
        return exact_h(parse_word(text, alphabet_size), settings).values

    return _structure_of


class TestExactStructureFunction:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("0100", (3, 3, 2, 2, 1)),
            ("01000", (3, 3, 2, 2, 2, 1)),
            ("0000", (1, 1, 1, 1, 1)),
            ("", (1,)),
            ("01", (2, 2, 1)),
        ],
    )
    def test_values(self, structure_of: StructureOf, text, expected):
        assert structure_of(text) == expected

    def test_relabeling_invariance(self, structure_of: StructureOf):
        assert structure_of("1011") == structure_of("0100")
        assert structure_of("0120", 3) == structure_of("2102", 3)

    def test_witnesses(self, settings):
        word = parse_word("01101", 2)
        sf, witnesses = exact_h_with_witnesses(word, settings)
        assert sf.class_tag == "exact"
        for m, nfa in witnesses.items():
            assert nfa.state_count == sf[m]
            assert accepts(nfa, word)
            assert count_accepted_strings(nfa, len(word)) <= 2**m

    def test_limit(self, settings):
        with pytest.raises(SearchLimitExceeded):
            exact_h(parse_word("0" * 9, 2), settings)
        with pytest.raises(SearchLimitExceeded):
            min_count_per_k(parse_word("012012", 3), 2, settings)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_against_unrestricted_search(self, settings, n):
        for word in all_words(n, 2):
            assert min_count_per_k(word, 2, settings) == brute_force_min_counts(word, 2)

    @pytest.mark.parametrize("n", [*range(1, 5), *(pytest.param(n, marks=pytest.mark.slow) for n in (5, 6))])
    def test_three_states_against_every_path(self, settings, n):
        for word in all_words(n, 2):
            assert min_count_per_k(word, 3, settings) == brute_force_path_min_counts(word, 3)

    @pytest.mark.parametrize("text", ["", "0", "01", "011"])
    def test_path_oracle_agrees_with_every_automaton(self, text):
        word = parse_word(text, 2)
        assert brute_force_path_min_counts(word, 2) == brute_force_min_counts(word, 2)

    def test_ternary_against_unrestricted_search(self, settings):
        for text in ["012", "0102", "0012"]:
            word = parse_word(text, 3)
            assert min_count_per_k(word, 1, settings) == brute_force_min_counts(word, 1)


class TestAutomaticComplexity:
    @pytest.mark.parametrize("text,expected", [("0000", 1), ("0100", 3), ("01", 2), ("0", 1), ("00010000", 5)])
    def test_values(self, settings, text, expected):
        assert automatic_complexity(parse_word(text, 2), settings) == expected

    def test_maximal_deficiency(self, settings):
        assert deficiency(parse_word("00010000", 2), settings) == 0
        assert deficiency(parse_word("0000", 2), settings) == hyde_bound(4) - 1

    def test_witness_has_unique_string(self, settings):
        word = parse_word("011", 2)
        complexity, nfa = automatic_complexity_with_witness(word, settings)
        assert nfa.state_count == complexity
        assert count_accepted_strings(nfa, 3) == 1

    @pytest.mark.parametrize("n", range(7))
    def test_equals_h_at_zero(self, structure_cache: StructureCache, n):
        for word in all_words(n, 2):
            assert structure_cache.h(word)[0] == structure_cache.automatic_complexity(word) <= hyde_bound(n)


class TestConverse:
    @pytest.mark.parametrize("text", ["0100", "01000", "0110", "00101"])
    def test_agrees_with_h(self, settings, text):
        word = parse_word(text, 2)
        sf = exact_h(word, settings)
        n = len(word)
        assert converse_values(word, n) == [sf.converse(m) for m in range(n + 1)]
        assert all(g_of(word, m) == sf.converse(m) for m in range(n + 1))

    def test_counterexample_pair(self):
        assert g_of(parse_word("0100", 2), 3) == 3
        assert g_of(parse_word("01000", 2), 3) == 2

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            g_of(parse_word("01", 2), 3)

    def test_g_table(self, settings):
        table = g_table(5, 3, 2, settings)
        assert table.entries[0] == 1
        assert all(value <= m + 1 for m, value in enumerate(table.entries))
        frame = table.as_frame()
        assert list(frame.columns) == ["n", "m", "G", "witness", "alphabet"]
        assert len(frame) == 4
