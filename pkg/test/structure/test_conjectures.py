import pytest

from autocomplexity.structure import ConjectureReport, StructureCache, inequality_suite, verify_conjectures
from autocomplexity.verification import CheckTracker


@pytest.fixture(scope="module")
def binary_inequalities(settings, structure_cache) -> CheckTracker:
    return inequality_suite(6, 2, settings, cache=structure_cache)


@pytest.fixture(scope="module")
def conjecture_tracker() -> CheckTracker:
    return CheckTracker()


@pytest.fixture(scope="module")
def report(settings, conjecture_tracker) -> ConjectureReport:
    return verify_conjectures(7, 2, 2, settings, conjecture_tracker)


class TestInequalitySuite:
    def test_all_theorems_hold(self, binary_inequalities):
        assert binary_inequalities.passed
        assert not binary_inequalities.violated_theorems

    def test_checks_were_evaluated(self, binary_inequalities):
        names = {row["check"] for row in binary_inequalities.rows()}
        assert "h_x(0) = A_N(x)" in names
        assert "h_x(n-k) >= 2 unless unary or k=0" in names
        assert "per-word g is not monotone in n: g_0100(3) > g_01000(3)" in names
        evaluated = {row["check"]: row["evaluated"] for row in binary_inequalities.rows()}
        # every binary word of length 0..6
        assert evaluated["h_x(m) >= h_x(m+1)"] == 2**7 - 1

    @pytest.mark.slow
    def test_all_binary_words_up_to_eight(self, settings, structure_cache):
        tracker = inequality_suite(8, 2, settings, cache=structure_cache)
        assert tracker.passed
        assert not tracker.violated_theorems
        evaluated = {row["check"]: row["evaluated"] for row in tracker.rows()}
        assert evaluated["h_x(m) >= h_x(m+1)"] == 2**9 - 1

    def test_ternary(self, settings):
        tracker = inequality_suite(3, 3, settings, cache=StructureCache(settings))
        assert tracker.passed
        names = {row["check"] for row in tracker.rows()}
        assert "h_x(n-k) >= 2 unless unary or k=0" not in names
        assert "h_x(m) = 1 iff |letters(x)|^n <= b^m" in names


class TestConjectures:
    def test_trivial_row(self, report):
        assert report.sequences[0] == {n: 1 for n in range(1, 8)}

    def test_upper_bound(self, report):
        for k, values in report.sequences.items():
            assert all(value <= k + 1 for value in values.values())

    def test_shift_theorem(self, report):
        assert report.shift_violations == []

    def test_no_proven_statement_fails(self, report, conjecture_tracker):
        assert conjecture_tracker.passed
        assert not conjecture_tracker.violated_theorems

    def test_first_row_reaches_its_maximum(self, report):
        assert max(report.sequences[1].values()) == 2
        assert report.reaches_maximum(1)
        assert report.first_maximal[1] == 2

    def test_witnesses_have_the_right_length(self, report):
        for k, witnesses in report.witnesses.items():
            assert all(len(word) == n for n, word in witnesses.items())

    def test_tracker_labels_conjectures(self, settings):
        tracker = CheckTracker()
        verify_conjectures(4, 1, 2, settings, tracker)
        kinds = {row["check"]: row["kind"] for row in tracker.rows()}
        assert kinds["G_n(k) <= G_n+1(k)"] == "conjecture (evidence, not proof)"
        assert kinds["G_n(k) <= G_n+1(k+1)"] == "theorem"
        assert tracker.passed

    def test_as_dict(self, report):
        d = report.as_dict()
        assert d["note"] == "finite evidence, not proof"
        assert d["sequences"]["0"]["7"] == 1
        assert d["G_n(k) <= G_n+1(k+1)"]["held"]

    def test_frame(self, report):
        frame = report.as_frame()
        assert list(frame.columns) == ["k", "n", "G", "witness", "maximal"]
        assert frame[frame.k == 0].G.tolist() == [1] * 7

    def test_missing_alphabet_warns(self, settings):
        with pytest.warns(UserWarning, match="binary"):
            report = verify_conjectures(3, 1, settings=settings)
        assert report.alphabet_size == 2
