from fractions import Fraction

import pytest

from autocomplexity.config import DEFAULT_SETTINGS, Settings, load_settings, read_config_file
from autocomplexity.exceptions import SearchLimitExceeded
from autocomplexity.utils import deep_update, format_decimal, format_fraction


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "limits.cfg"
    path.write_text("# desk limits\n\nexact_max_n.3 = 9\nalpha = 1/100\nprogress = yes\n")
    return path


class TestSettings:
    def test_defaults(self):
        assert DEFAULT_SETTINGS.max_length(2) == 10
        assert DEFAULT_SETTINGS.max_length(3) == 8
        assert DEFAULT_SETTINGS.max_length(5) == 6
        assert DEFAULT_SETTINGS.alpha == Fraction(1, 20)

    def test_limit(self):
        DEFAULT_SETTINGS.check_exact_limit(10, 2)
        with pytest.raises(SearchLimitExceeded):
            DEFAULT_SETTINGS.check_exact_limit(11, 2)

    def test_echo_is_json_friendly(self):
        echo = Settings().echo()
        assert echo["alpha"] == "1/20"
        assert echo["exact_max_n"] == {"2": 10, "3": 8}


class TestLoadSettings:
    def test_read_nested_keys(self, config_file):
        assert read_config_file(config_file) == {"exact_max_n": {"3": "9"}, "alpha": "1/100", "progress": "yes"}

    def test_file_keeps_other_defaults(self, config_file):
        settings = load_settings(config_file)
        assert settings.exact_max_n == {2: 10, 3: 9}
        assert settings.alpha == Fraction(1, 100)
        assert settings.progress is True

    def test_overrides_win(self, config_file):
        settings = load_settings(config_file, alpha=Fraction(1, 10), exhaustive_limit=None)
        assert settings.alpha == Fraction(1, 10)
        assert settings.exhaustive_limit == 10**6

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text("colour = blue\n")
        with pytest.raises(ValueError):
            load_settings(path)

    def test_malformed_line(self, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text("exact_max_n\n")
        with pytest.raises(ValueError):
            load_settings(path)


class TestUtils:
    def test_deep_update(self):
        d = {"a": {"b": 1, "c": 2}, "d": 3}
        assert deep_update(d, {"a": {"b": 5}}) == {"a": {"b": 5, "c": 2}, "d": 3}

    def test_formatting(self):
        assert format_fraction(Fraction(4, 2)) == "2/1"
        assert format_decimal(Fraction(192, 243)) == "0.790123"
