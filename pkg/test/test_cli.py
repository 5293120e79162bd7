import json

import pytest

from autocomplexity import __version__
from autocomplexity.cli import EXIT_LIMIT, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCommands:
    def test_an(self, capsys):
        code, out, _ = run(capsys, "an", "00010000")
        assert code == EXIT_OK
        assert out == "00010000: A_N=5 b(n)=5 D=0\n"

    def test_an_witness(self, capsys):
        code, out, _ = run(capsys, "an", "0100", "--witness", "--format", "json")
        result = json.loads(out)["results"][0]
        assert result["automatic_complexity"] == 3
        assert result["witness"]["states"] == 3

    @pytest.mark.parametrize(
        "argv,expected",
        [
            (["0100"], "0100 [exact]: 3 3 2 2 1"),
            (["0011", "--class", "multi-run"], "0011 [multi_run]: 3 3 2 2 1"),
            (
                ["1010020210", "--class", "single-run", "--alphabet", "3"],
                "1010020210 [single_run]: 9 9 8 7 6 6 5 4 3 2 1",
            ),
        ],
    )
    def test_sf(self, capsys, argv, expected):
        code, out, _ = run(capsys, "sf", *argv)
        assert code == EXIT_OK
        assert out.splitlines()[0] == expected

    def test_pvalue_json(self, capsys):
        code, out, _ = run(capsys, "pvalue", "00000000000", "--alphabet", "3", "--format", "json")
        assert code == EXIT_OK
        envelope = json.loads(out)
        assert envelope["command"] == "pvalue"
        assert envelope["version"] == __version__
        assert envelope["settings"]["alpha"] == "1/20"
        result = envelope["results"][0]
        assert result["best"]["adjusted_p"] == "1/59049"
        assert result["verdict"] == "reject"
        assert result["model"] == {
            "kind": "single_run",
            "states": 1,
            "m": 0,
            "run": {"start": 0, "length": 11, "valence": [0]},
        }

    def test_pvalue_alpha(self, capsys):
        code, out, _ = run(capsys, "pvalue", "001", "--alpha", "1/100", "--format", "json")
        assert code == EXIT_OK
        envelope = json.loads(out)
        assert envelope["settings"]["alpha"] == "1/100"
        assert envelope["results"][0]["verdict"] == "accept"
        assert envelope["results"][0]["model"]["kind"] == "null"

    def test_runs_csv(self, capsys):
        code, out, _ = run(capsys, "runs", "0011", "--format", "csv")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "word,start,length,valence"
        assert sorted(lines[1:]) == ["0011,0,2,[0]", "0011,2,2,[1]"]

    def test_bounds_out(self, capsys, tmp_path):
        path = tmp_path / "bounds.csv"
        code, out, _ = run(capsys, "bounds", "--grid", "11", "--out", str(path))
        assert code == EXIT_OK
        assert out == ""
        lines = path.read_text().splitlines()
        assert "# c_b = 2.0" in lines
        header = [line for line in lines if not line.startswith("#")]
        assert header[0] == "a,u,p,psi"
        assert len(header) == 12

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "bounds", "--format", "json")
        assert code == EXIT_OK
        results = json.loads(out)["results"]
        assert results["passed"]
        assert results["suite"] == "bounds"
        assert "time" not in results

    def test_input_file(self, capsys, tmp_path):
        path = tmp_path / "words.txt"
        path.write_text("# words\n0100\n\n0000\n")
        code, out, _ = run(capsys, "an", "01", "--input", str(path))
        assert code == EXIT_OK
        assert [line.split(":")[0] for line in out.splitlines()] == ["01", "0100", "0000"]

    def test_config_file(self, capsys, tmp_path):
        path = tmp_path / "settings.cfg"
        path.write_text("exact_max_n.2 = 4\n")
        code, _, _ = run(capsys, "an", "00000", "--config", str(path))
        assert code == EXIT_LIMIT

    def test_limit_flags(self, capsys):
        code, _, _ = run(capsys, "an", "00000", "--exact-max-n", "2=4")
        assert code == EXIT_LIMIT
        code, out, _ = run(
            capsys, "pvalue", "001", "--format", "json", "--exact-max-n", "3=9", "--exhaustive-limit", "4"
        )
        assert code == EXIT_OK
        envelope = json.loads(out)
        assert envelope["settings"]["exact_max_n"] == {"2": 10, "3": 9}
        assert envelope["settings"]["exhaustive_limit"] == 4
        assert envelope["results"][0]["best"]["exact_p"] is None

    @pytest.mark.parametrize("limit", ["2:4", "b=4", "0=3"])
    def test_malformed_limit(self, limit):
        with pytest.raises(SystemExit) as e:
            main(["an", "0", "--exact-max-n", limit])
        assert e.value.code == EXIT_USAGE


class TestExitCodes:
    def test_search_limit(self, capsys):
        code, out, err = run(capsys, "an", "0" * 12)
        assert code == EXIT_LIMIT
        assert out == ""
        assert "exact search is limited" in err

    def test_usage_error(self):
        with pytest.raises(SystemExit) as e:
            main(["sf", "--class", "approximate", "01"])
        assert e.value.code == EXIT_USAGE

    def test_missing_word(self, capsys):
        code, _, _ = run(capsys, "an")
        assert code == EXIT_USAGE

    def test_invalid_word(self, capsys):
        code, _, _ = run(capsys, "an", "012", "--alphabet", "2")
        assert code == EXIT_USAGE


def test_json_is_deterministic(capsys):
    _, first, _ = run(capsys, "pvalue", "1010020210", "--alphabet", "3", "--format", "json")
    _, second, _ = run(capsys, "pvalue", "1010020210", "--alphabet", "3", "--format", "json")
    assert first == second


SETTINGS_KEYS = {"alpha", "entropy_tol", "exact_max_n", "exhaustive_limit", "progress", "significant_digits"}


@pytest.mark.parametrize(
    "argv,keys",
    [
        (["an", "0100"], {"word", "n", "alphabet", "automatic_complexity", "upper_bound", "deficiency"}),
        (["sf", "0100"], {"word", "alphabet", "class", "values"}),
        (["pvalue", "001"], {"word", "alphabet", "alpha", "verdict", "model", "best", "candidates"}),
        (["runs", "0011"], {"word", "alphabet", "runs"}),
        (["bounds", "--grid", "3"], {"constants", "rows"}),
        (["verify", "--suite", "bounds"], {"suite", "max_n", "max_k", "note", "passed", "checks", "failures"}),
    ],
)
def test_json_envelope_schema(capsys, argv, keys):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == EXIT_OK
    envelope = json.loads(out)
    assert set(envelope) == {"command", "version", "settings", "results"}
    assert envelope["command"] == argv[0]
    assert set(envelope["settings"]) == SETTINGS_KEYS
    results = envelope["results"]
    assert set(results[0] if isinstance(results, list) else results) == keys
