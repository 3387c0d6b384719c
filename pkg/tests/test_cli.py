import json

import pytest

from cli import main


def _run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_orbit_command_caches_seed_orbit(capsys, cache_dir):
    code, out, _ = _run(capsys, ["orbit", "--seed", "(2,3),(1,2,3)", "--cache-dir", cache_dir])
    assert code == 0
    rows = json.loads(out)["orbits"]
    assert rows[0]["size"] == 3
    assert rows[0]["cache"].startswith(cache_dir)


def test_orbit_command_enumerates_stratum(capsys, cache_dir):
    code, out, _ = _run(capsys, ["orbit", "--stratum", "H2", "--n", "5", "--cache-dir", cache_dir])
    assert code == 0
    assert [r["size"] for r in json.loads(out)["orbits"]] == [18, 9]


def test_graph_command_writes_dot(capsys, tmp_path, cache_dir):
    target = tmp_path / "g.dot"
    code, _, _ = _run(
        capsys,
        ["graph", "--seed", "((2,3),(1,2,3))", "--dot", str(target), "--cache-dir", cache_dir],
    )
    assert code == 0
    assert target.read_text(encoding="utf-8").count(" -- ") == 6


def test_census_command_json(capsys, cache_dir):
    code, out, _ = _run(
        capsys,
        ["census", "--seed", "((2,3),(1,2,3))", "--format", "json", "--max-word-len", "2", "--cache-dir", cache_dir],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["cycles"] == {"1": 2, "2": 2, "3": 0, "4": 0}
    assert payload["genus_lower_bound"] == 0


def test_invariants_command(capsys, cache_dir):
    code, out, _ = _run(capsys, ["invariants", "--seed", "(1,1,0,2,2,0)", "--cache-dir", cache_dir])
    assert code == 0
    payload = json.loads(out)
    assert payload["orbit"] == {"label": "A", "size": 18}
    assert payload["hlk"]["label"] == "(0,[3,1,1])"
    assert payload["curve"]["e3"] == 0


@pytest.mark.parametrize(
    "argv, key, value",
    [
        (["--table", "h3", "--D", "17"], "triples", [[-7, 0, -9]]),
        (["--table", "h2sq", "--n", "6"], "count", 24),
        (["--table", "e3", "--d", "4", "--n", "1"], "e3", "1"),
        (["--table", "t-fixed", "--n", "5"], "count", 2),
    ],
)
def test_arith_command(capsys, argv, key, value):
    code, out, _ = _run(capsys, ["arith"] + argv)
    assert code == 0
    assert json.loads(out)[key] == value


def test_errors_exit_with_code_two(capsys, cache_dir):
    code, _, err = _run(capsys, ["orbit", "--seed", "(1,2),(3,4)", "--cache-dir", cache_dir])
    assert code == 2
    assert "NotConnected" in err
    code, _, err = _run(capsys, ["orbit", "--stratum", "H11", "--n", "12", "--brute-cap", "5", "--cache-dir", cache_dir])
    assert code == 2
    assert "CapExceeded" in err
    code, _, err = _run(capsys, ["arith", "--table", "h3"])
    assert code == 2


def test_seed_outside_stratum(capsys, cache_dir):
    code, _, err = _run(capsys, ["orbit", "--stratum", "H11", "--seed", "(2,3),(1,2,3)", "--cache-dir", cache_dir])
    assert code == 2
    assert "H(2)" in err


def test_census_command_for_given_words(capsys, cache_dir):
    code, out, _ = _run(
        capsys,
        ["census", "--stratum", "H2", "--n", "5", "--orbit-index", "1", "--words", "ST,TS", "--format", "json",
         "--cache-dir", cache_dir],
    )
    assert code == 0
    rows = {row["word"]: row for row in json.loads(out)["words"]}
    assert set(rows) == {"ST", "TS"}
    assert rows["ST"]["count"] == 2 and rows["TS"]["count"] == 2
    assert rows["ST"]["witnesses"] != rows["TS"]["witnesses"]


def test_negative_orbit_index_is_a_usage_error(capsys, cache_dir):
    code, _, err = _run(capsys, ["orbit", "--n", "5", "--orbit-index", "-1", "--cache-dir", cache_dir])
    assert code == 2
    assert "ConfigError" in err
