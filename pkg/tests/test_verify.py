import pytest

from cli import main
from utils.config import build_config
from verification.suites import FAIL, INFO, PASS, h2_suite, run_suite


def test_h2_suite_up_to_five_squares():
    rows = h2_suite(build_config(), max_n=5)
    assert rows
    assert not [r for r in rows if r.status == FAIL]
    names = {r.name for r in rows if r.status == PASS}
    assert "n=5 |A|" in names and "n=5 |B|" in names
    assert "n=5 seeded = brute" in names
    for tag in ("n=3 single", "n=4 single", "n=5 A", "n=5 B"):
        assert f"{tag} hyperbolic fixed points" in names
        assert f"{tag} order 3 and 6 words fix nothing" in names
        assert f"{tag} chi = -V/6" in names
    assert "n=3 single genus 0" in names
    assert "n=3 single short-cycle genus bound is 0" in names
    assert "n=5 B short-cycle genus bound is 0" in names


def test_prym6_needs_slow_flag():
    rows = run_suite("prym6", build_config())
    assert [r.status for r in rows] == [INFO]


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("h3", build_config())


def test_verify_command_exit_code(capsys):
    assert main(["verify", "--suite", "h2", "--max-n", "4"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] h2: n=4 orbit count" in out


@pytest.mark.slow
def test_h11_suite_at_seven_squares():
    rows = run_suite("h11", build_config(), max_n=7)
    assert not [r for r in rows if r.status == FAIL]


def test_h2_suite_reaches_the_genus_bound_row():
    rows = h2_suite(build_config(), max_n=8)
    by_name = {r.name: r for r in rows}
    assert by_name["some orbit with 7 <= n <= 12 has genus bound >= 1"].status == PASS
    assert by_name["n=7 B hyperbolic fixed points"].status == PASS
    assert by_name["n=8 single hyperbolic fixed points"].status == PASS


def test_prym4_suite_checks_curves():
    rows = run_suite("prym4", build_config(), max_n=5)
    curve_rows = [r for r in rows if "chi" in r.name or "genus" in r.name]
    assert curve_rows
    assert all(r.status == PASS for r in curve_rows)
