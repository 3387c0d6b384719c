import pytest

from utils.config import RunConfig, build_config
from utils.errors import ConfigError, ParseError
from utils.parsing import parse_origami, parse_seed, parse_stratum


def test_config_reads_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("ORIGAMI_CACHE_DIR", str(tmp_path))
    monkeypatch.setenv("ORIGAMI_BRUTE_CAP", "8")
    config = RunConfig()
    assert config.cache_dir == str(tmp_path)
    assert config.brute_cap == 8
    assert config.progress is False


def test_build_config_overrides_environment(monkeypatch):
    monkeypatch.setenv("ORIGAMI_WORKERS", "3")
    assert build_config().workers == 3
    assert build_config(workers=1).workers == 1
    assert build_config(generators="elliptic", slow=True).slow


def test_config_validation(monkeypatch):
    with pytest.raises(ConfigError):
        RunConfig(workers=0)
    with pytest.raises(ConfigError):
        RunConfig(generators="hyperbolic")
    monkeypatch.setenv("ORIGAMI_MAX_WORD_LEN", "four")
    with pytest.raises(ConfigError):
        RunConfig()


@pytest.mark.parametrize(
    "text, orders, involution",
    [
        ("H2", (2,), None),
        ("H11", (1, 1), None),
        ("H(1,1)", (1, 1), None),
        ("H4prym", (4,), "prym"),
        ("H6prym", (6,), "prym"),
        ("H4hyp", (4,), "hyperelliptic"),
        ("H(3,1)", (3, 1), None),
    ],
)
def test_parse_stratum(text, orders, involution):
    choice = parse_stratum(text)
    assert choice.signature.zero_orders == orders
    assert choice.involution == involution


@pytest.mark.parametrize("text", ["Q(2)", "H10", "H12", "H(0)", "H(2,0)"])
def test_parse_stratum_rejects(text):
    with pytest.raises(ParseError):
        parse_stratum(text)


def test_parse_seed_accepts_parameters():
    assert str(parse_seed("(1,1,0,2,2,0)")) == "((1,2)(3,4),(1,3,5)(2,4))"
    assert parse_seed("((2,3),(1,2,3))") == parse_origami("(2,3),(1,2,3)")
    with pytest.raises(ParseError):
        parse_origami("((1,2))")


def test_config_carries_command_fields():
    config = build_config(command="census", stratum="H11", n=7, seed=None, out="census.csv", orbit_index=1)
    assert (config.command, config.stratum, config.n, config.out, config.orbit_index) == (
        "census",
        "H11",
        7,
        "census.csv",
        1,
    )
    assert config.seed is None and config.d is None and config.dot_out is None
    assert RunConfig().stratum == "H2"
    with pytest.raises(ConfigError):
        build_config(n=0)
    with pytest.raises(ConfigError):
        build_config(orbit_index=-1)
