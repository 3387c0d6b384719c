from .blocks import check_block_systems
from .census import curve_invariants, cusp_census, word_census
from .graph import build_graph
from .orbit import Orbit, enumerate_orbit, enumerate_stratum


def create_report(orbit, kind, max_word_len=4):
    """Factory function to compute one kind of report for an orbit"""
    if kind == "graph":
        return build_graph(orbit)
    elif kind == "blocks":
        return check_block_systems(orbit)
    elif kind == "cusps":
        return cusp_census(orbit)
    elif kind == "words":
        return word_census(orbit, max_word_len, alphabet=orbit.generators)
    elif kind == "curve":
        return curve_invariants(orbit)
    else:
        raise ValueError(f"unknown report kind {kind!r}")
