"""Exports shared by the CLI and the explorer: DOT, JSON and CSV."""

import csv
import io
import json
from typing import Dict, Iterable, List, Optional

import networkx as nx

from orbits.census import CurveInvariants, FaceCensus
from orbits.graph import build_graph
from orbits.orbit import Orbit, orbit_from_members
from surfaces.origami import canonical_form, from_images
from utils.errors import ParseError

JSON_FORMAT_VERSION = 1


def graph_to_dot(graph: nx.MultiGraph, name: str = "orbit") -> str:
    """Undirected DOT with one edge per (vertex, generator), labelled T/S or R/U."""
    lines = [f"graph {name} {{"]
    for node, data in sorted(graph.nodes(data=True)):
        tooltip = data.get("origami", "")
        lines.append(f'  {node} [label="{node}", tooltip="{tooltip}"];')
    edges = []
    for u, v, data in graph.edges(data=True):
        source = data.get("source", u)
        target = v if source == u else u
        edges.append((source, target, data["label"]))
    edges.sort()
    for u, v, label in edges:
        lines.append(f'  {u} -- {v} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def orbit_to_json(orbit: Orbit, extra: Optional[Dict[str, object]] = None) -> Dict[str, object]:
    payload: Dict[str, object] = {
        "format_version": JSON_FORMAT_VERSION,
        "n": orbit.n,
        "stratum": str(orbit.stratum),
        "generators": orbit.generators,
        "label": orbit.label,
        "size": len(orbit),
        "members": [dict(m.origami.to_json(), digest=m.digest) for m in orbit.members],
        "edges": {symbol: list(targets) for symbol, targets in orbit.edges.items()},
    }
    if extra:
        payload.update(extra)
    return payload


def dumps(payload: Dict[str, object]) -> str:
    """Byte-stable JSON text."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def import_orbit_json(text: str) -> Orbit:
    try:
        payload = json.loads(text)
        entries = payload["members"]
        generators = payload.get("generators", "parabolic")
        members = [
            canonical_form(from_images([x - 1 for x in e["h"]], [x - 1 for x in e["v"]]))
            for e in entries
        ]
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(f"not an orbit export: {e}")
    for entry, member in zip(entries, members):
        if "digest" in entry and entry["digest"] != member.digest:
            raise ParseError(f"digest mismatch for member {member}")
    return orbit_from_members(members, generators)


def census_json(census: FaceCensus, curve: Optional[CurveInvariants] = None) -> Dict[str, object]:
    out: Dict[str, object] = {
        "words": [
            {"word": row.text, "kind": row.kind, "count": row.count, "witnesses": row.witnesses}
            for row in census.words
        ],
        "cycles": {str(k): v for k, v in sorted(census.cycles.items())},
        "cusps": [
            {
                "width": c.width,
                "size": len(c.members),
                "representative": str(c.representative),
                "digest": c.representative.digest,
                "h2_params": list(c.h2_params) if c.h2_params else None,
                "twists_reduced": c.twists_reduced,
            }
            for c in census.cusps
        ],
    }
    if curve is not None:
        out["curve"] = curve.to_json()
    return out


def _csv(rows: Iterable[List[object]], header: List[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def census_to_csv(census: FaceCensus, orbit_label: str = "") -> str:
    """One row per (orbit, word) and one per cusp."""
    rows: List[List[object]] = []
    for row in census.words:
        rows.append([orbit_label, "word", row.text, row.kind, row.count, ""])
    for cusp in census.cusps:
        params = ",".join(str(x) for x in cusp.h2_params) if cusp.h2_params else ""
        rows.append([orbit_label, "cusp", str(cusp.representative), cusp.width, len(cusp.members), params])
    for length, count in sorted(census.cycles.items()):
        rows.append([orbit_label, "cycle", length, "", count, ""])
    return _csv(rows, ["orbit", "row", "item", "kind_or_width", "count", "params"])


def orbit_to_csv(orbit: Orbit) -> str:
    rows = [[i, m.digest, str(m.origami)] for i, m in enumerate(orbit.members)]
    return _csv(rows, ["index", "digest", "origami"])


def graph_to_csv(graph: nx.MultiGraph) -> str:
    """Edge list: one row per (vertex, generator)."""
    rows = []
    for u, v, data in graph.edges(data=True):
        source = data.get("source", u)
        target = v if source == u else u
        rows.append([source, target, data["label"], graph.nodes[source]["digest"], graph.nodes[target]["digest"]])
    rows.sort()
    return _csv(rows, ["source", "target", "label", "source_digest", "target_digest"])


def export_graph(orbit: Orbit, fmt: str) -> str:
    """Serialize an orbit graph as dot, json or csv text."""
    if fmt == "json":
        build_graph(orbit)
        return dumps(orbit_to_json(orbit))
    graph = build_graph(orbit)
    if fmt == "dot":
        return graph_to_dot(graph)
    if fmt == "csv":
        return graph_to_csv(graph)
    raise ValueError(f"unknown export format {fmt!r}")
