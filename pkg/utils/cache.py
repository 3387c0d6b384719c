"""On-disk orbit cache: one JSON file per (stratum, n, generator set, seed)."""

import hashlib
import json
import logging
import os
import time
from typing import Dict, List, Optional, Tuple

from orbits.orbit import Orbit, enumerate_orbit, orbit_from_members
from surfaces.origami import (
    CanonicalOrigami,
    Origami,
    canonical_form,
    from_images,
    stratum_and_genus,
)
from utils.errors import CacheError

logger = logging.getLogger(__name__)

CACHE_FORMAT_VERSION = 1


def cache_key(stratum: str, n: int, generators: str, seed_digest: str) -> str:
    payload = json.dumps(
        [CACHE_FORMAT_VERSION, stratum, n, generators, seed_digest], separators=(",", ":")
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:24]


def cache_path(cache_dir: str, key: str) -> str:
    return os.path.join(cache_dir, f"orbit-{key}.json")


def save_orbit(orbit: Orbit, cache_dir: str, seed_digest: str) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    header = {
        "format_version": CACHE_FORMAT_VERSION,
        "n": orbit.n,
        "stratum": str(orbit.stratum),
        "generators": orbit.generators,
        "seed_digest": seed_digest,
        "label": orbit.label,
        "size": len(orbit),
    }
    body = {
        "header": header,
        "members": [m.origami.to_json() for m in orbit.members],
    }
    path = cache_path(cache_dir, cache_key(header["stratum"], orbit.n, orbit.generators, seed_digest))
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(body, fh, sort_keys=True)
    os.replace(tmp, path)
    logger.info("cached orbit of size %d at %s", len(orbit), path)
    return path


def _member(entry: Dict[str, object]) -> CanonicalOrigami:
    h = [int(x) - 1 for x in entry["h"]]
    v = [int(x) - 1 for x in entry["v"]]
    return canonical_form(from_images(h, v))


def load_orbit(path: str) -> Orbit:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            body = json.load(fh)
    except (OSError, ValueError) as e:
        raise CacheError(f"cannot read cache file {path}: {e}")
    header = body.get("header") if isinstance(body, dict) else None
    if not header or header.get("format_version") != CACHE_FORMAT_VERSION:
        raise CacheError(f"{path} has an unsupported cache format")
    try:
        members = [_member(e) for e in body["members"]]
    except (KeyError, TypeError, ValueError) as e:
        raise CacheError(f"malformed member list in {path}: {e}")
    orbit = orbit_from_members(members, header["generators"])
    if len(orbit) != header.get("size", len(orbit)):
        raise CacheError(f"{path} declares {header['size']} members, found {len(orbit)}")
    return orbit


def cached_orbit(
    seed: Origami,
    generators: str = "parabolic",
    cache_dir: Optional[str] = None,
    workers: int = 1,
) -> Tuple[Orbit, bool]:
    """Load the orbit of ``seed`` from the cache or enumerate and store it.

    Returns the orbit and whether it came from the cache.
    """
    if cache_dir is None:
        return enumerate_orbit(seed, generators, workers), False
    digest = canonical_form(seed).digest
    key = cache_key(str(stratum_and_genus(seed)), seed.n, generators, digest)
    path = cache_path(cache_dir, key)
    if os.path.exists(path):
        logger.info("cache hit %s", path)
        return load_orbit(path), True
    logger.info("cache miss for seed %s", seed)
    orbit = enumerate_orbit(seed, generators, workers)
    save_orbit(orbit, cache_dir, digest)
    return orbit, False


def list_cache(cache_dir: str) -> List[Dict[str, object]]:
    """Headers of every cache file, newest first."""
    if not os.path.isdir(cache_dir):
        return []
    rows = []
    for name in os.listdir(cache_dir):
        if not (name.startswith("orbit-") and name.endswith(".json")):
            continue
        path = os.path.join(cache_dir, name)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                header = json.load(fh).get("header", {})
        except (OSError, ValueError):
            header = {}
        mtime = os.path.getmtime(path)
        rows.append(
            {
                "file": name,
                "path": path,
                "age_seconds": int(time.time() - mtime),
                "bytes": os.path.getsize(path),
                **header,
            }
        )
    rows.sort(key=lambda r: -os.path.getmtime(r["path"]))
    return rows


def drop_cache_file(cache_dir: str, name: str) -> None:
    path = os.path.join(cache_dir, os.path.basename(name))
    if not os.path.exists(path):
        raise CacheError(f"no cache file {name}")
    os.remove(path)
    logger.info("removed cache file %s", path)
