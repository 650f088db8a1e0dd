"""On-disk JSON cache of graded bases, keyed by (n, variant, code version)."""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from . import __version__
from .algebra import (
    DegreePiece,
    GradedBasis,
    compute_graded_basis,
    enumerate_degree_monomials,
    monomial_from_json,
    monomial_to_json,
    presentation,
    check_capacity,
)
from .linalg import fmt_scalar, parse_scalar

log = logging.getLogger(__name__)

SCHEMA = "1"
ENV_VAR = "MCCOOL_CACHE_DIR"

_memory: Dict[Tuple[int, str], GradedBasis] = {}


class CorruptCacheEntry(ValueError):
    pass


def basis_to_json(basis: GradedBasis) -> dict:
    degrees = []
    for p in basis.pieces:
        degrees.append({
            "q": p.q,
            "basis": [monomial_to_json(m) for m in p.basis],
            "relation_rank": p.relation_rank,
            "pivot_in_claimed": p.pivot_in_claimed,
            "projection": [
                [monomial_to_json(m), [[monomial_to_json(b), fmt_scalar(c)] for b, c in row.items()]]
                for m, row in p.projection.items()
            ],
        })
    return {
        "schema": SCHEMA,
        "code_version": __version__,
        "n": basis.n,
        "variant": basis.variant,
        "dims": basis.dims(),
        "degrees": degrees,
    }


def basis_from_json(obj: dict) -> GradedBasis:
    """Rebuild a basis, validating it against the presentation it claims."""
    try:
        if obj["schema"] != SCHEMA or obj["code_version"] != __version__:
            raise CorruptCacheEntry("schema or code version mismatch")
        pres = presentation(int(obj["n"]), obj["variant"])
        pieces: List[DegreePiece] = []
        for q, d in enumerate(obj["degrees"]):
            if d["q"] != q:
                raise CorruptCacheEntry("degrees out of order")
            monos = enumerate_degree_monomials(pres, q)
            basis = [monomial_from_json(m) for m in d["basis"]]
            projection = {
                monomial_from_json(m): {monomial_from_json(b): parse_scalar(c) for b, c in row}
                for m, row in d["projection"]
            }
            bset = set(basis)
            if bset & set(projection) or bset | set(projection) != set(monos):
                raise CorruptCacheEntry(f"degree {q} does not partition the monomials")
            if any(not set(row) <= bset for row in projection.values()):
                raise CorruptCacheEntry(f"degree {q} projects outside the basis")
            if len(projection) != d["relation_rank"]:
                raise CorruptCacheEntry(f"degree {q} rank mismatch")
            pieces.append(DegreePiece(q, monos, basis, projection, d["relation_rank"],
                                      bool(d["pivot_in_claimed"])))
        if not pieces or pieces[-1].dim != 0:
            raise CorruptCacheEntry("missing vanishing degree")
        out = GradedBasis(pres, pieces)
        if out.dims() != obj["dims"]:
            raise CorruptCacheEntry("dims disagree with stored bases")
        return out
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CorruptCacheEntry):
            raise
        raise CorruptCacheEntry(str(exc)) from exc


class BasisCache:
    def __init__(self, directory):
        self.directory = Path(directory)

    def path(self, n: int, variant: str) -> Path:
        return self.directory / f"basis-{variant}-{n}-v{__version__}.json"

    def list(self) -> List[dict]:
        if not self.directory.is_dir():
            return []
        out = []
        for p in sorted(self.directory.glob("basis-*.json")):
            entry = {"file": p.name}
            try:
                obj = json.loads(p.read_text())
                entry.update(n=obj["n"], variant=obj["variant"], dims=obj["dims"],
                             code_version=obj["code_version"])
            except (ValueError, KeyError):
                entry["corrupt"] = True
            out.append(entry)
        return out

    def evict(self, n: int, variant: str) -> bool:
        p = self.path(n, variant)
        _memory.pop((n, variant), None)
        if p.exists():
            p.unlink()
            return True
        return False

    def load(self, n: int, variant: str) -> Optional[GradedBasis]:
        p = self.path(n, variant)
        if not p.exists():
            return None
        try:
            basis = basis_from_json(json.loads(p.read_text()))
            if basis.n != n or basis.variant != variant:
                raise CorruptCacheEntry("key mismatch")
            return basis
        except (ValueError, CorruptCacheEntry) as exc:
            log.warning("evicting corrupt cache entry %s: %s", p, exc)
            p.unlink()
            return None

    def store(self, basis: GradedBasis) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        p = self.path(basis.n, basis.variant)
        tmp = p.with_suffix(".tmp")
        tmp.write_text(json.dumps(basis_to_json(basis), separators=(",", ":")))
        tmp.replace(p)
        return p

    def rebuild(self, n: int, variant: str, capacity: Optional[int] = None) -> GradedBasis:
        self.evict(n, variant)
        basis = compute_graded_basis(presentation(n, variant), capacity)
        self.store(basis)
        _memory[(n, variant)] = basis
        return basis


def default_cache_dir() -> Optional[str]:
    return os.environ.get(ENV_VAR) or None


def get_basis(n: int, variant: str, cache_dir=None, capacity: Optional[int] = None) -> GradedBasis:
    """Memoized basis; read from / written to ``cache_dir`` when given."""
    check_capacity(n, variant, capacity)
    key = (n, variant)
    cache = BasisCache(cache_dir) if cache_dir else None
    if key in _memory:
        if cache and not cache.path(n, variant).exists():
            cache.store(_memory[key])
        return _memory[key]
    basis = cache.load(n, variant) if cache else None
    if basis is None:
        basis = compute_graded_basis(presentation(n, variant), capacity)
        if cache:
            cache.store(basis)
    _memory[key] = basis
    return basis


def clear_memory() -> None:
    _memory.clear()
