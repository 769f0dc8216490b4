"""The versioned manifest tying table rows to concrete constructions.

``data/manifest.json`` has three sections:

``involutions``
    id -> {type, rank, kind: inner|diagram, coweight | perm, sigma}
``subalgebras``
    id -> {table3_row, type, rank (int or expression in r), route,
    node | perm | swap, verify (admissible-rank expression, optional)}
``tangent_models``
    list of {rows, sigma, model, at (optional fixed parameters)} where
    ``model`` is ``involution:<id>:m`` or ``subalgebra:<id>``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .tables import DEFAULT_RANK_CEILING, TableRow, evaluate, load_tables

FORMAT_VERSION = 1


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class InvolutionEntry:
    entry_id: str
    type_label: str
    rank: int
    kind: str
    data: tuple[int, ...]
    sigma: str
    reflective_index_row: str | None = None


@dataclass(frozen=True)
class SubalgebraEntry:
    row_id: str
    table3_row: str
    type_label: str
    rank_expr: str
    route: str
    raw: dict = field(compare=False, hash=False)
    expected_formula: str = ""
    verify: str | None = None

    @property
    def symbolic(self) -> bool:
        return "r" in str(self.rank_expr)

    def rank_at(self, env: dict) -> int:
        return int(evaluate(str(self.rank_expr), env))

    def admits(self, rank: int) -> bool:
        if not self.symbolic:
            return rank == int(self.rank_expr)
        return bool(evaluate(self.verify, {"r": rank})) if self.verify else True

    def ranks(self, ceiling: int = DEFAULT_RANK_CEILING) -> list[int]:
        if not self.symbolic:
            return [int(self.rank_expr)]
        return [r for r in range(1, ceiling + 1) if self.admits(r)]

    def descriptor_at(self, rank: int):
        env = {"r": rank}
        if "node" in self.raw:
            return int(evaluate(str(self.raw["node"]), env))
        if "perm" in self.raw:
            return tuple(self.raw["perm"])
        if "swap" in self.raw:
            a, b = (int(evaluate(str(x), env)) for x in self.raw["swap"])
            perm = list(range(1, rank + 1))
            perm[a - 1], perm[b - 1] = b, a
            return tuple(perm)
        raise ManifestError(f"{self.row_id}: no node/perm/swap descriptor")

    def expected_codim(self, rank: int) -> int:
        return int(evaluate(self.expected_formula, {"r": rank}))


@dataclass(frozen=True)
class TangentModel:
    rows: tuple[str, ...]
    sigma: str
    model: str
    at: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def source(self) -> str:
        return self.model.split(":")[0]

    @property
    def ref(self) -> str:
        return self.model.split(":")[1]


@dataclass
class Manifest:
    involutions: dict[str, InvolutionEntry]
    subalgebras: dict[str, SubalgebraEntry]
    tangent_models: list[TangentModel]
    rows: dict[str, TableRow]

    @property
    def subalgebra_rows(self) -> list[SubalgebraEntry]:
        return list(self.subalgebras.values())


def parse_manifest(doc: dict, rows=None) -> Manifest:
    if doc.get("format_version") != FORMAT_VERSION:
        raise ManifestError(f"unsupported manifest format {doc.get('format_version')!r}")
    rows = rows if rows is not None else load_tables()
    by_id = {r.row_id: r for r in rows}
    invs = {}
    for key, e in doc["involutions"].items():
        data = e.get("coweight") if e["kind"] == "inner" else e.get("perm")
        if data is None:
            raise ManifestError(f"involution {key}: missing coweight/perm")
        invs[key] = InvolutionEntry(key, e["type"], int(e["rank"]), e["kind"], tuple(data),
                                    e["sigma"], e.get("reflective_index_row"))
    subs = {}
    for key, e in doc["subalgebras"].items():
        t3 = e["table3_row"]
        if t3 not in by_id:
            raise ManifestError(f"subalgebra {key}: unknown table row {t3}")
        subs[key] = SubalgebraEntry(key, t3, e["type"], str(e["rank"]), e["route"], dict(e),
                                    by_id[t3].value_formula, e.get("verify"))
    models = []
    for e in doc["tangent_models"]:
        tm = TangentModel(tuple(e["rows"]), e["sigma"], e["model"], dict(e.get("at", {})))
        table = invs if tm.source == "involution" else subs
        if tm.source not in ("involution", "subalgebra") or tm.ref not in table:
            raise ManifestError(f"tangent model {tm.model}: unknown reference")
        for r in tm.rows:
            if r not in by_id:
                raise ManifestError(f"tangent model {tm.model}: unknown row {r}")
        models.append(tm)
    return Manifest(invs, subs, models, by_id)


@lru_cache(maxsize=None)
def _default_manifest() -> Manifest:
    text = resources.files("lieindex").joinpath("data/manifest.json").read_text()
    return parse_manifest(json.loads(text))


def load_manifest(path=None) -> Manifest:
    if path is None:
        return _default_manifest()
    with open(path) as fh:
        return parse_manifest(json.load(fh))
