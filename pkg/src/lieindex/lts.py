"""Lie triple systems: the infinitesimal test for totally geodesic submanifolds.

A subspace S of the compact form is the tangent space at the identity of a
totally geodesic submanifold iff [[S, S], S] is contained in S.  A passing
check certifies the germ only; completeness and embeddedness are not
addressed here.  Random searches are consistency evidence, never a proof
that no low-codimension triple system exists.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .chevalley import LieAlgebra
from .linalg import Subspace
from .tables import DEFAULT_RANK_CEILING

SAMPLE_BOUND = 9


@dataclass(frozen=True, eq=False)
class LtsReport:
    subspace: Subspace
    passed: bool
    witness: tuple[int, int, int] | None = None
    checked: int = 0


def triple_bracket(L: LieAlgebra, u: dict, v: dict, w: dict) -> dict:
    return L.bracket_sparse(L.bracket_sparse(u, v), w)


def _find_witness(L, basis, S, k):
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if triple_bracket(L, basis[i], basis[j], basis[k]) not in S:
                return (i, j, k)
    return None


def is_lie_triple_system(L: LieAlgebra, S: Subspace, *, method: str = "span") -> LtsReport:
    """Exact test of [[S,S],S] in S.

    ``method="triples"`` walks every basis triple (i < j, any k) in order
    and reports the first failure.  ``method="span"`` reduces the pairwise
    brackets to a basis of [S,S] first and tests [[S,S],S] on that basis;
    by trilinearity this covers the same triples, and a failure is traced
    back to a genuine basis triple.
    """
    if S.ambient_dim != L.dimension:
        raise ValueError(f"subspace lives in dimension {S.ambient_dim}, algebra has {L.dimension}")
    basis = S.basis()
    d = len(basis)
    if method == "triples":
        checked = 0
        for i in range(d):
            for j in range(i + 1, d):
                uv = L.bracket_sparse(basis[i], basis[j])
                if not uv:
                    checked += d
                    continue
                for k in range(d):
                    checked += 1
                    if L.bracket_sparse(uv, basis[k]) not in S:
                        return LtsReport(S, False, (i, j, k), checked)
        return LtsReport(S, True, None, checked)
    if method != "span":
        raise ValueError(f"unknown method {method!r}")
    T = Subspace(L.dimension)
    for i in range(d):
        for j in range(i + 1, d):
            T._insert(L.bracket_sparse(basis[i], basis[j]))
    checked = 0
    for t in T.basis():
        for k in range(d):
            checked += 1
            if L.bracket_sparse(t, basis[k]) not in S:
                return LtsReport(S, False, _find_witness(L, basis, S, k), checked)
    return LtsReport(S, True, None, checked)


def witness_fails(L: LieAlgebra, S: Subspace, witness) -> bool:
    """Independent re-evaluation of a reported failing triple."""
    basis = S.basis()
    i, j, k = witness
    return triple_bracket(L, basis[i], basis[j], basis[k]) not in S


def random_subspace(L: LieAlgebra, codim: int, seed) -> Subspace:
    """Span of random integer vectors (entries uniform in [-9, 9]), echelon-reduced."""
    n = L.dimension
    if not 0 < codim < n:
        raise ValueError(f"codim must lie strictly between 0 and {n}")
    rng = np.random.default_rng(seed)
    target = n - codim
    S = Subspace(n)
    while S.dim < target:
        v = rng.integers(-SAMPLE_BOUND, SAMPLE_BOUND + 1, size=n)
        S._insert({i: int(c) for i, c in enumerate(v) if c})
    return S


@dataclass
class SearchReport:
    codim: int
    trials: int
    seed: int
    successes: int = 0
    success_examples: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "codim": self.codim, "trials": self.trials, "seed": self.seed,
            "successes": self.successes,
            "success_examples": [[[str(x) for x in row] for row in s.basis_matrix]
                                 for s in self.success_examples],
        }


def search_lts(L: LieAlgebra, codim: int, trials: int, seed: int = 0,
               keep: int = 3) -> SearchReport:
    """Sample ``trials`` subspaces; trial t uses the seed sequence (seed, t)."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rep = SearchReport(codim, trials, seed)
    for t in range(trials):
        S = random_subspace(L, codim, (seed, t))
        if is_lie_triple_system(L, S).passed:
            rep.successes += 1
            if len(rep.success_examples) < keep:
                rep.success_examples.append(S)
    return rep


# ---------------------------------------------------------------------------
# tangent models of the table rows

def tangent_model_subspace(tm, env: dict, manifest):
    """(algebra, subspace) for a manifest tangent model at parameters ``env``."""
    from .chevalley import compact
    from .involution import involution_from_descriptor
    from .subalgebra import construct

    if tm.source == "involution":
        e = manifest.involutions[tm.ref]
        L, _, pair = involution_from_descriptor(e.type_label, e.rank, e.kind, e.data)
        return L, pair.m
    e = manifest.subalgebras[tm.ref]
    env = {**env, **tm.at}
    rank = e.rank_at(env)
    rec = construct(e.route, e.type_label, rank, e.descriptor_at(rank))
    return compact(e.type_label, rank), rec.subspace


def verify_sigma_tangents(manifest=None, ceiling: int = DEFAULT_RANK_CEILING,
                          rows: set | None = None) -> list[dict]:
    """LTS certification and codimension check for every tangent model of Tables 1-2."""
    from .manifest import load_manifest

    manifest = manifest or load_manifest()
    out = []
    for tm in manifest.tangent_models:
        for row_id in tm.rows:
            if rows is not None and row_id not in rows:
                continue
            row = manifest.rows[row_id]
            envs = [dict(tm.at)] if tm.at else row.assignments(ceiling)
            for env in envs:
                rec = {"row": row.label(env if not tm.at else {}), "sigma": tm.sigma,
                       "model": tm.model, "params": env}
                try:
                    L, S = tangent_model_subspace(tm, env if not tm.at else {}, manifest)
                    rep = is_lie_triple_system(L, S)
                    expected = row.value({} if tm.at else env)
                    rec.update(dim=L.dimension, model_dim=S.dim, codim=S.codim,
                               expected_codim=expected, lts=rep.passed, witness=rep.witness,
                               ok=rep.passed and S.codim == expected)
                except Exception as exc:
                    rec.update(ok=False, error=repr(exc))
                out.append(rec)
    return out
