"""Explicit maximal subalgebras of compact simple Lie algebras.

Three construction routes:

* ``borel-de-siebenthal``: delete one node of the extended Dynkin diagram,
  keep the full torus and the root vectors of the closed subsystem
  generated by the remaining nodes;
* ``levi``: delete one ordinary node, keep the torus and all root vectors
  whose roots do not involve that node;
* ``diagram-fixed``: fixed points of a diagram involution.

Maximality is not checked; bracket closure and codimension are.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .chevalley import LieAlgebra, compact
from .involution import diagram_automorphism, fixed_subalgebra
from .linalg import Subspace, nullspace
from .rootsystem import (RootSystem, cartan_type_signature, extended_node_root,
                         root_subsystem_closure, subsystem_cartan_matrix)


@dataclass(frozen=True, eq=False)
class SubalgebraRecord:
    ambient: str
    construction: str
    descriptor: object
    subspace: Subspace
    codim: int
    proper: bool = True
    rank: int | None = None
    components: tuple[str, ...] = ()
    center_dim: int | None = None
    roots: frozenset = field(default=frozenset(), repr=False)

    @property
    def dim(self) -> int:
        return self.subspace.dim


def _algebra_for(rs: RootSystem, algebra: LieAlgebra | None) -> LieAlgebra:
    L = algebra or compact(rs.type_label, rs.rank)
    if L.form != "compact":
        raise ValueError("subalgebra constructions live in the compact form")
    return L


def regular_subspace(L: LieAlgebra, roots, with_torus: bool = True) -> Subspace:
    """Torus plus the (x_a, y_a) planes of the given roots."""
    idx = list(L.cartan_indices) if with_torus else []
    for rt in roots:
        if rt.is_positive:
            idx.extend(L.root_index[rt.coords])
    return Subspace.coordinate(idx, L.dimension)


def subalgebra_witness(L: LieAlgebra, S: Subspace):
    """First basis pair (a, b) of S with [s_a, s_b] outside S, or None."""
    if S.ambient_dim != L.dimension:
        raise ValueError(f"subspace lives in dimension {S.ambient_dim}, algebra has {L.dimension}")
    basis = S.basis()
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if L.bracket_sparse(basis[a], basis[b]) not in S:
                return (a, b)
    return None


def is_subalgebra(L: LieAlgebra, S: Subspace) -> bool:
    return subalgebra_witness(L, S) is None


def _certified(L, S):
    w = subalgebra_witness(L, S)
    if w is not None:
        raise RuntimeError(f"constructed subspace not bracket-closed at basis pair {w}")


def borel_de_siebenthal(rs: RootSystem, removed_node: int, *,
                        algebra: LieAlgebra | None = None) -> SubalgebraRecord:
    if not 0 <= removed_node <= rs.rank:
        raise ValueError(f"extended node {removed_node} outside 0..{rs.rank}")
    L = _algebra_for(rs, algebra)
    gens = [extended_node_root(rs, j) for j in range(rs.rank + 1) if j != removed_node]
    sub = root_subsystem_closure(rs, gens)
    S = regular_subspace(L, sub)
    _certified(L, S)
    comps = tuple(cartan_type_signature(subsystem_cartan_matrix(rs, sub))) if sub else ()
    return SubalgebraRecord(L.name, "borel-de-siebenthal", removed_node, S,
                            L.dimension - S.dim, proper=S.dim < L.dimension,
                            rank=rs.rank, components=comps, center_dim=0, roots=sub)


def center(L: LieAlgebra, S: Subspace) -> Subspace:
    """Centre of the subalgebra S, as a subspace of the ambient algebra."""
    basis = S.basis()
    d = len(basis)
    # unknowns a_i with [sum a_i s_i, s_j] = 0 for every j
    rows: dict = {}
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            for k, c in L.bracket_sparse(u, v).items():
                rows.setdefault((j, k), {})[i] = c
    ker = nullspace(list(rows.values()), d)
    vecs = []
    for coeffs in ker.basis():
        z: dict = {}
        for i, a in coeffs.items():
            for k, c in basis[i].items():
                z[k] = z.get(k, 0) + a * c
        vecs.append(z)
    return Subspace.span(vecs, L.dimension)


def levi_subalgebra(rs: RootSystem, removed_node: int, *,
                    algebra: LieAlgebra | None = None) -> SubalgebraRecord:
    if not 1 <= removed_node <= rs.rank:
        raise ValueError(f"node {removed_node} outside 1..{rs.rank}")
    L = _algebra_for(rs, algebra)
    sub = frozenset(rt for rt in rs.roots if rt.coords[removed_node - 1] == 0)
    S = regular_subspace(L, sub)
    _certified(L, S)
    comps = tuple(cartan_type_signature(subsystem_cartan_matrix(rs, sub))) if sub else ()
    z = center(L, S)
    return SubalgebraRecord(L.name, "levi", removed_node, S, L.dimension - S.dim,
                            rank=rs.rank, components=comps, center_dim=z.dim, roots=sub)


def diagram_fixed_subalgebra(L: LieAlgebra, perm) -> SubalgebraRecord:
    A = diagram_automorphism(L, perm)
    S = fixed_subalgebra(L, A)
    orbits = {frozenset((i, A.descriptor[i - 1])) for i in range(1, L.rank + 1)}
    return SubalgebraRecord(L.name, "diagram-fixed", tuple(perm), S, L.dimension - S.dim,
                            rank=len(orbits))


def construct(route: str, type_label: str, rank: int, descriptor) -> SubalgebraRecord:
    """Dispatch on a manifest route name."""
    L = compact(type_label, rank)
    rs = L.root_system
    if route == "borel-de-siebenthal":
        return borel_de_siebenthal(rs, int(descriptor), algebra=L)
    if route == "levi":
        return levi_subalgebra(rs, int(descriptor), algebra=L)
    if route == "diagram-fixed":
        return diagram_fixed_subalgebra(L, descriptor)
    raise ValueError(f"unknown construction route {route!r}")


@dataclass
class Table3Entry:
    row_id: str
    algebra: str
    rank: int
    construction: str
    descriptor: object
    constructed_codim: int | None
    expected: int
    match: bool
    components: tuple = ()
    error: str | None = None


def verify_table3(type_label: str, rank: int, manifest=None) -> list[Table3Entry]:
    """Run the manifest's construction(s) for an ambient type and compare with d(g)."""
    from .manifest import load_manifest

    manifest = manifest or load_manifest()
    out = []
    for row in manifest.subalgebra_rows:
        if row.type_label != type_label.upper():
            continue
        if not row.admits(rank):
            continue
        desc = row.descriptor_at(rank)
        expected = row.expected_codim(rank)
        try:
            rec = construct(row.route, row.type_label, rank, desc)
            out.append(Table3Entry(row.row_id, rec.ambient, rank, row.route, desc,
                                   rec.codim, expected, rec.codim == expected and rec.proper,
                                   rec.components))
        except Exception as exc:  # reported, never silent
            out.append(Table3Entry(row.row_id, f"{type_label}{rank}", rank, row.route, desc,
                                   None, expected, False, (), repr(exc)))
    return out
