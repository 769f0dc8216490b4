"""Involutive automorphisms of compact simple Lie algebras and their eigenspaces.

Only the tangent-level shadow of the group involutions is modelled: an
automorphism of the compact form, its +1 eigenspace ``k`` and its -1
eigenspace ``m``.  The inversion map of the group appears solely as the
linear map ``-id`` (it is not a Lie algebra automorphism).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chevalley import ConstructionError, LieAlgebra, _neg, extraspecial_pairs, structure_constants
from .linalg import Subspace, axpy, nullspace, sparse


class LinearMap:
    """A linear endomorphism of Q^n stored by the sparse images of basis vectors."""

    def __init__(self, images):
        self.images = tuple({k: c for k, c in img.items() if c} for img in images)

    @property
    def dim(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> LinearMap:
        return cls({i: 1} for i in range(n))

    def apply(self, v) -> dict:
        out: dict = {}
        for i, c in sparse(v).items():
            axpy(out, c, self.images[i])
        return out

    def __matmul__(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.apply(img) for img in other.images)

    def __neg__(self) -> LinearMap:
        return LinearMap({k: -c for k, c in img.items()} for img in self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearMap) and self.images == other.images

    __hash__ = None

    def trace(self):
        return sum((img.get(i, 0) for i, img in enumerate(self.images)), 0)

    @property
    def matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.dim
        return tuple(tuple(Fraction(self.images[j].get(i, 0)) for j in range(n))
                     for i in range(n))

    def eigenspace(self, eigenvalue) -> Subspace:
        """Exact kernel of (A - eigenvalue * id)."""
        n = self.dim
        rows: list[dict] = [{} for _ in range(n)]
        for j, img in enumerate(self.images):
            for i, c in img.items():
                rows[i][j] = c
        for i in range(n):
            v = rows[i].get(i, 0) - eigenvalue
            if v:
                rows[i][i] = v
            else:
                rows[i].pop(i, None)
        return nullspace(rows, n)

    def is_involutive(self) -> bool:
        return self @ self == LinearMap.identity(self.dim)


class Automorphism(LinearMap):
    def __init__(self, images, kind: str, descriptor):
        super().__init__(images)
        self.kind = kind
        self.descriptor = descriptor

    def __repr__(self):
        return f"Automorphism({self.kind}, {self.descriptor})"


def bracket_preservation_failures(L: LieAlgebra, A: LinearMap, pairs=None, limit: int = 5):
    """Basis pairs (i, j) with A[b_i, b_j] != [A b_i, A b_j]; exhaustive by default."""
    n = L.dimension
    if pairs is None:
        pairs = ((i, j) for i in range(n) for j in range(i + 1, n))
    bad = []
    for i, j in pairs:
        lhs = A.apply(L.bracket_sparse({i: 1}, {j: 1}))
        rhs = L.bracket_sparse(A.images[i], A.images[j])
        if lhs != rhs:
            bad.append((i, j))
            if len(bad) >= limit:
                break
    return bad


def _certify(L: LieAlgebra, A: Automorphism, involutive: bool = True) -> Automorphism:
    bad = bracket_preservation_failures(L, A, limit=1)
    if bad:
        raise ConstructionError(f"{A!r} does not preserve the bracket on basis pair {bad[0]}")
    if involutive and not A.is_involutive():
        raise ConstructionError(f"{A!r} is not involutive")
    return A


def inner_involution(L: LieAlgebra, coweight) -> Automorphism:
    """Ad(exp(pi i coweight)): +1 on the torus, (-1)^<alpha, coweight> on the alpha-plane."""
    if L.form != "compact":
        raise ValueError("inner_involution expects a compact-form algebra")
    w = tuple(int(x) for x in coweight)
    if len(w) != L.rank or any(x not in (0, 1) for x in w) or not any(w):
        raise ValueError(f"coweight must be a nonzero 0/1 vector of length {L.rank}")
    images = [None] * L.dimension
    for k in L.cartan_indices:
        images[k] = {k: 1}
    for coords, (xi, yi) in L.root_index.items():
        s = -1 if sum(c * x for c, x in zip(coords, w)) % 2 else 1
        images[xi] = {xi: s}
        images[yi] = {yi: s}
    return _certify(L, Automorphism(images, "inner-coweight", w))


def diagram_signs(rs, perm0) -> dict[tuple, int]:
    """Signs c_a with sigma(e_a) = c_a e_{pi a} for the pinned diagram automorphism.

    ``perm0`` is 0-based.  Propagated along extraspecial pairs from c = 1 on
    simple roots; negative roots carry the sign of their opposite.
    """
    N = structure_constants(rs)
    es = extraspecial_pairs(rs)
    r = rs.rank

    def image(c):
        out = [0] * r
        for i, x in enumerate(c):
            out[perm0[i]] = x
        return tuple(out)

    signs = {}
    for rt in rs.positive_roots:
        c = rt.coords
        if rt.height == 1:
            signs[c] = 1
            continue
        g, d = es[c]
        num = N[(image(g), image(d))]
        val = Fraction(signs[d] * num, N[(g, d)])
        if val not in (1, -1):
            raise ConstructionError(f"inconsistent diagram sign at {c}")
        signs[c] = int(val)
    for c in list(signs):
        signs[_neg(c)] = signs[c]
    return signs


def diagram_automorphism(L: LieAlgebra, perm) -> Automorphism:
    """Automorphism induced by a Dynkin diagram symmetry.

    ``perm`` lists Bourbaki labels: ``perm[i-1]`` is the image of node ``i``.
    """
    if L.form != "compact":
        raise ValueError("diagram_automorphism expects a compact-form algebra")
    rs = L.root_system
    perm = tuple(int(p) for p in perm)
    perm0 = tuple(p - 1 for p in perm)
    if sorted(perm0) != list(range(rs.rank)) or perm0 not in rs.cartan.symmetries():
        raise ValueError(f"{perm} is not a symmetry of the {L.name} Cartan matrix")
    signs = diagram_signs(rs, perm0)
    images = [None] * L.dimension
    for k in L.cartan_indices:
        images[k] = {L.cartan_indices[perm0[k]]: 1}
    for coords, (xi, yi) in L.root_index.items():
        img = [0] * rs.rank
        for i, x in enumerate(coords):
            img[perm0[i]] = x
        tx, ty = L.root_index[tuple(img)]
        s = signs[coords]
        images[xi] = {tx: s}
        images[yi] = {ty: s}
    involutive = all(perm0[perm0[i]] == i for i in range(rs.rank))
    return _certify(L, Automorphism(images, "diagram", perm), involutive=involutive)


def is_bracket_closed(L: LieAlgebra, S: Subspace) -> bool:
    basis = S.basis()
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if L.bracket_sparse(basis[a], basis[b]) not in S:
                return False
    return True


def fixed_subalgebra(L: LieAlgebra, A: LinearMap) -> Subspace:
    k = A.eigenspace(1)
    if not is_bracket_closed(L, k):
        raise ConstructionError("fixed space of the automorphism is not a subalgebra")
    return k


@dataclass(frozen=True, eq=False)
class SymmetricPair:
    algebra: LieAlgebra
    k: Subspace
    m: Subspace
    sigma: Automorphism


def cartan_relation_failures(L: LieAlgebra, k: Subspace, m: Subspace, limit: int = 5):
    """Basis pairs violating [k,k] in k, [k,m] in m, [m,m] in k."""
    kb, mb = k.basis(), m.basis()
    bad = []
    checks = [
        ("kk", kb, kb, k, True),
        ("km", kb, mb, m, False),
        ("mm", mb, mb, k, True),
    ]
    for name, left, right, target, sym in checks:
        for a, u in enumerate(left):
            for b in range(a + 1 if sym else 0, len(right)):
                if L.bracket_sparse(u, right[b]) not in target:
                    bad.append((name, a, b))
                    if len(bad) >= limit:
                        return bad
    return bad


def symmetric_pair(L: LieAlgebra, A: Automorphism) -> SymmetricPair:
    if not A.is_involutive():
        raise ValueError("symmetric_pair needs an involutive automorphism")
    k = A.eigenspace(1)
    m = A.eigenspace(-1)
    if k.dim + m.dim != L.dimension:
        raise ConstructionError("eigenspaces do not span the algebra")
    bad = cartan_relation_failures(L, k, m, limit=1)
    if bad:
        raise ConstructionError(f"Cartan relation {bad[0][0]} fails on basis pair {bad[0][1:]}")
    return SymmetricPair(L, k, m, A)


def cartan_embedding_codim(pair: SymmetricPair) -> int:
    """Codimension of the Cartan-embedded G/K, which equals dim k."""
    return pair.k.dim


@dataclass(frozen=True, eq=False)
class TangentReflections:
    d_sigma: LinearMap
    d_rho: LinearMap


def tangent_reflections(pair: SymmetricPair) -> TangentReflections:
    n = pair.algebra.dimension
    d_sigma = LinearMap(pair.sigma.images)
    d_theta = -LinearMap.identity(n)
    d_rho = d_theta @ d_sigma
    minus_id = -LinearMap.identity(n)
    if d_sigma @ d_rho != minus_id or d_rho @ d_sigma != minus_id:
        raise ConstructionError("d_sigma and d_rho do not compose to -id")
    if d_rho.eigenspace(1) != pair.m or d_rho.eigenspace(-1) != pair.k:
        raise ConstructionError("eigenspaces of d_rho are not (m, k)")
    return TangentReflections(d_sigma, d_rho)


def killing_orthogonal(B, k: Subspace, m: Subspace) -> bool:
    return all(B(u, v) == 0 for u in k.basis() for v in m.basis())


@lru_cache(maxsize=None)
def involution_from_descriptor(type_label: str, rank: int, kind: str, data: tuple) -> tuple:
    """Cached (algebra, automorphism, pair) for a manifest descriptor."""
    from .chevalley import compact

    L = compact(type_label, rank)
    if kind == "inner":
        A = inner_involution(L, data)
    elif kind == "diagram":
        A = diagram_automorphism(L, data)
    else:
        raise ValueError(f"unknown involution kind {kind!r}")
    return L, A, symmetric_pair(L, A)
