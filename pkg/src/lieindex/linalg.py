"""Exact rational linear algebra on sparse vectors.

Vectors are ``dict[int, Fraction]`` with no zero entries.  Dense sequences
are accepted wherever a vector is expected and converted on entry.
"""
from __future__ import annotations

from fractions import Fraction


def sparse(v) -> dict:
    if isinstance(v, dict):
        return {k: c for k, c in v.items() if c}
    return {k: c for k, c in enumerate(v) if c}


def dense(v: dict, n: int) -> list:
    out = [Fraction(0)] * n
    for k, c in v.items():
        out[k] = Fraction(c)
    return out


def axpy(y: dict, a, x: dict) -> None:
    """In place ``y += a * x``."""
    for k, c in x.items():
        s = y.get(k, 0) + a * c
        if s:
            y[k] = s
        else:
            y.pop(k, None)


def scale(v: dict, a) -> dict:
    return {k: a * c for k, c in v.items()} if a else {}


class Subspace:
    """A subspace of Q^n stored as the rows of its reduced echelon basis.

    Two equal subspaces have identical ``basis_matrix``; ``==`` compares
    the echelon rows directly.
    """

    __slots__ = ("ambient_dim", "_rows", "_pivots", "_pivot_set")

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: list[dict] = []
        self._pivots: list[int] = []
        self._pivot_set: dict[int, int] = {}

    @classmethod
    def span(cls, vectors, ambient_dim: int) -> Subspace:
        s = cls(ambient_dim)
        for v in vectors:
            s._insert(s._sparse(v))
        return s

    @classmethod
    def coordinate(cls, indices, ambient_dim: int) -> Subspace:
        """Span of the given standard basis vectors."""
        return cls.span(({i: Fraction(1)} for i in sorted(set(indices))), ambient_dim)

    @classmethod
    def whole(cls, ambient_dim: int) -> Subspace:
        return cls.coordinate(range(ambient_dim), ambient_dim)

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self._pivots)

    def basis(self) -> list[dict]:
        return [dict(r) for r in self._rows]

    @property
    def basis_matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(dense(r, self.ambient_dim)) for r in self._rows)

    def is_coordinate(self) -> bool:
        return all(len(r) == 1 for r in self._rows)

    def _check(self, v: dict) -> None:
        if v and (min(v) < 0 or max(v) >= self.ambient_dim):
            raise ValueError(f"vector index outside ambient dimension {self.ambient_dim}")

    def _sparse(self, v) -> dict:
        if not isinstance(v, dict) and len(v) != self.ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        return sparse(v)

    def residual(self, v) -> dict:
        """v minus its echelon projection; empty iff v lies in the subspace."""
        r = self._sparse(v)
        self._check(r)
        hits = [(p, r[p]) for p in r if p in self._pivot_set]
        for p, c in hits:
            axpy(r, -c, self._rows[self._pivot_set[p]])
        return r

    def __contains__(self, v) -> bool:
        return not self.residual(v)

    def contains(self, v) -> bool:
        return v in self

    def _insert(self, v: dict) -> bool:
        self._check(v)
        r = self.residual(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / Fraction(r[p])
        r = {k: Fraction(c) * inv for k, c in r.items()}
        for row in self._rows:
            c = row.get(p)
            if c:
                axpy(row, -c, r)
        pos = 0
        while pos < len(self._pivots) and self._pivots[pos] < p:
            pos += 1
        self._rows.insert(pos, r)
        self._pivots.insert(pos, p)
        self._pivot_set = {q: i for i, q in enumerate(self._pivots)}
        return True

    def add(self, v) -> Subspace:
        out = self.copy()
        out._insert(sparse(v))
        return out

    def copy(self) -> Subspace:
        out = Subspace(self.ambient_dim)
        out._rows = [dict(r) for r in self._rows]
        out._pivots = list(self._pivots)
        out._pivot_set = dict(self._pivot_set)
        return out

    def __add__(self, other: Subspace) -> Subspace:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimensions differ")
        out = self.copy()
        for r in other._rows:
            out._insert(r)
        return out

    def issubset(self, other: Subspace) -> bool:
        return all(r in other for r in self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self._pivots == other._pivots
                and all(a == b for a, b in zip(self._rows, other._rows)))

    def __hash__(self):
        return hash((self.ambient_dim, tuple(self._pivots)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


def rref_rows(rows, ncols: int) -> Subspace:
    """Row space of a matrix, echelon-reduced."""
    return Subspace.span(rows, ncols)


def nullspace(rows, ncols: int) -> Subspace:
    """Kernel {x : M x = 0} of the matrix with the given (sparse or dense) rows."""
    rs = rref_rows(rows, ncols)
    piv = rs._pivot_set
    vecs = []
    for f in range(ncols):
        if f in piv:
            continue
        v = {f: Fraction(1)}
        for p, i in piv.items():
            c = rs._rows[i].get(f)
            if c:
                v[p] = -c
        vecs.append(v)
    return Subspace.span(vecs, ncols)


def is_symmetric(mat) -> bool:
    n = len(mat)
    return all(len(row) == n for row in mat) and all(
        mat[i][j] == mat[j][i] for i in range(n) for j in range(i + 1, n))


def is_positive_definite(mat) -> bool:
    """Exact test: symmetric elimination without pivoting, all pivots > 0."""
    if not is_symmetric(mat):
        raise ValueError("matrix is not symmetric")
    n = len(mat)
    rows = [{j: Fraction(x) for j, x in enumerate(row) if x} for row in mat]
    for k in range(n):
        d = rows[k].get(k, 0)
        if d <= 0:
            return False
        pivot_row = {j: c for j, c in rows[k].items() if j > k}
        for i in range(k + 1, n):
            c = rows[i].get(k)
            if c:
                axpy(rows[i], -c / d, pivot_row)
                rows[i].pop(k, None)
    return True


def pivots_ldl(mat) -> list[Fraction]:
    """Diagonal pivots of the symmetric elimination (stops at a zero pivot)."""
    n = len(mat)
    rows = [{j: Fraction(x) for j, x in enumerate(row) if x} for row in mat]
    out = []
    for k in range(n):
        d = rows[k].get(k, Fraction(0))
        out.append(d)
        if d == 0:
            break
        pivot_row = {j: c for j, c in rows[k].items() if j > k}
        for i in range(k + 1, n):
            c = rows[i].get(k)
            if c:
                axpy(rows[i], -c / d, pivot_row)
                rows[i].pop(k, None)
    return out
