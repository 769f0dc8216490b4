"""Chevalley bases, the compact real form and the Killing form.

Structure constants follow Carter's relations for a Chevalley basis:
``[e_a, e_-a] = h_a`` (the coroot), ``N_{-a,-b} = -N_{a,b}`` and
``N_{a,b} = +(p+1)`` on extraspecial pairs, where the extraspecial pair of
a positive root ``xi`` is ``(a_i, xi - a_i)`` for the first simple root
``a_i`` in the root order with ``xi - a_i`` a root.  Every other constant
is forced by the four-root relation and the three-root relation, and the
result is certified by the Jacobi identity rather than trusted.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np
import scipy.sparse as sp

from .linalg import axpy, dense, is_positive_definite, is_symmetric, sparse
from .rootsystem import Root, RootSystem, root_system


class ConstructionError(RuntimeError):
    """Internal consistency failure; indicates a bug, not bad input."""


def _neg(c):
    return tuple(-x for x in c)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _int(q) -> int:
    q = Fraction(q)
    if q.denominator != 1:
        raise ConstructionError(f"non-integral structure constant {q}")
    return int(q)


def extraspecial_pairs(rs: RootSystem) -> dict[tuple, tuple[tuple, tuple]]:
    """Map each non-simple positive root to its extraspecial pair (coords)."""
    simples = sorted(rs.simple_roots)  # root order restricted to height 1
    out = {}
    for xi in rs.positive_roots:
        if xi.height == 1:
            continue
        for a in simples:
            rest = _sub(xi.coords, a.coords)
            if rs.is_root(rest):
                out[xi.coords] = (a.coords, rest)
                break
        else:
            raise ConstructionError(f"no simple decomposition of {xi}")
    return out


@lru_cache(maxsize=None)
def structure_constants(rs: RootSystem) -> dict[tuple[tuple, tuple], int]:
    """N_{a,b} for every ordered pair of roots whose sum is a root."""
    es = extraspecial_pairs(rs)
    cache: dict = {}

    def positive(c):
        return sum(c) > 0

    def n2(c):
        return rs.norm2(c)

    def N(a, b):
        key = (a, b)
        if key in cache:
            return cache[key]
        s = _add(a, b)
        if positive(a) and positive(b):
            g, d = es[s]
            p1 = rs.string_below(g, d) + 1
            if (a, b) == (g, d):
                val = Fraction(p1)
            elif (a, b) == (d, g):
                val = Fraction(-p1)
            else:
                total = Fraction(0)
                da, ga = _sub(d, a), _sub(g, a)
                if rs.is_root(da):
                    total += N(d, _neg(a)) * N(g, _neg(b)) / n2(da)
                if rs.is_root(ga):
                    total += N(_neg(a), g) * N(d, _neg(b)) / n2(ga)
                n_neg = -n2(s) / p1 * total
                val = -n_neg
        elif not positive(a) and not positive(b):
            val = -N(_neg(a), _neg(b))
        elif positive(a):
            if positive(s):
                val = -n2(s) / n2(a) * N(_neg(b), s)
            else:
                val = n2(s) / n2(b) * N(_neg(s), a)
        else:
            val = -N(b, a)
        cache[key] = val
        return val

    out = {}
    for a in rs.roots:
        for b in rs.roots:
            s = a + b
            if rs.is_root(s):
                v = _int(N(a.coords, b.coords))
                p1 = rs.string_below(a, b) + 1
                if abs(v) != p1:
                    raise ConstructionError(f"|N{a.coords, b.coords}| = {abs(v)} != p+1 = {p1}")
                out[(a.coords, b.coords)] = v
    return out


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """A real or complex Lie algebra on a finite basis with exact structure constants.

    ``brackets[(i, j)]`` is a tuple of ``(k, c)`` with ``[b_i, b_j] = sum c b_k``;
    pairs with zero bracket are absent.
    """
    dimension: int
    basis_labels: tuple[str, ...]
    brackets: dict
    form: str
    root_system: RootSystem
    cartan_indices: tuple[int, ...]
    # chevalley: root coords -> index of e_alpha; compact: positive root coords -> (x, y)
    root_index: dict = field(repr=False)
    _ad_cache: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def name(self) -> str:
        return f"{self.root_system.type_label}{self.rank}"

    def basis_bracket(self, i: int, j: int):
        return self.brackets.get((i, j), ())

    def bracket_sparse(self, u: dict, v: dict) -> dict:
        out: dict = {}
        br = self.brackets
        for i, a in u.items():
            for j, b in v.items():
                res = br.get((i, j))
                if res:
                    ab = a * b
                    for k, c in res:
                        s = out.get(k, 0) + ab * c
                        if s:
                            out[k] = s
                        else:
                            del out[k]
        return out

    def ad(self, i: int) -> dict:
        """Sparse columns of ad(b_i): {l: {k: c}} with [b_i, b_l] = sum_k c b_k."""
        if i not in self._ad_cache:
            cols = {}
            for l in range(self.dimension):
                res = self.brackets.get((i, l))
                if res:
                    cols[l] = dict(res)
            self._ad_cache[i] = cols
        return self._ad_cache[i]

    def unit(self, i: int) -> dict:
        return {i: 1}


def bracket(L: LieAlgebra, u, v) -> list:
    """Bracket of two dense coefficient vectors."""
    if len(u) != L.dimension or len(v) != L.dimension:
        raise ValueError(f"vectors must have length {L.dimension}")
    return dense(L.bracket_sparse(sparse(u), sparse(v)), L.dimension)


def _finish(table: dict) -> dict:
    out = {}
    for key, vec in table.items():
        vec = {k: c for k, c in vec.items() if c}
        if vec:
            out[key] = tuple(sorted((k, _int(c)) for k, c in vec.items()))
    return out


def chevalley_algebra(rs: RootSystem) -> LieAlgebra:
    r = rs.rank
    a = rs.cartan.entries
    roots = rs.roots
    n = r + len(roots)
    e = {rt.coords: r + k for k, rt in enumerate(roots)}
    labels = [f"h{i + 1}" for i in range(r)] + [
        "e" + ("-" if not rt.is_positive else "") + str(tuple(abs(c) for c in rt.coords))
        for rt in roots]
    Nab = structure_constants(rs)
    table: dict = {}
    for rt in roots:
        c = rt.coords
        for i in range(r):
            w = sum(c[j] * a[j][i] for j in range(r))  # alpha(h_i)
            if w:
                table[(i, e[c])] = {e[c]: w}
                table[(e[c], i)] = {e[c]: -w}
        cor = rs.coroot_coords(rt)
        table[(e[c], e[_neg(c)])] = {j: x for j, x in enumerate(cor) if x}
    for (x, y), v in Nab.items():
        table[(e[x], e[y])] = {e[_add(x, y)]: v}
    return LieAlgebra(n, tuple(labels), _finish(table), "chevalley", rs,
                      tuple(range(r)), dict(e))


# Gaussian rationals as (re, im) pairs
def _gmul(p, q):
    return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0])


def compact_form(L: LieAlgebra) -> LieAlgebra:
    """Compact real form on t_k = i h_k, x_a = e_a - e_-a, y_a = i(e_a + e_-a)."""
    if L.form != "chevalley":
        raise ValueError("compact_form expects a Chevalley-form algebra")
    rs = L.root_system
    r = rs.rank
    pos = rs.positive_roots
    n = r + 2 * len(pos)
    xy = {}
    labels = [f"t{i + 1}" for i in range(r)]
    for k, rt in enumerate(pos):
        xy[rt.coords] = (r + 2 * k, r + 2 * k + 1)
        labels += [f"x{rt.coords}", f"y{rt.coords}"]

    one, mone, i_, mi = (1, 0), (-1, 0), (0, 1), (0, -1)
    # compact basis element -> {chevalley index: gaussian coefficient}
    expand = []
    for k in range(r):
        expand.append({k: i_})
    for rt in pos:
        ep, em = L.root_index[rt.coords], L.root_index[_neg(rt.coords)]
        expand.append({ep: one, em: mone})
        expand.append({ep: i_, em: i_})

    chev_root = {L.root_index[rt.coords]: rt.coords for rt in pos}
    chev_root.update({L.root_index[_neg(rt.coords)]: rt.coords for rt in pos})

    def to_compact(vec: dict) -> dict:
        out = {}
        done = set()
        for k, c in vec.items():
            if k < r:
                # h_k = -i t_k
                re, im = _gmul(c, mi)
                if im:
                    raise ConstructionError("non-real compact coefficient")
                if re:
                    out[k] = re
                continue
            root = chev_root[k]
            if root in done:
                continue
            done.add(root)
            a = vec.get(L.root_index[root], (0, 0))
            b = vec.get(L.root_index[_neg(root)], (0, 0))
            # e_a = (x - i y)/2, e_-a = (-x - i y)/2
            xc = (Fraction(a[0] - b[0], 2), Fraction(a[1] - b[1], 2))
            yc = _gmul((Fraction(a[0] + b[0], 2), Fraction(a[1] + b[1], 2)), mi)
            if xc[1] or yc[1]:
                raise ConstructionError("non-real compact coefficient")
            xi, yi = xy[root]
            if xc[0]:
                out[xi] = xc[0]
            if yc[0]:
                out[yi] = yc[0]
        return out

    owners: dict[int, list[int]] = {}
    for p, exp in enumerate(expand):
        for j in exp:
            owners.setdefault(j, []).append(p)
    partners: dict[int, set] = {}
    for (i, j) in L.brackets:
        partners.setdefault(i, set()).update(owners[j])

    table = {}
    for p in range(n):
        candidates = set()
        for i in expand[p]:
            candidates |= partners.get(i, set())
        for q in sorted(c for c in candidates if c > p):
            acc: dict = {}
            for i, ci in expand[p].items():
                for j, cj in expand[q].items():
                    res = L.brackets.get((i, j))
                    if not res:
                        continue
                    f = _gmul(ci, cj)
                    for k, c in res:
                        old = acc.get(k, (0, 0))
                        acc[k] = (old[0] + f[0] * c, old[1] + f[1] * c)
            acc = {k: v for k, v in acc.items() if v != (0, 0)}
            if not acc:
                continue
            vec = to_compact(acc)
            if vec:
                table[(p, q)] = vec
                table[(q, p)] = {k: -c for k, c in vec.items()}
    return LieAlgebra(n, tuple(labels), _finish(table), "compact", rs,
                      tuple(range(r)), xy)


@lru_cache(maxsize=None)
def chevalley(type_label: str, rank: int) -> LieAlgebra:
    return chevalley_algebra(root_system(type_label, rank))


@lru_cache(maxsize=None)
def compact(type_label: str, rank: int) -> LieAlgebra:
    return compact_form(chevalley(type_label, rank))


@dataclass(frozen=True)
class BilinearForm:
    matrix: tuple[tuple[int, ...], ...]

    def __call__(self, u, v):
        u, v = sparse(u), sparse(v)
        return sum((a * self.matrix[i][j] * b for i, a in u.items() for j, b in v.items()),
                   Fraction(0))


def structure_tensor(L: LieAlgebra) -> sp.csr_matrix:
    """Rows i, columns l*n + k, entry = coefficient of b_k in [b_i, b_l]."""
    n = L.dimension
    rows, cols, vals = [], [], []
    for (i, l), res in L.brackets.items():
        for k, c in res:
            rows.append(i)
            cols.append(l * n + k)
            vals.append(c)
    return sp.csr_matrix((np.array(vals, dtype=np.int64), (rows, cols)), shape=(n, n * n))


def killing_form(L: LieAlgebra) -> BilinearForm:
    """B_ij = trace(ad b_i ad b_j), exact in int64 (all constants are integers)."""
    n = L.dimension
    M = structure_tensor(L).tocoo()
    # N[j, l*n + k] = M[j, k*n + l]
    l, k = np.divmod(M.col, n)
    Nt = sp.csr_matrix((M.data, (M.row, k * n + l)), shape=(n, n * n))
    B = (M.tocsr() @ Nt.T).toarray()
    bound = int(np.abs(M.data).max(initial=0)) ** 2 * n * n
    if bound >= 2 ** 62:
        raise ConstructionError("Killing form entries could overflow int64")
    return BilinearForm(tuple(tuple(int(x) for x in row) for row in B))


def killing_form_reference(L: LieAlgebra) -> list[list[Fraction]]:
    """Slow oracle: explicit dense adjoint matrices and traces."""
    n = L.dimension
    ads = []
    for i in range(n):
        m = [[Fraction(0)] * n for _ in range(n)]
        for l, col in L.ad(i).items():
            for k, c in col.items():
                m[k][l] = Fraction(c)
        ads.append(m)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = sum(ads[i][k][l] * ads[j][l][k] for k in range(n) for l in range(n)
                    if ads[i][k][l] and ads[j][l][k])
            out[i][j] = out[j][i] = t
    return out


def is_negative_definite(B: BilinearForm) -> bool:
    m = B.matrix
    if not is_symmetric(m):
        raise ValueError("bilinear form is not symmetric")
    return is_positive_definite([[-x for x in row] for row in m])


# ---------------------------------------------------------------------------
# certification

@dataclass
class IdentityCheck:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def jacobiator(L: LieAlgebra, i: int, j: int, k: int) -> dict:
    bi, bj, bk = {i: 1}, {j: 1}, {k: 1}
    out = L.bracket_sparse(L.bracket_sparse(bi, bj), bk)
    axpy(out, 1, L.bracket_sparse(L.bracket_sparse(bj, bk), bi))
    axpy(out, 1, L.bracket_sparse(L.bracket_sparse(bk, bi), bj))
    return out


def basis_triples(L: LieAlgebra, *, exhaustive: bool, samples: int = 100_000, seed: int = 0):
    """Unordered basis triples: all of them, or every triple touching the
    Cartan part plus a seeded sample of the rest."""
    n = L.dimension
    if exhaustive:
        yield from combinations(range(n), 3)
        return
    cart = set(L.cartan_indices)
    for h in L.cartan_indices:
        for j, k in combinations(range(n), 2):
            if h in (j, k) or (j in cart and j < h) or (k in cart and k < h):
                continue
            yield (h, j, k)
    rng = random.Random(seed)
    for _ in range(samples):
        yield tuple(rng.randrange(n) for _ in range(3))


def check_jacobi(L: LieAlgebra, *, exhaustive: bool | None = None, samples: int = 100_000,
                 seed: int = 0, max_failures: int = 10) -> IdentityCheck:
    if exhaustive is None:
        exhaustive = L.dimension <= 52
    res = IdentityCheck(f"jacobi[{L.name},{L.form}]")
    for i, j, k in basis_triples(L, exhaustive=exhaustive, samples=samples, seed=seed):
        res.checked += 1
        if jacobiator(L, i, j, k):
            res.failures.append((i, j, k))
            if len(res.failures) >= max_failures:
                break
    return res


def check_antisymmetry(L: LieAlgebra) -> IdentityCheck:
    res = IdentityCheck(f"antisymmetry[{L.name},{L.form}]")
    for (i, j), v in L.brackets.items():
        res.checked += 1
        w = L.brackets.get((j, i), ())
        if dict(v) != {k: -c for k, c in w}:
            res.failures.append((i, j))
    return res


def check_invariance(L: LieAlgebra, B: BilinearForm, triples) -> IdentityCheck:
    """B([x,y],z) + B(y,[x,z]) = 0 on the given basis triples."""
    res = IdentityCheck(f"killing-invariance[{L.name},{L.form}]")
    for x, y, z in triples:
        res.checked += 1
        xy = L.bracket_sparse({x: 1}, {y: 1})
        xz = L.bracket_sparse({x: 1}, {z: 1})
        if B(xy, {z: 1}) + B({y: 1}, xz):
            res.failures.append((x, y, z))
    return res
