"""Root systems of the simple types A_r through G_2.

Node numbering follows Bourbaki throughout: simple roots are labelled
1..r, and the extra node of the extended diagram (the negated highest
root) is labelled 0.  Python-side indices are ``label - 1``.

Cartan matrix convention: ``a[i][j] = <alpha_i, alpha_j^vee>
= 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``, so for G2 (alpha_1 short)
the matrix is ``[[2, -1], [-3, 2]]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

VALID_TYPES = "ABCDEFG"


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple[tuple[int, ...], ...]
    type_label: str = "?"

    def __post_init__(self):
        check_cartan_entries(self.entries)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def symmetries(self) -> list[tuple[int, ...]]:
        """All node permutations preserving the matrix (0-based)."""
        n = self.rank
        a = self.entries
        sig = [tuple(sorted(row)) for row in a]
        out = []

        def extend(prefix):
            i = len(prefix)
            if i == n:
                out.append(tuple(prefix))
                return
            for j in range(n):
                if j in prefix or sig[j] != sig[i]:
                    continue
                if a[i][i] == a[j][j] and all(
                        a[i][k] == a[j][prefix[k]] and a[k][i] == a[prefix[k]][j]
                        for k in range(i)):
                    extend(prefix + [j])

        extend([])
        return out


def check_cartan_entries(a) -> None:
    n = len(a)
    if n == 0:
        raise RootSystemError("empty Cartan matrix")
    for i in range(n):
        if len(a[i]) != n:
            raise RootSystemError("Cartan matrix must be square")
        if a[i][i] != 2:
            raise RootSystemError(f"diagonal entry ({i},{i}) is {a[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if a[i][j] not in (0, -1, -2, -3):
                raise RootSystemError(f"entry ({i},{j}) = {a[i][j]} outside {{0,-1,-2,-3}}")
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise RootSystemError(f"zero pattern not symmetric at ({i},{j})")


def is_finite_type(a) -> bool:
    """Every leading principal minor positive (exact)."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    # Gaussian elimination without pivoting; pivots are ratios of leading minors
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            if m[i][k]:
                f = m[i][k] / m[k][k]
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return True


def _chain(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(type_label: str, rank: int) -> CartanMatrix:
    t = str(type_label).upper()
    r = int(rank)
    if t not in VALID_TYPES or len(t) != 1:
        raise RootSystemError(f"unknown type {type_label!r}; expected one of {VALID_TYPES}")
    lower = {"A": 1, "B": 2, "C": 3, "D": 3}
    fixed = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
    if t in lower and r < lower[t]:
        raise RootSystemError(f"{t}_{r} is not a valid simple type (need rank >= {lower[t]})")
    if t in fixed and r not in fixed[t]:
        raise RootSystemError(f"{t}_{r} is not a valid simple type (rank must be one of {fixed[t]})")

    if t == "A":
        a = _chain(r)
    elif t == "B":
        a = _chain(r)
        a[r - 2][r - 1] = -2
    elif t == "C":
        a = _chain(r)
        a[r - 1][r - 2] = -2
    elif t == "D":
        a = _chain(r)
        a[r - 2][r - 1] = a[r - 1][r - 2] = 0
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
    elif t == "E":
        # Bourbaki: 1-3-4-5-...-r with 2 attached to 4
        a = [[0] * r for _ in range(r)]
        for i in range(r):
            a[i][i] = 2
        edges = [(1, 3), (3, 4), (2, 4)] + [(k, k + 1) for k in range(4, r)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    elif t == "F":
        a = _chain(4)
        a[1][2] = -2
    else:
        a = [[2, -1], [-3, 2]]
    return CartanMatrix(tuple(tuple(row) for row in a), t)


@dataclass(frozen=True, order=True)
class Root:
    coords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def sign(self) -> int:
        return 1 if self.height > 0 else -1

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coords))

    def __add__(self, other: Root) -> tuple[int, ...]:
        return tuple(x + y for x, y in zip(self.coords, other.coords))

    def __repr__(self):
        return f"Root{self.coords}"


def _sort_key(root: Root):
    return (root.height, root.coords)


def symmetrized_form(a) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix (alpha_i, alpha_j) with long roots of squared length 2."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        component = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and a[i][j] and d[j] is None:
                    # a_ij d_j = a_ji d_i
                    d[j] = d[i] * a[j][i] / a[i][j]
                    component.append(j)
                    stack.append(j)
        top = max(d[k] for k in component)
        for k in component:
            d[k] = 2 * d[k] / top
    return tuple(tuple(Fraction(a[i][j]) * d[j] / 2 for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanMatrix
    roots: tuple[Root, ...]
    positive_count: int
    highest_root: Root
    symmetrized_form: tuple[tuple[Fraction, ...], ...]
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def type_label(self) -> str:
        return self.cartan.type_label

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return self.roots[len(self.roots) - self.positive_count:]

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        r = self.rank
        return tuple(Root(tuple(int(i == j) for j in range(r))) for i in range(r))

    def is_root(self, coords) -> bool:
        if isinstance(coords, Root):
            coords = coords.coords
        return tuple(coords) in self._index

    def index(self, root) -> int:
        """Position of a root in ``roots``."""
        if isinstance(root, Root):
            root = root.coords
        return self._index[tuple(root)]

    def inner(self, x, y) -> Fraction:
        x = x.coords if isinstance(x, Root) else x
        y = y.coords if isinstance(y, Root) else y
        g = self.symmetrized_form
        return sum((x[i] * y[j] * g[i][j] for i in range(len(x)) if x[i]
                    for j in range(len(y)) if y[j]), Fraction(0))

    def norm2(self, x) -> Fraction:
        return self.inner(x, x)

    def pairing(self, x, y) -> int:
        """<x, y^vee> = 2 (x, y) / (y, y); y must be a root."""
        val = 2 * self.inner(x, y) / self.norm2(y)
        assert val.denominator == 1
        return int(val)

    def coroot_coords(self, alpha) -> tuple[int, ...]:
        """alpha^vee in the basis of simple coroots."""
        c = alpha.coords if isinstance(alpha, Root) else alpha
        n2 = self.norm2(c)
        g = self.symmetrized_form
        out = []
        for j, cj in enumerate(c):
            v = cj * g[j][j] / n2
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    def reflect(self, i: int, alpha: Root) -> Root:
        """Simple reflection s_i (0-based index) applied to alpha."""
        a = self.cartan.entries
        k = sum(c * a[j][i] for j, c in enumerate(alpha.coords))
        coords = list(alpha.coords)
        coords[i] -= k
        return Root(tuple(coords))

    def string_below(self, alpha, beta) -> int:
        """Largest p with beta - p*alpha a root."""
        a = alpha.coords if isinstance(alpha, Root) else alpha
        b = beta.coords if isinstance(beta, Root) else beta
        p = 0
        while self.is_root(tuple(y - (p + 1) * x for x, y in zip(a, b))):
            p += 1
        return p


def build_root_system(cartan: CartanMatrix) -> RootSystem:
    a = cartan.entries
    r = cartan.rank
    if not is_finite_type(a):
        raise RootSystemError("Cartan matrix is not of finite type")
    bound = max(2 * r * r, 240)
    simple = [Root(tuple(int(i == j) for j in range(r))) for i in range(r)]
    found = set(simple) | {-s for s in simple}
    frontier = list(found)
    while frontier:
        nxt = []
        for alpha in frontier:
            for i in range(r):
                k = sum(c * a[j][i] for j, c in enumerate(alpha.coords))
                if k == 0:
                    continue
                coords = list(alpha.coords)
                coords[i] -= k
                beta = Root(tuple(coords))
                if beta not in found:
                    found.add(beta)
                    nxt.append(beta)
        if len(found) > bound:
            raise RootSystemError("reflection closure exceeded the finite-type bound")
        frontier = nxt
    roots = tuple(sorted(found, key=_sort_key))
    for rt in roots:
        if not (all(c >= 0 for c in rt.coords) or all(c <= 0 for c in rt.coords)):
            raise RootSystemError(f"mixed-sign root {rt.coords}: not a finite root system")
    pos = len(roots) // 2
    rs = RootSystem(cartan, roots, pos, roots[-1], symmetrized_form(a),
                    {rt.coords: k for k, rt in enumerate(roots)})
    return rs


@lru_cache(maxsize=None)
def root_system(type_label: str, rank: int) -> RootSystem:
    """Cached ``build_root_system(cartan_matrix(type_label, rank))``."""
    return build_root_system(cartan_matrix(type_label, rank))


def algebra_dimension(rs: RootSystem) -> int:
    return rs.rank + len(rs.roots)


def extended_cartan_matrix(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of the extended diagram; row/column 0 is the node -theta.

    Rows and columns 1..r are the ordinary simple roots, so indices agree
    with Bourbaki labels.
    """
    r = rs.rank
    low = (-rs.highest_root).coords
    nodes = [low] + [s.coords for s in rs.simple_roots]
    return tuple(tuple(rs.pairing(nodes[i], nodes[j]) for j in range(r + 1))
                 for i in range(r + 1))


def extended_node_root(rs: RootSystem, label: int) -> Root:
    """The root attached to an extended-diagram node (0 is -theta)."""
    if label == 0:
        return -rs.highest_root
    if not 1 <= label <= rs.rank:
        raise RootSystemError(f"node {label} outside 0..{rs.rank}")
    return rs.simple_roots[label - 1]


def root_subsystem_closure(rs: RootSystem, generators) -> frozenset[Root]:
    gens = set()
    for g in generators:
        g = g if isinstance(g, Root) else Root(tuple(g))
        if not rs.is_root(g):
            raise RootSystemError(f"{g.coords} is not a root")
        gens.add(g)
        gens.add(-g)
    closed = set(gens)
    frontier = list(closed)
    while frontier:
        nxt = []
        current = list(closed)
        for x in frontier:
            for y in current:
                s = x + y
                if rs.is_root(s):
                    z = Root(s)
                    if z not in closed:
                        closed.add(z)
                        nxt.append(z)
        frontier = nxt
    return frozenset(closed)


def subsystem_cartan_matrix(rs: RootSystem, subsystem) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of a closed subsystem, from its own simple roots.

    Simple roots are the positive roots of the subsystem that are not sums
    of two positive roots of the subsystem.
    """
    sub = set(subsystem)
    pos = [x for x in sub if x.is_positive]
    posset = {x.coords for x in pos}
    simple = []
    for x in sorted(pos, key=_sort_key):
        decomposable = any(
            tuple(a - b for a, b in zip(x.coords, y.coords)) in posset for y in pos if y != x)
        if not decomposable:
            simple.append(x)
    return tuple(tuple(rs.pairing(x, y) for y in simple) for x in simple)


def cartan_type_signature(a) -> list[str]:
    """Sorted list of simple-component labels (e.g. ['A1', 'C3']) of a Cartan matrix.

    Components are identified by size, bond multiset and determinant, which
    separates all finite types.
    """
    n = len(a)
    seen = [False] * n
    labels = []
    for s in range(n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and a[i][j]:
                    seen[j] = True
                    stack.append(j)
        labels.append(_identify_component([[a[i][j] for j in comp] for i in comp]))
    return sorted(labels)


def _identify_component(a) -> str:
    n = len(a)
    bonds = sorted(a[i][j] * a[j][i] for i in range(n) for j in range(i + 1, n) if a[i][j])
    degrees = sorted(sum(1 for j in range(n) if j != i and a[i][j]) for i in range(n))
    if n == 1:
        return "A1"
    if 3 in bonds:
        return "G2"
    if 2 in bonds:
        if n == 2:
            return "B2"
        deg = [sum(1 for j in range(n) if j != i and a[i][j]) for i in range(n)]
        i, j = next((i, j) for i in range(n) for j in range(n)
                    if i != j and a[i][j] * a[j][i] == 2)
        if deg[i] != 1 and deg[j] != 1:
            return "F4"
        end, other = (i, j) if deg[i] == 1 else (j, i)
        # a[end][other] = 2(e,o)/(o,o): the end node is short iff this is -1
        return f"B{n}" if a[end][other] == -1 else f"C{n}"
    if max(degrees) <= 2:
        return f"A{n}"
    # simply laced with a branch node: D or E
    branch = next(i for i in range(n) if sum(1 for j in range(n) if j != i and a[i][j]) == 3)
    arms = []
    for j in range(n):
        if j != branch and a[branch][j]:
            length, prev, cur = 1, branch, j
            while True:
                nbrs = [k for k in range(n) if k not in (cur, prev) and a[cur][k]]
                if not nbrs:
                    break
                prev, cur = cur, nbrs[0]
                length += 1
            arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    return f"E{n}"
