"""Machine-readable Tables 1-4 and the cross-table consistency checks.

Space descriptors use a small notation, e.g. ``SU_{r+1}``, ``S(U_{r}U_{1})``,
``SO_{5}/SO_{2}SO_{3}``, ``R x SU*_{2*r}/Sp_{r}``, ``e_{7} + sp_{1}``.
Juxtaposed groups and the separators `` x `` and `` + `` all add
dimensions; ``/`` subtracts; ``S(...)`` removes one central dimension.
Noncompact labels (``SU*``, ``SO*``, ``Sp_{p,q}``, ``Sp_{n}(R)``,
superscripted exceptionals) are evaluated through their compact duals, and
``R`` / ``RH2`` count 1 / 2.
"""
from __future__ import annotations

import ast
import itertools
import operator
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .rootsystem import algebra_dimension, root_system

DEFAULT_RANK_CEILING = 8


class TableFormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer formulas

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Pow: operator.pow, ast.FloorDiv: operator.floordiv}
_CMPOPS = {ast.Lt: operator.lt, ast.LtE: operator.le, ast.Gt: operator.gt,
           ast.GtE: operator.ge, ast.Eq: operator.eq, ast.NotEq: operator.ne}


def _eval(node, env):
    if isinstance(node, ast.Expression):
        return _eval(node.body, env)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise TableFormatError(f"unbound variable {node.id!r}")
        return env[node.id]
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval(node.left, env), _eval(node.right, env))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval(node.operand, env)
    if isinstance(node, ast.Compare):
        left = _eval(node.left, env)
        for op, comp in zip(node.ops, node.comparators):
            right = _eval(comp, env)
            if type(op) not in _CMPOPS or not _CMPOPS[type(op)](left, right):
                return False
            left = right
        return True
    if isinstance(node, ast.BoolOp):
        vals = (_eval(v, env) for v in node.values)
        return all(vals) if isinstance(node.op, ast.And) else any(vals)
    raise TableFormatError(f"unsupported expression element {ast.dump(node)}")


@lru_cache(maxsize=None)
def _parse_expr(text: str):
    try:
        return ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise TableFormatError(f"cannot parse expression {text!r}") from exc


def evaluate(text: str, env: dict | None = None):
    return _eval(_parse_expr(text), env or {})


def variables(text: str) -> set[str]:
    return {n.id for n in ast.walk(_parse_expr(text)) if isinstance(n, ast.Name)}


# ---------------------------------------------------------------------------
# space descriptors

_TOKEN = re.compile(
    r"\s*(?:(?P<s>S\()|(?P<close>\))|(?P<rh2>RH2)|(?P<real>R)(?![A-Za-z_(])"
    r"|(?P<name>SU\*|SO\*|Spin|SU|SO|Sp|U|E|F|G|su|so|sp|u|e|f|g)_\{(?P<arg>[^}]*)\}"
    r"(?P<split>\(R\))?(?:\^\{[^}]*\})?)")


def group_components(name: str, n: int) -> list[tuple[str, int] | int]:
    """Simple components (type, rank) and abelian dimensions of a compact group."""
    key = name.rstrip("*").lower()
    if key == "su":
        return [("A", n - 1)] if n >= 2 else []
    if key == "u":
        return ([("A", n - 1)] if n >= 2 else []) + [1]
    if key in ("so", "spin"):
        if n <= 1:
            return []
        if n == 2:
            return [1]
        if n == 3:
            return [("A", 1)]
        if n == 4:
            return [("A", 1), ("A", 1)]
        return [("B", (n - 1) // 2)] if n % 2 else [("D", n // 2)]
    if key == "sp":
        if n == 1:
            return [("A", 1)]
        if n == 2:
            return [("B", 2)]
        return [("C", n)] if n >= 3 else []
    if key in ("e", "f", "g"):
        return [(key.upper(), n)]
    raise TableFormatError(f"unknown group name {name!r}")


def component_dimension(c) -> int:
    if isinstance(c, int):
        return c
    return algebra_dimension(root_system(*c))


def _factor_dim(text: str, env: dict) -> tuple[int, list]:
    """Dimension of juxtaposed factors, plus the simple components met."""
    pos = 0
    stack = [0]
    comps: list = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise TableFormatError(f"cannot parse {text[pos:]!r} in {text!r}")
        pos = m.end()
        if m.group("s"):
            stack.append(0)
        elif m.group("close"):
            if len(stack) < 2:
                raise TableFormatError(f"unbalanced ')' in {text!r}")
            inner = stack.pop()
            stack[-1] += inner - 1
        elif m.group("rh2"):
            stack[-1] += 2
        elif m.group("real"):
            stack[-1] += 1
        else:
            args = [evaluate(a, env) for a in m.group("arg").split(",")]
            n = sum(args)  # Sp_{p,q} -> Sp_{p+q}
            cs = group_components(m.group("name"), n)
            comps.extend(cs)
            stack[-1] += sum(component_dimension(c) for c in cs)
    if len(stack) != 1:
        raise TableFormatError(f"unbalanced 'S(' in {text!r}")
    return stack[0], comps


def _split_top(text: str, sep: str) -> list[str]:
    out, depth, cur = [], 0, ""
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "{(":
            depth += 1
        elif ch in "})":
            depth -= 1
        if depth == 0 and text.startswith(sep, i):
            out.append(cur)
            cur = ""
            i += len(sep)
            continue
        cur += ch
        i += 1
    out.append(cur)
    return [s.strip() for s in out]


def descriptor_dimension(text: str, env: dict | None = None) -> int:
    """Dimension of a space descriptor, via root-system dimensions of its factors."""
    env = env or {}
    total = 0
    for part in _split_top(text.replace(" + ", " x "), " x "):
        pieces = _split_top(part, "/")
        if len(pieces) > 2:
            raise TableFormatError(f"more than one '/' in {part!r}")
        d, _ = _factor_dim(pieces[0], env)
        if len(pieces) == 2:
            d -= _factor_dim(pieces[1], env)[0]
        total += d
    return total


def simple_type(text: str, env: dict | None = None) -> tuple[str, int]:
    """(type, rank) of a descriptor naming a single compact simple group or algebra."""
    _, comps = _factor_dim(text.strip(), env or {})
    if len(comps) != 1 or isinstance(comps[0], int):
        raise TableFormatError(f"{text!r} is not a simple group")
    return comps[0]


def descriptor_variables(text: str) -> set[str]:
    out = set()
    for m in re.finditer(r"\{([^}]*)\}", text):
        if text[m.start() - 1] == "^":
            continue
        for a in m.group(1).split(","):
            out |= variables(a)
    return out


# ---------------------------------------------------------------------------
# rows

@dataclass(frozen=True)
class TableRow:
    row_id: str
    table_id: int
    block: int
    space: str
    sigma_list: tuple[str, ...]
    dim_formula: str | None
    value_formula: str
    rank_constraint: str | None

    @property
    def variables(self) -> set[str]:
        names = descriptor_variables(self.space) | variables(self.value_formula)
        for s in self.sigma_list:
            names |= descriptor_variables(s)
        if self.dim_formula:
            names |= variables(self.dim_formula)
        return names

    def admits(self, env: dict) -> bool:
        if self.rank_constraint:
            return bool(evaluate(self.rank_constraint, env))
        return True

    def assignments(self, ceiling: int = DEFAULT_RANK_CEILING) -> list[dict]:
        """Admissible parameter values with r <= ceiling (k bounded likewise)."""
        names = sorted(self.variables)
        if not names:
            return [{}]
        ranges = {"r": range(1, ceiling + 1), "k": range(0, ceiling + 1)}
        out = []
        for combo in itertools.product(*(ranges[n] for n in names)):
            env = dict(zip(names, combo))
            if self.admits(env):
                out.append(env)
        return out

    def dim(self, env: dict | None = None) -> int | None:
        return evaluate(self.dim_formula, env or {}) if self.dim_formula else None

    def value(self, env: dict | None = None) -> int:
        return evaluate(self.value_formula, env or {})

    def label(self, env: dict | None = None) -> str:
        if not env:
            return self.row_id
        return self.row_id + "[" + ",".join(f"{k}={v}" for k, v in sorted(env.items())) + "]"


def parse_tables(text: str) -> list[TableRow]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 8:
            raise TableFormatError(f"line {lineno}: expected 8 tab-separated fields, got {len(parts)}")
        rid, tid, block, space, sigma, dim, value, cons = (p.strip() for p in parts)
        try:
            row = TableRow(rid, int(tid), int(block), space,
                           tuple(s.strip() for s in sigma.split(" ; ")),
                           None if dim == "-" else dim, value, None if cons == "-" else cons)
            for env in row.assignments():
                if row.dim_formula and row.dim(env) <= 0 or row.value(env) <= 0:
                    raise TableFormatError("non-positive dimension or index")
                if row.dim_formula and row.value(env) > row.dim(env):
                    raise TableFormatError("index exceeds dimension")
        except (TableFormatError, ValueError) as exc:
            raise TableFormatError(f"line {lineno} ({rid}): {exc}") from exc
        rows.append(row)
    return rows


HEADER = ("# lieindex table data\n# format-version: 1\n"
          "# columns (tab separated): id table block space sigma dim value constraint\n")


def dump_tables(rows) -> str:
    lines = [HEADER.rstrip("\n")]
    for r in rows:
        lines.append("\t".join([r.row_id, str(r.table_id), str(r.block), r.space,
                                " ; ".join(r.sigma_list), r.dim_formula or "-",
                                r.value_formula, r.rank_constraint or "-"]))
    return "\n".join(lines) + "\n"


def load_tables(path=None) -> list[TableRow]:
    if path is None:
        text = resources.files("lieindex").joinpath("data/tables.tsv").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_tables(text)


def by_table(rows, table_id: int) -> list[TableRow]:
    return [r for r in rows if r.table_id == table_id]


# ---------------------------------------------------------------------------
# checks

@dataclass
class CheckResult:
    check_name: str
    details: list = field(default_factory=list)
    module: str = "tables"
    operation: str = ""

    @property
    def status(self) -> str:
        return "pass" if all(d["ok"] for d in self.details) else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def failures(self) -> list:
        op = self.operation or self.check_name
        return [{"module": self.module, "operation": op, **d}
                for d in self.details if not d["ok"]]

    def add(self, row: str, ok: bool, **info) -> None:
        self.details.append({"row": row, "ok": bool(ok), **info})

    def to_dict(self) -> dict:
        return {"check": self.check_name, "module": self.module,
                "operation": self.operation or self.check_name, "status": self.status,
                "rows": len(self.details), "failures": self.failures(), "details": self.details}


def check_dim_column(rows, ceiling: int = DEFAULT_RANK_CEILING) -> CheckResult:
    res = CheckResult("dim_column")
    for row in rows:
        if row.table_id not in (1, 2):
            continue
        for env in row.assignments(ceiling):
            expected = row.dim(env)
            computed = descriptor_dimension(row.space, env)
            res.add(row.label(env), expected == computed, expected=expected, computed=computed)
    return res


def check_sigma_codims(rows, ceiling: int = DEFAULT_RANK_CEILING) -> CheckResult:
    """dim(space) - dim(sigma) equals the index column for every listed sigma (Tables 1-3)."""
    res = CheckResult("sigma_codim")
    for row in rows:
        if row.table_id not in (1, 2, 3):
            continue
        for env in row.assignments(ceiling):
            total = descriptor_dimension(row.space, env)
            for s in row.sigma_list:
                codim = total - descriptor_dimension(s, env)
                res.add(row.label(env), codim == row.value(env), sigma=s,
                        expected=row.value(env), computed=codim)
    return res


def d_values(rows, ceiling: int = DEFAULT_RANK_CEILING) -> dict[tuple[str, int], int]:
    """(type, rank) -> d(g) from the Table 3 rows at their admissible ranks."""
    out = {}
    for row in by_table(rows, 3):
        for env in row.assignments(ceiling):
            out.setdefault(simple_type(row.space, env), row.value(env))
    return out


def check_ir_le_d(rows, ceiling: int = DEFAULT_RANK_CEILING) -> CheckResult:
    res = CheckResult("ir_le_d")
    d = d_values(rows, ceiling)
    for row in by_table(rows, 2):
        for env in row.assignments(ceiling):
            key = simple_type(row.space, env)
            ir = row.value(env)
            if key not in d:
                res.add(row.label(env), False, reason=f"no Table 3 entry for {key}")
                continue
            res.add(row.label(env), ir <= d[key], i_r=ir, d=d[key], equality=ir == d[key])
    return res


STRICT_GROUPS = {("A", 1), ("A", 2)}


def check_index_dichotomy(rows, ceiling: int = DEFAULT_RANK_CEILING) -> CheckResult:
    """i(G) < d(g) exactly for SU_2 and SU_3, equality otherwise."""
    res = CheckResult("index_dichotomy")
    d = d_values(rows, ceiling)
    for row in by_table(rows, 1):
        for env in row.assignments(ceiling):
            key = simple_type(row.space, env)
            i = row.value(env)
            if key not in d:
                res.add(row.label(env), False, reason=f"no Table 3 entry for {key}")
                continue
            strict = i < d[key]
            res.add(row.label(env), strict == (key in STRICT_GROUPS) and i <= d[key],
                    i=i, d=d[key], strict=strict)
    return res


def check_table1_vs_table2(rows) -> CheckResult:
    """Tables 1 and 2 agree except for the extra SU_3 entry in the G_2 row."""
    res = CheckResult("table1_vs_table2")
    t1, t2 = by_table(rows, 1), by_table(rows, 2)
    if len(t1) != len(t2):
        res.add("T1/T2", False, reason=f"row counts differ: {len(t1)} vs {len(t2)}")
        return res
    for a, b in zip(t1, t2):
        same_numbers = (a.space, a.dim_formula, a.value_formula, a.rank_constraint) == \
                       (b.space, b.dim_formula, b.value_formula, b.rank_constraint)
        extra = [s for s in a.sigma_list if s not in b.sigma_list]
        missing = [s for s in b.sigma_list if s not in a.sigma_list]
        expected_extra = ["SU_{3}"] if a.space == "G_{2}" else []
        ok = same_numbers and not missing and extra == expected_extra
        res.add(f"{a.row_id}/{b.row_id}", ok, extra_in_table1=extra, missing_in_table1=missing)
    return res


def check_rank_lower_bound(rows, ceiling: int = DEFAULT_RANK_CEILING) -> CheckResult:
    res = CheckResult("rank_lower_bound")
    for row in by_table(rows, 1):
        for env in row.assignments(ceiling):
            _, rank = simple_type(row.space, env)
            i = row.value(env)
            res.add(row.label(env), rank <= i, rank=rank, i=i)
    return res


def check_table4_dimensions(rows, ceiling: int = DEFAULT_RANK_CEILING) -> CheckResult:
    res = CheckResult("table4_dimensions")
    for row in by_table(rows, 4):
        for env in row.assignments(ceiling):
            dim_m = descriptor_dimension(row.space, env)
            dim_s = descriptor_dimension(row.sigma_list[0], env)
            ok = dim_m == row.dim(env) and dim_m - dim_s == row.value(env)
            res.add(row.label(env), ok, dim=dim_m, expected_dim=row.dim(env),
                    codim=dim_m - dim_s, expected_codim=row.value(env))
    return res


def check_row_counts(rows) -> CheckResult:
    res = CheckResult("row_counts")
    for t, n in {1: 12, 2: 12, 3: 9, 4: 13}.items():
        got = len(by_table(rows, t))
        res.add(f"table{t}", got == n, expected=n, computed=got)
    return res


def run_table_checks(rows=None, ceiling: int = DEFAULT_RANK_CEILING) -> list[CheckResult]:
    rows = rows if rows is not None else load_tables()
    return [
        check_row_counts(rows),
        check_dim_column(rows, ceiling),
        check_sigma_codims(rows, ceiling),
        check_ir_le_d(rows, ceiling),
        check_index_dichotomy(rows, ceiling),
        check_table1_vs_table2(rows),
        check_rank_lower_bound(rows, ceiling),
        check_table4_dimensions(rows, ceiling),
    ]
