"""Check suites behind ``lieindex verify``.

Every suite returns a list of :class:`CheckResult`; each detail record
carries a ``row`` label, and failures are tagged with module and operation
by ``CheckResult.failures``.  Suites run sequentially in a fixed order so
reports are deterministic.
"""
from __future__ import annotations

from .chevalley import (check_antisymmetry, check_jacobi, compact, chevalley, is_negative_definite,
                        killing_form)
from .involution import (cartan_relation_failures, involution_from_descriptor,
                         tangent_reflections)
from .lts import is_lie_triple_system, verify_sigma_tangents
from .manifest import load_manifest
from .rootsystem import RootSystemError, cartan_matrix, is_finite_type
from .subalgebra import construct, verify_table3
from .tables import (DEFAULT_RANK_CEILING, CheckResult, check_dim_column, check_index_dichotomy,
                     check_ir_le_d, check_rank_lower_bound, check_row_counts, check_sigma_codims,
                     check_table1_vs_table2, check_table4_dimensions)

SCOPES = ("all", "table1", "table2", "table3", "table4", "soundness")


def _restrict(res: CheckResult, prefix: str) -> CheckResult:
    """Keep only detail records whose row label belongs to the given table."""
    keep = [d for d in res.details if d["row"].split("/")[0].startswith(prefix)]
    return CheckResult(res.check_name, keep, res.module, res.operation)


def tangent_check(rows: set | None, ceiling: int, table: str) -> CheckResult:
    res = CheckResult(f"lts_tangents_{table}", module="lts", operation="verify_sigma_tangents")
    for rec in verify_sigma_tangents(ceiling=ceiling, rows=rows):
        row = rec.pop("row")
        ok = rec.pop("ok")
        if rec.get("witness") is not None:
            rec["witness"] = list(rec["witness"])
        res.add(row, ok, **rec)
    return res


def cartan_embedding_check(ids=None) -> CheckResult:
    """dim k of each manifest involution against the i_r column of its Table 2 row."""
    man = load_manifest()
    res = CheckResult("cartan_embedding_codim", module="involution",
                      operation="cartan_embedding_codim")
    for key, e in man.involutions.items():
        if ids is not None and key not in ids:
            continue
        row = man.rows.get(e.reflective_index_row) if e.reflective_index_row else None
        try:
            L, A, pair = involution_from_descriptor(e.type_label, e.rank, e.kind, e.data)
            expected = row.value({}) if row else None
            tangent_reflections(pair)
            relations = cartan_relation_failures(L, pair.k, pair.m, limit=1)
            ok = (expected is None or pair.k.dim == expected) and not relations
            res.add(row.row_id if row else key, ok, involution=key, algebra=L.name,
                    dim_k=pair.k.dim, dim_m=pair.m.dim, expected=expected,
                    witness=list(relations[0]) if relations else None)
        except Exception as exc:
            res.add(row.row_id if row else key, False, involution=key, error=repr(exc))
    return res


def table3_check(ceiling: int, ids=None) -> list[CheckResult]:
    """Construct each manifest subalgebra, certify closure, compare codim with d(g), test LTS."""
    man = load_manifest()
    cons = CheckResult("table3_construction", module="subalgebra", operation="verify_table3")
    lts = CheckResult("table3_lts", module="lts", operation="is_lie_triple_system")
    for key, e in man.subalgebras.items():
        if ids is not None and key not in ids:
            continue
        for rank in e.ranks(ceiling):
            label = f"{e.table3_row}[{e.type_label}{rank}]"
            for entry in verify_table3(e.type_label, rank, man):
                if entry.row_id != key:
                    continue
                cons.add(label, entry.match, id=key, algebra=entry.algebra,
                         route=entry.construction, descriptor=_jsonable(entry.descriptor),
                         codim=entry.constructed_codim, expected=entry.expected,
                         components=list(entry.components), error=entry.error)
                if entry.error:
                    continue
                rec = construct(e.route, e.type_label, rank, e.descriptor_at(rank))
                rep = is_lie_triple_system(compact(e.type_label, rank), rec.subspace)
                lts.add(label, rep.passed, id=key, dim=rec.dim,
                        witness=list(rep.witness) if rep.witness else None)
    return [cons, lts]


def _jsonable(x):
    return list(x) if isinstance(x, tuple) else x


def compact_types(ceiling: int) -> list[tuple[str, int]]:
    out = []
    for t, lo in (("A", 1), ("B", 2), ("C", 3), ("D", 4)):
        out.extend((t, r) for r in range(lo, ceiling + 1))
    out += [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
    return out


def soundness_checks(ceiling: int = DEFAULT_RANK_CEILING, heavy: bool = False,
                     samples: int = 100_000, seed: int = 0) -> list[CheckResult]:
    """Jacobi, antisymmetry, Killing definiteness and manifest automorphism certification."""
    jac = CheckResult("jacobi", module="chevalley", operation="check_jacobi")
    anti = CheckResult("antisymmetry", module="chevalley", operation="check_antisymmetry")
    kill = CheckResult("killing_negative_definite", module="chevalley",
                       operation="is_negative_definite")
    for t, r in compact_types(ceiling):
        for L in (chevalley(t, r), compact(t, r)):
            exhaustive = True if heavy else L.dimension <= 52
            j = check_jacobi(L, exhaustive=exhaustive, samples=samples, seed=seed)
            jac.add(f"{L.name}/{L.form}", j.passed, dim=L.dimension, checked=j.checked,
                    mode="exhaustive" if exhaustive else "sampled",
                    witness=list(j.failures[0]) if j.failures else None)
            a = check_antisymmetry(L)
            anti.add(f"{L.name}/{L.form}", a.passed, checked=a.checked,
                     witness=list(a.failures[0]) if a.failures else None)
        L = compact(t, r)
        kill.add(L.name, is_negative_definite(killing_form(L)), dim=L.dimension)
    auts = automorphism_check()
    return [jac, anti, kill, auts]


def automorphism_check(ids=None) -> CheckResult:
    """Bracket preservation and involutivity of every manifest automorphism, exhaustively."""
    from .involution import bracket_preservation_failures, diagram_automorphism

    man = load_manifest()
    res = CheckResult("automorphisms", module="involution",
                      operation="bracket_preservation_failures")
    for key, e in man.involutions.items():
        if ids is None or key in ids:
            L, A, _ = involution_from_descriptor(e.type_label, e.rank, e.kind, e.data)
            bad = bracket_preservation_failures(L, A, limit=1)
            res.add(key, not bad and A.is_involutive(), algebra=L.name, kind=e.kind,
                    involutive=A.is_involutive(), witness=list(bad[0]) if bad else None)
    for key, e in man.subalgebras.items():
        if e.route != "diagram-fixed" or (ids is not None and key not in ids):
            continue
        for rank in e.ranks(DEFAULT_RANK_CEILING):
            L = compact(e.type_label, rank)
            try:
                A = diagram_automorphism(L, e.descriptor_at(rank))
            except Exception as exc:
                res.add(f"{key}[{L.name}]", False, error=repr(exc))
                continue
            bad = bracket_preservation_failures(L, A, limit=1)
            res.add(f"{key}[{L.name}]", not bad and A.is_involutive(), algebra=L.name,
                    kind="diagram", involutive=A.is_involutive(),
                    witness=list(bad[0]) if bad else None)
    return res


def table_checks(scope: str, ceiling: int) -> list[CheckResult]:
    from .tables import load_tables

    rows = load_tables()
    if scope == "table1":
        return [check_row_counts(rows), _restrict(check_dim_column(rows, ceiling), "T1"),
                _restrict(check_sigma_codims(rows, ceiling), "T1"),
                check_index_dichotomy(rows, ceiling), check_table1_vs_table2(rows),
                check_rank_lower_bound(rows, ceiling),
                tangent_check({r.row_id for r in rows if r.table_id == 1}, ceiling, "table1")]
    if scope == "table2":
        return [_restrict(check_dim_column(rows, ceiling), "T2"),
                _restrict(check_sigma_codims(rows, ceiling), "T2"),
                check_ir_le_d(rows, ceiling), check_table1_vs_table2(rows),
                cartan_embedding_check(),
                tangent_check({r.row_id for r in rows if r.table_id == 2}, ceiling, "table2")]
    if scope == "table3":
        return [_restrict(check_sigma_codims(rows, ceiling), "T3")] + table3_check(ceiling)
    if scope == "table4":
        return [check_table4_dimensions(rows, ceiling)]
    raise ValueError(f"unknown scope {scope!r}")


def run_scope(scope: str, ceiling: int = DEFAULT_RANK_CEILING, heavy: bool = False,
              seed: int = 0) -> list[CheckResult]:
    if scope == "soundness":
        return soundness_checks(ceiling, heavy, seed=seed)
    if scope == "all":
        out = []
        for s in ("table1", "table2", "table3", "table4"):
            out.extend(table_checks(s, ceiling))
        return out + soundness_checks(ceiling, heavy, seed=seed)
    return table_checks(scope, ceiling)


def known_row_ids() -> list[str]:
    man = load_manifest()
    return sorted(man.rows) + sorted(man.subalgebras) + sorted(man.involutions)


def run_row(row_id: str, ceiling: int = DEFAULT_RANK_CEILING) -> list[CheckResult]:
    """Checks for one manifest id (subalgebra or involution) or one table row id."""
    man = load_manifest()
    if row_id in man.subalgebras:
        return table3_check(ceiling, ids={row_id})
    if row_id in man.involutions:
        return [cartan_embedding_check({row_id}), automorphism_check({row_id})]
    if row_id not in man.rows:
        raise KeyError(row_id)
    row = man.rows[row_id]
    table = f"table{row.table_id}"
    out = []
    for res in table_checks(table, ceiling):
        keep = [d for d in res.details
                if row_id in d["row"].split("[")[0].split("/")]
        if keep:
            out.append(CheckResult(res.check_name, keep, res.module, res.operation))
    return out


def validate_type(type_label: str, rank: int) -> None:
    a = cartan_matrix(type_label, rank)
    if not is_finite_type(a.entries):
        raise RootSystemError(f"{type_label}{rank} is not of finite type")
