"""Command-line driver: ``lieindex <subcommand> ...``.

Every subcommand except ``dim`` and ``tables dump`` emits one report
document (JSON by default, markdown on request) with the fields
``tool_version, timestamp, invocation, results, overall``.  Exit status is
0 when overall is pass, 1 on a verification failure and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .tables import DEFAULT_RANK_CEILING, CheckResult

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# reports

def _plain(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (tuple, list)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x


def build_report(invocation: dict, results: list[CheckResult], timestamp: str | None = None) -> dict:
    return {
        "tool_version": __version__,
        "timestamp": timestamp or datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "invocation": invocation,
        "results": [_plain(r.to_dict()) for r in results],
        "overall": "pass" if all(r.passed for r in results) else "fail",
    }


def render_markdown(report: dict) -> str:
    lines = [f"# lieindex report ({report['overall'].upper()})", "",
             f"- tool_version: {report['tool_version']}",
             f"- timestamp: {report['timestamp']}",
             f"- invocation: `{json.dumps(report['invocation'])}`", "",
             "| check | module | operation | rows | status |",
             "|---|---|---|---|---|"]
    for r in report["results"]:
        lines.append(f"| {r['check']} | {r['module']} | {r['operation']} | {r['rows']} | {r['status']} |")
    fails = [f for r in report["results"] for f in r["failures"]]
    if fails:
        lines += ["", "## Failures", ""]
        for f in fails:
            extra = {k: v for k, v in f.items() if k not in ("module", "operation", "row", "ok")}
            lines.append(f"- {f['module']}.{f['operation']} row {f['row']}: {json.dumps(extra)}")
    for r in report["results"]:
        if r["rows"] <= 40:
            lines += ["", f"## {r['check']}", ""]
            for d in r["details"]:
                info = {k: v for k, v in d.items() if k not in ("row", "ok")}
                mark = "ok" if d["ok"] else "FAIL"
                lines.append(f"- {d['row']}: {mark} {json.dumps(info)}")
    return "\n".join(lines) + "\n"


def emit(report: dict, fmt: str, out=None) -> int:
    out = out or sys.stdout
    if fmt == "markdown":
        out.write(render_markdown(report))
    else:
        out.write(json.dumps(report, indent=2) + "\n")
    return EXIT_OK if report["overall"] == "pass" else EXIT_FAIL


# ---------------------------------------------------------------------------
# commands

def _algebra_args(args):
    from .rootsystem import cartan_matrix

    t = args.type.upper()
    cartan_matrix(t, args.rank)  # raises RootSystemError on bad input
    return t, args.rank


def cmd_dim(args) -> int:
    from .rootsystem import algebra_dimension, root_system

    t, r = _algebra_args(args)
    print(algebra_dimension(root_system(t, r)))
    return EXIT_OK


def cmd_roots(args) -> int:
    from .rootsystem import root_system

    t, r = _algebra_args(args)
    rs = root_system(t, r)
    res = CheckResult("roots", module="rootsystem", operation="build_root_system")
    roots = rs.positive_roots if args.positive else rs.roots
    for rt in roots:
        res.add(str(rt.coords), True, height=rt.height, norm2=rs.norm2(rt.coords))
    summary = CheckResult("root_counts", module="rootsystem", operation="build_root_system")
    summary.add(f"{t}{r}", len(rs.roots) == 2 * rs.positive_count, roots=len(rs.roots),
                positive=rs.positive_count, highest_root=list(rs.highest_root.coords))
    return _report(args, [summary, res])


def cmd_killing(args) -> int:
    from .chevalley import chevalley, compact, killing_form
    from .linalg import pivots_ldl

    t, r = _algebra_args(args)
    L = compact(t, r) if args.form == "compact" else chevalley(t, r)
    B = killing_form(L)
    res = CheckResult("killing_form", module="chevalley", operation="killing_form")
    if L.form == "compact":
        piv = pivots_ldl([[-x for x in row] for row in B.matrix])
        bad = next((i for i, p in enumerate(piv) if p <= 0), None)
        res.add(L.name, bad is None and len(piv) == L.dimension, form=L.form, dim=L.dimension,
                negative_definite=bad is None, pivots_of_minus_B=sorted(set(piv)),
                witness=bad)
    else:
        diag = sorted({B.matrix[i][i] for i in range(L.dimension)})
        res.add(L.name, True, form=L.form, dim=L.dimension, diagonal_values=diag)
    if args.matrix:
        res.details[-1]["matrix"] = [list(row) for row in B.matrix]
    return _report(args, [res])


def cmd_jacobi(args) -> int:
    from .chevalley import check_antisymmetry, check_jacobi, chevalley, compact

    t, r = _algebra_args(args)
    L = compact(t, r) if args.form == "compact" else chevalley(t, r)
    exhaustive = True if args.heavy else L.dimension <= 52
    j = check_jacobi(L, exhaustive=exhaustive, samples=args.samples, seed=args.seed)
    a = check_antisymmetry(L)
    res = CheckResult("jacobi", module="chevalley", operation="check_jacobi")
    res.add(f"{L.name}/{L.form}", j.passed, checked=j.checked, seed=args.seed,
            mode="exhaustive" if exhaustive else "sampled",
            witness=list(j.failures[0]) if j.failures else None)
    anti = CheckResult("antisymmetry", module="chevalley", operation="check_antisymmetry")
    anti.add(f"{L.name}/{L.form}", a.passed, checked=a.checked,
             witness=list(a.failures[0]) if a.failures else None)
    return _report(args, [res, anti])


def cmd_verify(args) -> int:
    from . import verify

    if args.scope == "row":
        if not args.row_id:
            raise UsageError("verify row needs a row id")
        try:
            results = verify.run_row(args.row_id, args.rank_ceiling)
        except KeyError:
            raise UsageError(f"unknown row id {args.row_id!r}; known: "
                             + ", ".join(verify.known_row_ids())) from None
    else:
        if args.row_id:
            raise UsageError(f"scope {args.scope} takes no row id")
        results = verify.run_scope(args.scope, args.rank_ceiling, args.heavy, args.seed)
    return _report(args, results)


def _manifest_model(ref: str):
    """Resolve ``manifest:<id>`` (or a bare id) to (algebra, subspace, label)."""
    from .lts import tangent_model_subspace
    from .manifest import TangentModel, load_manifest

    key = ref.split(":", 1)[1] if ref.startswith("manifest:") else ref
    man = load_manifest()
    if key in man.involutions:
        tm = TangentModel((), "", f"involution:{key}:m")
        return tangent_model_subspace(tm, {}, man)
    if key in man.subalgebras:
        e = man.subalgebras[key]
        if e.symbolic:
            raise UsageError(f"{key} depends on r; use lts-check {key} --rank R")
        tm = TangentModel((), "", f"subalgebra:{key}")
        return tangent_model_subspace(tm, {}, man)
    raise UsageError(f"unknown manifest id {key!r}")


def cmd_lts_check(args) -> int:
    from . import verify
    from .lts import is_lie_triple_system, tangent_model_subspace
    from .manifest import TangentModel, load_manifest

    if not args.models:
        rows = None
        return _report(args, [verify.tangent_check(rows, args.rank_ceiling, "all"),
                              verify.table3_check(args.rank_ceiling)[1]])
    man = load_manifest()
    res = CheckResult("lts_check", module="lts", operation="is_lie_triple_system")
    for ref in args.models:
        key = ref.split(":", 1)[1] if ref.startswith("manifest:") else ref
        if key in man.subalgebras and man.subalgebras[key].symbolic:
            e = man.subalgebras[key]
            ranks = [args.rank] if args.rank else e.ranks(args.rank_ceiling)
            for r in ranks:
                if not e.admits(r):
                    raise UsageError(f"{key} is not defined at rank {r}")
                L, S = tangent_model_subspace(TangentModel((), "", f"subalgebra:{key}"),
                                              {"r": r}, man)
                rep = is_lie_triple_system(L, S)
                res.add(f"{key}[r={r}]", rep.passed, algebra=L.name, dim=S.dim, codim=S.codim,
                        witness=list(rep.witness) if rep.witness else None)
            continue
        L, S = _manifest_model(ref)
        rep = is_lie_triple_system(L, S)
        res.add(key, rep.passed, algebra=L.name, dim=S.dim, codim=S.codim,
                witness=list(rep.witness) if rep.witness else None)
    return _report(args, [res])


def cmd_lts_search(args) -> int:
    from .chevalley import compact
    from .lts import is_lie_triple_system, search_lts

    t, r = _algebra_args(args)
    L = compact(t, r)
    if not 0 < args.codim < L.dimension:
        raise UsageError(f"--codim must lie strictly between 0 and {L.dimension}")
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.subspace_from:
        M, S = _manifest_model(args.subspace_from)
        if M.name != L.name:
            raise UsageError(f"{args.subspace_from} lives in {M.name}, not {L.name}")
        res = CheckResult("lts_check", module="lts", operation="is_lie_triple_system")
        rep = is_lie_triple_system(L, S)
        res.add(args.subspace_from, rep.passed and S.codim == args.codim, algebra=L.name,
                codim=S.codim, expected_codim=args.codim, lts=rep.passed,
                witness=list(rep.witness) if rep.witness else None)
        return _report(args, [res])
    rep = search_lts(L, args.codim, args.trials, args.seed)
    res = CheckResult("lts_search", module="lts", operation="search_lts")
    ok = args.expect is None or rep.successes == args.expect
    res.add(f"{L.name}/codim{args.codim}", ok, algebra=L.name, evidence="consistency only",
            expected_successes=args.expect, **rep.to_dict())
    return _report(args, [res])


def cmd_tables_dump(args) -> int:
    from .tables import dump_tables, load_tables

    rows = load_tables()
    if args.format == "json":
        out = []
        for r in rows:
            out.append({"id": r.row_id, "table": r.table_id, "block": r.block, "space": r.space,
                        "sigma": list(r.sigma_list), "dim": r.dim_formula, "value": r.value_formula,
                        "constraint": r.rank_constraint,
                        "instances": [{"params": env, "dim": r.dim(env), "value": r.value(env)}
                                      for env in r.assignments(args.rank_ceiling)]})
        print(json.dumps(out, indent=2))
    else:
        sys.stdout.write(dump_tables(rows))
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing

_INVOCATION_SKIP = {"func", "timestamp"}


def _report(args, results) -> int:
    inv = {k: v for k, v in sorted(vars(args).items()) if k not in _INVOCATION_SKIP}
    report = build_report(inv, results, args.timestamp)
    return emit(report, args.format)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "markdown"), default="json")
    common.add_argument("--rank-ceiling", type=int, default=DEFAULT_RANK_CEILING)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--heavy", action="store_true",
                        help="exhaustive Jacobi certification for every algebra")
    common.add_argument("--timestamp", default=None, help=argparse.SUPPRESS)

    p = _Parser(prog="lieindex", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"lieindex {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def algebra(sp):
        sp.add_argument("type", help="Cartan type A-G")
        sp.add_argument("rank", type=int)

    sp = sub.add_parser("dim", help="dimension of a compact simple Lie algebra")
    algebra(sp)
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("roots", parents=[common], help="enumerate roots")
    algebra(sp)
    sp.add_argument("--positive", action="store_true")
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("killing", parents=[common], help="Killing form and definiteness")
    algebra(sp)
    sp.add_argument("--form", choices=("compact", "chevalley"), default="compact")
    sp.add_argument("--matrix", action="store_true", help="include the full Gram matrix")
    sp.set_defaults(func=cmd_killing)

    sp = sub.add_parser("jacobi-check", parents=[common], help="Jacobi identity on basis triples")
    algebra(sp)
    sp.add_argument("--form", choices=("compact", "chevalley"), default="compact")
    sp.add_argument("--samples", type=int, default=100_000)
    sp.set_defaults(func=cmd_jacobi)

    sp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sp.add_argument("scope", choices=("all", "table1", "table2", "table3", "table4",
                                      "soundness", "row"))
    sp.add_argument("row_id", nargs="?", help="table row id (T1.8) or manifest id (e6-f4)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("lts-check", parents=[common], help="exhaustive Lie triple system check")
    sp.add_argument("models", nargs="*", help="manifest ids; all tangent models when omitted")
    sp.add_argument("--rank", type=int, default=None)
    sp.set_defaults(func=cmd_lts_check)

    sp = sub.add_parser("lts-search", parents=[common], help="random search for triple systems")
    algebra(sp)
    sp.add_argument("--codim", type=int, required=True)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--expect", type=int, default=None,
                    help="fail unless exactly this many trials succeed")
    sp.add_argument("--subspace-from", default=None, metavar="manifest:ID")
    sp.set_defaults(func=cmd_lts_search)

    sp = sub.add_parser("tables", help="table data")
    tsub = sp.add_subparsers(dest="action", required=True, parser_class=_Parser)
    dp = tsub.add_parser("dump", help="print the shipped table data")
    dp.add_argument("--format", choices=("tsv", "json"), default="tsv")
    dp.add_argument("--rank-ceiling", type=int, default=DEFAULT_RANK_CEILING)
    dp.set_defaults(func=cmd_tables_dump)
    return p


def main(argv=None) -> int:
    from .rootsystem import RootSystemError

    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "rank_ceiling", 1) < 1:
        parser.error("--rank-ceiling must be positive")
    try:
        return args.func(args)
    except (UsageError, RootSystemError) as exc:
        print(f"lieindex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
