"""
命令行入口

每条记录以一行 JSON 输出到标准输出；日志写到标准错误。
退出码：0 全部通过，1 验证不符或其他库错误，2 用法或解析错误。
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Any, Dict, List, Optional

from .config import get_settings
from .errors import (
    GroupTooLarge,
    IndexOverflow,
    Mismatch,
    NotPartialLinearSpace,
    ParseError,
    PitkitError,
    UnknownLine,
    UsageError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def emit(record: Any) -> None:
    if hasattr(record, "model_dump"):
        record = record.model_dump(mode="json")
    print(json.dumps(record, ensure_ascii=False, sort_keys=False), flush=True)


def setup_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, get_settings().log_level, logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


# ==================== construct ====================

def _construct(args) -> Dict[str, Any]:
    from .actions.projective import scaled_projective_action
    from .actions.ree import ree3_line7_action
    from .actions.symplectic import quadratic_form_action
    from .actions.unitary import scaled_isotropic_action
    from .algebra.field import make_field

    if args.recipe == "scaled-projective":
        built = scaled_projective_action(args.d, make_field(args.q0, args.a), args.r)
        return {"action": built.action, "field": built.field, "plinth": built.plinth,
                "normalizer": built.normalizer, "centralizer": built.centralizer}
    if args.recipe == "scaled-isotropic":
        built = scaled_isotropic_action(make_field(args.q0, args.a), args.r)
        return {"action": built.action, "field": built.field, "plinth": built.plinth,
                "normalizer": built.normalizer, "centralizer": built.centralizer}
    if args.recipe == "quadratic-forms":
        if args.epsilon not in ("+", "-"):
            raise UsageError("quadratic-forms 需要 --epsilon + 或 -")
        action = quadratic_form_action(args.d)[args.epsilon]
        return {"action": action, "field": None, "plinth": action.group,
                "normalizer": action.group, "centralizer": None}
    if args.recipe == "line7":
        line7 = ree3_line7_action()
        return {"action": line7.omega, "field": None, "plinth": line7.omega.group,
                "normalizer": line7.normalizer, "centralizer": None}
    raise UsageError(f"未知配方 {args.recipe!r}")


def cmd_construct(args) -> int:
    from .algebra.matrix import Matrix, SemilinearElement, format_matrices
    from .perm.permutation import format_permutations

    built = _construct(args)
    action = built["action"]
    if args.dump_domain:
        print("\n".join(action.dump_domain()))
        return EXIT_OK
    if args.dump_generators:
        if built["field"] is None:
            raise UsageError(f"配方 {args.recipe} 不是矩阵作用")
        matrices = [g.matrix if isinstance(g, SemilinearElement) else g
                    for g in action.source_generators]
        sys.stdout.write(format_matrices(built["field"], [m for m in matrices if isinstance(m, Matrix)]))
        return EXIT_OK
    if args.dump_perms:
        sys.stdout.write(format_permutations(action.degree, built["normalizer"].generators))
        return EXIT_OK

    normalizer = built["normalizer"]
    emit({
        "recipe": args.recipe,
        "name": action.name,
        "degree": action.degree,
        "plinth_order": built["plinth"].order(),
        "normalizer_order": normalizer.order(),
        "centralizer_order": built["centralizer"].order() if built["centralizer"] else None,
        "rank": normalizer.rank(),
    })
    return EXIT_OK


# ==================== classify ====================

def cmd_classify(args) -> int:
    from .catalog.ingest import ingest_generators
    from .classify.pipeline import classify_group

    group = ingest_generators(args.file, args.order)
    emit(classify_group(group))
    return EXIT_OK


# ==================== special-pair ====================

def _line_number(text: str) -> int:
    raw = text.lower().removeprefix("line")
    if not raw.isdigit():
        raise UsageError(f"无法识别的行号 {text!r}（例如 line2 或 2）")
    return int(raw)


def _oracle_group(t):
    """按行参数构造 X；不支持的行返回 None"""
    from .actions.ree import ree3_line7_action
    from .actions.symplectic import quadratic_form_action
    from .catalog.corpus import linear_group, symmetric_group, unitary_group
    from .catalog.ingest import ingest_generators
    from .catalog.recipes import alternating_base

    if t.line == 1:
        return symmetric_group(5) if t.x_index == 2 else alternating_base(5).plinth
    if t.line == 2 and None not in (t.d, t.q0, t.a, t.j):
        return linear_group(t.d, t.q0, t.a, j=t.j)
    if t.line == 3:
        return linear_group(3, 2)
    if t.line == 4 and None not in (t.q0, t.a, t.j):
        return unitary_group(t.q0, t.a, j=t.j)
    if t.line == 5 and t.d == 3 and t.epsilon in ("+", "-"):
        return quadratic_form_action(3)[t.epsilon].group
    if t.line == 7:
        return ree3_line7_action().quotient_on_sigma
    if t.line == 8:
        return ingest_generators("m11.perm", 7920, name="M11")
    return None


def cmd_special_pair(args) -> int:
    from .classify.special import oracle_special_scan, special_r_values
    from .classify.table1 import Table1Instance, table1_predicate

    t = Table1Instance(
        line=_line_number(args.line), r=args.r, d=args.d, q0=args.q0, a=args.a, j=args.j,
        x_index=args.x_index, epsilon=args.epsilon, q=args.q,
    )
    try:
        predicted = table1_predicate(t)
    except TypeError:
        raise UsageError(f"第 {t.line} 行缺少参数", {"params": t.__dict__})
    except UnknownLine as e:
        raise UsageError(e.message, e.details)
    record: Dict[str, Any] = {"line": t.line, "r": t.r, "special": predicted, "oracle": None}

    if not args.no_oracle:
        try:
            x = _oracle_group(t)
            if x is not None:
                values = special_r_values(oracle_special_scan(x))
                record["oracle"] = {"degree": x.degree, "order": x.order(),
                                    "special_r": values, "special": t.r in values}
        except (GroupTooLarge, IndexOverflow, ValueError) as e:
            record["oracle"] = {"skipped": str(e)}
    emit(record)
    oracle = record["oracle"] or {}
    if "special" in oracle and oracle["special"] != predicted:
        return EXIT_FAIL
    return EXIT_OK


# ==================== catalog ====================

def cmd_catalog_verify(args) -> int:
    from .catalog.entries import builtin_catalog, select_entries
    from .catalog.harness import CatalogVerifier
    from .governance.audit import get_audit_logger
    from .governance.metrics import get_metrics_collector

    entries = select_entries(builtin_catalog(), args.only, args.include_slow)
    audit = get_audit_logger()
    metrics = get_metrics_collector()
    started = time.time()
    report = CatalogVerifier(audit, metrics).verify(entries, args.include_slow, args.jobs)
    duration_ms = (time.time() - started) * 1000

    dump = report.deterministic_dump()
    for result in dump["results"]:
        emit(result)
    emit({"summary": {k: dump[k] for k in ("include_slow", "passed", "failed", "errors", "skipped")},
          "ok": report.ok})
    if args.timings:
        emit({"timings": metrics.summary(report.run_id)})

    if args.audit_file:
        audit.export_to_file(args.audit_file)
    if args.record:
        from .storage.database import init_db, session_scope
        from .storage.repository import VerificationRepository

        init_db()
        with session_scope() as session:
            VerificationRepository(session).save_report(report, duration_ms)
            audit.export_to_db(session, audit.get_events(run_id=report.run_id, limit=10_000))
            metrics.export_to_db(session, report.run_id)
        logger.info("已记录运行 %s", report.run_id)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_catalog_list(args) -> int:
    from .catalog.entries import builtin_catalog

    for entry in builtin_catalog():
        emit({
            "id": entry.id,
            "title": entry.title,
            "rows": len(entry.expected),
            "degrees": sorted({row.degree for row in entry.expected}),
            "slow": entry.slow,
            "optional": entry.optional,
        })
    return EXIT_OK


def cmd_catalog_history(args) -> int:
    from .storage.database import init_db, session_scope
    from .storage.repository import VerificationRepository

    init_db()
    with session_scope() as session:
        repo = VerificationRepository(session)
        if args.entry:
            for record in repo.entry_history(args.entry, args.limit):
                emit(record.to_dict())
        else:
            for run in repo.latest_runs(args.limit):
                emit(run.to_dict())
    return EXIT_OK


def cmd_corpus_check(args) -> int:
    from .catalog.corpus import compare_with_oracle, desk_corpus

    ok = True
    for item in desk_corpus():
        if item.slow and not args.include_slow:
            continue
        comparison = compare_with_oracle(item)
        emit(comparison.to_dict())
        ok = ok and comparison.agree and comparison.unique
    return EXIT_OK if ok else EXIT_FAIL


# ==================== pls ====================

def cmd_pls_verify(args) -> int:
    from .catalog.ingest import ingest_generators
    from .classify.incidence import read_design, verify_pls

    structure = read_design(args.design)
    group = ingest_generators(args.group)
    try:
        report = verify_pls(structure, group)
    except NotPartialLinearSpace as e:
        emit({"ok": False, **e.to_dict()})
        return EXIT_FAIL
    except ValueError as e:
        raise UsageError(str(e))
    emit({"ok": report.ok, **report.to_dict()})
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_pls_example(args) -> int:
    from .classify.incidence import pg32_structure, verify_pls, z14_group, z14_structure

    if args.name == "z14":
        structure = z14_structure()
        group = z14_group(structure)
    else:
        structure, group = pg32_structure()
    if args.dump:
        sys.stdout.write(structure.to_text())
        return EXIT_OK
    report = verify_pls(structure, group)
    emit({"example": args.name, "ok": report.ok, **report.to_dict()})
    return EXIT_OK if report.ok else EXIT_FAIL


# ==================== 解析器 ====================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pitkit", description="内传递置换群工具包")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v 信息, -vv 调试")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="构造并导出一个作用")
    p.add_argument("recipe", choices=["scaled-projective", "scaled-isotropic", "quadratic-forms", "line7"])
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--q0", type=int, default=5)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--epsilon", choices=["+", "-"])
    dump = p.add_mutually_exclusive_group()
    dump.add_argument("--dump-domain", action="store_true", help="点标签")
    dump.add_argument("--dump-generators", action="store_true", help="矩阵生成元")
    dump.add_argument("--dump-perms", action="store_true", help="N 的置换生成元")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("classify", help="分类置换文件中的群")
    p.add_argument("file")
    p.add_argument("--order", type=int, help="期望的群阶")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("special-pair", help="按表格行判定特殊对")
    p.add_argument("line", help="行号，如 line2")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--q0", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--x-index", dest="x_index", type=int)
    p.add_argument("--epsilon", choices=["+", "-"])
    p.add_argument("--q", type=int)
    p.add_argument("--no-oracle", action="store_true", help="不做穷举对照")
    p.set_defaults(func=cmd_special_pair)

    catalog = sub.add_parser("catalog", help="内置目录").add_subparsers(dest="catalog_command", required=True)
    p = catalog.add_parser("verify", help="验证目录")
    p.add_argument("--include-slow", action="store_true")
    p.add_argument("--only", nargs="+", metavar="ID")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--record", action="store_true", help="写入数据库")
    p.add_argument("--audit-file", help="审计事件导出为 JSON")
    p.add_argument("--timings", action="store_true", help="输出耗时统计")
    p.set_defaults(func=cmd_catalog_verify)
    p = catalog.add_parser("list", help="列出条目")
    p.set_defaults(func=cmd_catalog_list)
    p = catalog.add_parser("history", help="已记录的运行")
    p.add_argument("--limit", type=int, default=10)
    p.add_argument("--entry", help="只看某个条目")
    p.set_defaults(func=cmd_catalog_history)

    p = sub.add_parser("corpus", help="表格谓词与神谕对照")
    p.add_argument("action", choices=["check"])
    p.add_argument("--include-slow", action="store_true")
    p.set_defaults(func=cmd_corpus_check)

    pls = sub.add_parser("pls", help="部分线性空间").add_subparsers(dest="pls_command", required=True)
    p = pls.add_parser("verify", help="验证设计与群")
    p.add_argument("design")
    p.add_argument("group")
    p.set_defaults(func=cmd_pls_verify)
    p = pls.add_parser("example", help="内置例子")
    p.add_argument("name", choices=["z14", "pg32"])
    p.add_argument("--dump", action="store_true", help="只输出设计文件")
    p.set_defaults(func=cmd_pls_example)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    setup_logging(args.verbose)
    if getattr(args, "jobs", 1) < 1:
        emit(UsageError("--jobs 必须 ≥ 1").to_dict())
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ParseError) as e:
        emit(e.to_dict())
        return EXIT_USAGE
    except Mismatch as e:
        emit(e.to_dict())
        return EXIT_FAIL
    except PitkitError as e:
        logger.error("%s: %s", type(e).__name__, e.message)
        emit(e.to_dict())
        return EXIT_FAIL


cli_main = main


if __name__ == "__main__":
    sys.exit(main())
