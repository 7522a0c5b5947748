"""
目录验证

每个条目：构造基座作用 → 取中间群 → 逐个分类 → 与期望行按 (次数, 阶, r, 秩) 配对，
并附带几项交叉检查。条目之间互相独立，可以并发，结果按目录顺序合并。
"""

from __future__ import annotations

import logging
import time
import uuid
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from typing import Dict, List, Optional

from ..classify.pipeline import r_transitive_off_sigma, report_for
from ..classify.pit import cell_action_two_transitive, decompose
from ..errors import DataFileMissing, Mismatch, PitkitError
from ..governance.audit import AuditLogger
from ..governance.metrics import MetricsCollector
from ..models import (
    CatalogEntry,
    EntryResult,
    EntryStatus,
    ExpectedRow,
    FieldDiff,
    ProducedGroup,
    VerificationReport,
)
from .entries import builtin_catalog, select_entries
from .recipes import PlinthSetup, build_plinth

logger = logging.getLogger(__name__)


def produce_groups(setup: PlinthSetup, mode: str = "all") -> List[ProducedGroup]:
    """分类 setup 给出的每个中间群"""
    produced = []
    for group, meet in setup.groups(mode):
        d = decompose(group, setup.plinth, setup.centralizer)
        report = report_for(d)
        criteria = report.criteria
        produced.append(ProducedGroup(
            degree=group.degree,
            order=group.order(),
            r=d.r,
            rank=report.rank,
            special=report.special,
            line=report.line_tag if report.special else None,
            sigma_count=d.sigma_count,
            quotient=report.quotient_signature,
            criteria_agree=len(set(criteria.values())) == 1 if criteria else None,
            r_transitive=r_transitive_off_sigma(d) if report.special else None,
            cell_two_transitive=cell_action_two_transitive(d) if report.rank == 3 else None,
        ))
        if d.r != meet:
            logger.warning("|G ∩ C| 不一致: 分解给出 %d, 计数给出 %d", d.r, meet)
    return produced


def match_rows(expected: List[ExpectedRow], produced: List[ProducedGroup]) -> List[FieldDiff]:
    """
    期望行与产出群一一配对

    先按 (次数, 阶, r, 秩) 配对，再比较 special 与行号（期望中给出时）。
    """
    diffs: List[FieldDiff] = []
    free = list(range(len(produced)))
    for row in expected:
        hit = next((i for i in free if produced[i].key() == row.key()), None)
        if hit is None:
            diffs.append(FieldDiff(field="row", expected=list(row.key()), produced=None))
            continue
        free.remove(hit)
        group = produced[hit]
        if row.special is not None and group.special != row.special:
            diffs.append(FieldDiff(field=f"special@{row.key()}", expected=row.special,
                                   produced=group.special))
        if row.special and row.line is not None and group.line != row.line:
            diffs.append(FieldDiff(field=f"line@{row.key()}", expected=row.line,
                                   produced=group.line))
    for i in free:
        diffs.append(FieldDiff(field="row", expected=None, produced=list(produced[i].key())))
    return diffs


def cross_checks(setup: PlinthSetup, produced: List[ProducedGroup]) -> Dict[str, bool]:
    """秩 3 判据一致、R 在 Σ∖{σ} 上的传递性、胞腔上的 2-传递性、|C| = |N_M(R):R|"""
    checks = {
        "criteria_agree": all(p.criteria_agree is not False for p in produced),
        "r_transitive": all(
            p.r_transitive == (p.line != 7) for p in produced if p.special
        ),
        "cell_two_transitive": all(
            p.cell_two_transitive for p in produced if p.rank == 3
        ),
    }
    expected_c = setup.expected_centralizer_order()
    if expected_c is not None:
        checks["centralizer_order"] = setup.centralizer.order() == expected_c
    return checks


def run_entry(entry: CatalogEntry, strict: bool = False) -> EntryResult:
    """
    验证单个条目

    Args:
        strict: 为 True 时不符即抛出 Mismatch

    Raises:
        DataFileMissing: 非可选条目缺少数据文件
        Mismatch: strict 且结果不符
    """
    started = time.time()
    result = EntryResult(entry_id=entry.id, status=EntryStatus.PASS, expected=entry.expected)
    try:
        setup = build_plinth(entry.plinth, entry.lifts)
        if entry.plinth_order is not None and setup.plinth.order() != entry.plinth_order:
            result.diffs.append(FieldDiff(field="plinth_order", expected=entry.plinth_order,
                                          produced=setup.plinth.order()))
        result.produced = produce_groups(setup, entry.groups)
        result.diffs.extend(match_rows(entry.expected, result.produced))
        result.checks = cross_checks(setup, result.produced)
        if result.diffs or not all(result.checks.values()):
            result.status = EntryStatus.FAIL
    except DataFileMissing as e:
        if not entry.optional:
            raise
        result.status = EntryStatus.SKIPPED
        result.error = e.message
    finally:
        result.duration_ms = (time.time() - started) * 1000

    logger.info("条目 %s: %s (%.0f ms)", entry.id, result.status.value, result.duration_ms)
    if strict and result.status == EntryStatus.FAIL:
        raise Mismatch(f"条目 {entry.id} 与期望不符",
                       {"diffs": [d.model_dump() for d in result.diffs], "checks": result.checks})
    return result


class CatalogVerifier:
    """
    目录验证器

    负责一次完整运行：逐条目验证、记录审计事件与指标、汇总报告
    """

    def __init__(self, audit: Optional[AuditLogger] = None,
                 metrics: Optional[MetricsCollector] = None):
        self.audit = audit
        self.metrics = metrics

    def _run_one(self, run_id: str, entry: CatalogEntry) -> EntryResult:
        if self.audit:
            self.audit.log_entry_start(run_id, entry.id)
        try:
            result = run_entry(entry)
        except (PitkitError, ValueError) as e:
            result = EntryResult(entry_id=entry.id, status=EntryStatus.ERROR,
                                 expected=entry.expected, error=f"{type(e).__name__}: {e}",
                                 duration_ms=0.0)
            logger.error("条目 %s 出错: %s", entry.id, e)

        if self.audit:
            self.audit.log_entry(run_id, entry.id, result.status.value, result.duration_ms,
                                 error=result.error,
                                 details={"diffs": len(result.diffs), "groups": len(result.produced)})
        if self.metrics and result.status != EntryStatus.SKIPPED:
            self.metrics.record(
                run_id=run_id,
                target_id=entry.id,
                success=result.status == EntryStatus.PASS,
                duration_ms=result.duration_ms or 0.0,
                error_type=None if result.status == EntryStatus.PASS else result.status.value,
            )
        return result

    def verify(self, entries: List[CatalogEntry], include_slow: bool = False,
               jobs: int = 1) -> VerificationReport:
        """验证给定条目；jobs > 1 时并发，报告仍按目录顺序"""
        run_id = str(uuid.uuid4())[:8]
        report = VerificationReport(run_id=run_id, started_at=datetime.now(),
                                    include_slow=include_slow)
        if self.audit:
            self.audit.log_run_start(run_id, len(entries), include_slow)

        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(lambda e: self._run_one(run_id, e), entries))
        else:
            results = [self._run_one(run_id, e) for e in entries]
        for result in results:
            report.add(result)

        if self.audit:
            self.audit.log_run_end(run_id, report.passed, report.failed, report.errors)
        logger.info("验证 %s: %d 通过, %d 失败, %d 错误, %d 跳过", run_id,
                    report.passed, report.failed, report.errors, report.skipped)
        return report


def verify(include_slow: bool = False, only: Optional[List[str]] = None, jobs: int = 1,
           audit: Optional[AuditLogger] = None,
           metrics: Optional[MetricsCollector] = None) -> VerificationReport:
    """验证内置目录"""
    entries = select_entries(builtin_catalog(), only, include_slow)
    return CatalogVerifier(audit, metrics).verify(entries, include_slow, jobs)
