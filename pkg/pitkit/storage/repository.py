"""
数据仓库（Repository）
"""

import uuid
from datetime import datetime, timedelta
from typing import List, Optional

from sqlalchemy import desc
from sqlalchemy.orm import Session

from ..models import EntryResult, VerificationReport
from .models import AuditLog, EntryResultRecord, MetricSnapshot, VerificationRun


class BaseRepository:
    """Repository 基类"""

    def __init__(self, session: Optional[Session] = None):
        self._session = session

    @property
    def session(self) -> Session:
        if self._session is None:
            raise RuntimeError("未提供 Session，请在 session_scope() 中使用或传入 session")
        return self._session


class VerificationRepository(BaseRepository):
    """验证运行仓库"""

    def create_run(self, run_id: str, include_slow: bool = False) -> VerificationRun:
        run = VerificationRun(run_id=run_id, include_slow=include_slow)
        self.session.add(run)
        self.session.flush()
        return run

    def get_run(self, run_id: str) -> Optional[VerificationRun]:
        return self.session.query(VerificationRun).filter(
            VerificationRun.run_id == run_id
        ).first()

    def add_entry_result(self, run_id: str, result: EntryResult) -> EntryResultRecord:
        first = result.produced[0] if result.produced else None
        record = EntryResultRecord(
            run_id=run_id,
            entry_id=result.entry_id,
            status=result.status.value,
            degree=first.degree if first else None,
            order=first.order if first else None,
            r=first.r if first else None,
            rank=first.rank if first else None,
            special=first.special if first else None,
            expected=[row.model_dump(mode="json") for row in result.expected],
            produced=[g.model_dump(mode="json") for g in result.produced],
            diff=[d.model_dump(mode="json") for d in result.diffs],
            error_message=result.error,
            duration_ms=result.duration_ms,
        )
        self.session.add(record)
        self.session.flush()
        return record

    def finish_run(self, report: VerificationReport, duration_ms: float = None) -> Optional[VerificationRun]:
        run = self.get_run(report.run_id)
        if run is None:
            return None
        run.finished_at = datetime.utcnow()
        run.duration_ms = duration_ms
        run.passed = report.passed
        run.failed = report.failed
        run.errors = report.errors
        run.skipped = report.skipped
        self.session.flush()
        return run

    def save_report(self, report: VerificationReport, duration_ms: float = None) -> VerificationRun:
        """整份报告一次写入"""
        run = self.create_run(report.run_id, report.include_slow)
        run.started_at = report.started_at
        for result in report.results:
            self.add_entry_result(report.run_id, result)
        self.finish_run(report, duration_ms)
        return run

    def latest_runs(self, limit: int = 10) -> List[VerificationRun]:
        return self.session.query(VerificationRun).order_by(
            desc(VerificationRun.started_at), desc(VerificationRun.id)
        ).limit(limit).all()

    def entry_history(self, entry_id: str, limit: int = 20) -> List[EntryResultRecord]:
        return self.session.query(EntryResultRecord).filter(
            EntryResultRecord.entry_id == entry_id
        ).order_by(desc(EntryResultRecord.id)).limit(limit).all()


class AuditRepository(BaseRepository):
    """审计日志仓库"""

    def log(self, event_type: str, action: str, run_id: str = None, **kwargs) -> AuditLog:
        log = AuditLog(
            log_id=str(uuid.uuid4())[:16],
            event_type=event_type,
            action=action,
            run_id=run_id,
            **kwargs
        )
        self.session.add(log)
        self.session.flush()
        return log

    def get_by_run(self, run_id: str) -> List[AuditLog]:
        return self.session.query(AuditLog).filter(
            AuditLog.run_id == run_id
        ).order_by(AuditLog.timestamp).all()

    def search(self, event_type: str = None, target: str = None, limit: int = 100) -> List[AuditLog]:
        query = self.session.query(AuditLog)
        if event_type:
            query = query.filter(AuditLog.event_type == event_type)
        if target:
            query = query.filter(AuditLog.target == target)
        return query.order_by(desc(AuditLog.timestamp)).limit(limit).all()


class MetricsRepository(BaseRepository):
    """指标仓库"""

    def record_snapshot(
        self,
        metric_type: str,
        metric_scope: str,
        value: float,
        run_id: str = None,
        window_start: datetime = None,
        window_end: datetime = None,
        **kwargs
    ) -> MetricSnapshot:
        now = datetime.utcnow()
        snapshot = MetricSnapshot(
            metric_type=metric_type,
            metric_scope=metric_scope,
            run_id=run_id,
            value=value,
            window_start=window_start or now - timedelta(minutes=1),
            window_end=window_end or now,
            **kwargs
        )
        self.session.add(snapshot)
        self.session.flush()
        return snapshot

    def get_latest(self, metric_type: str, metric_scope: str) -> Optional[MetricSnapshot]:
        return self.session.query(MetricSnapshot).filter(
            MetricSnapshot.metric_type == metric_type,
            MetricSnapshot.metric_scope == metric_scope,
        ).order_by(desc(MetricSnapshot.window_end)).first()
