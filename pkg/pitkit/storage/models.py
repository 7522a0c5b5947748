"""
数据库 ORM 模型
"""

from datetime import datetime

from sqlalchemy import (
    Boolean, Column, DateTime, Float, ForeignKey, Index, Integer, JSON, String, Text,
)
from sqlalchemy.orm import relationship

from .database import Base


class VerificationRun(Base):
    """
    验证运行表

    每次 catalog verify --record 一行
    """
    __tablename__ = "verification_runs"

    id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(String(64), unique=True, nullable=False, index=True)

    started_at = Column(DateTime, default=datetime.utcnow)
    finished_at = Column(DateTime)
    duration_ms = Column(Float)

    passed = Column(Integer, default=0)
    failed = Column(Integer, default=0)
    errors = Column(Integer, default=0)
    skipped = Column(Integer, default=0)
    include_slow = Column(Boolean, default=False)

    entries = relationship("EntryResultRecord", back_populates="run", cascade="all, delete-orphan")

    def to_dict(self) -> dict:
        return {
            "run_id": self.run_id,
            "started_at": self.started_at.isoformat() if self.started_at else None,
            "finished_at": self.finished_at.isoformat() if self.finished_at else None,
            "duration_ms": self.duration_ms,
            "passed": self.passed,
            "failed": self.failed,
            "errors": self.errors,
            "skipped": self.skipped,
            "include_slow": self.include_slow,
        }


class EntryResultRecord(Base):
    """条目结果表"""
    __tablename__ = "entry_results"

    id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(String(64), ForeignKey("verification_runs.run_id", ondelete="CASCADE"),
                    nullable=False, index=True)
    entry_id = Column(String(64), nullable=False)
    status = Column(String(16), nullable=False)          # PASS, FAIL, ERROR, SKIPPED

    # 第一个产出群的摘要
    degree = Column(Integer)
    order = Column(Integer)
    r = Column(Integer)
    rank = Column(Integer)
    special = Column(Boolean)

    expected = Column(JSON)
    produced = Column(JSON)
    diff = Column(JSON)
    error_message = Column(Text)
    duration_ms = Column(Float)
    created_at = Column(DateTime, default=datetime.utcnow)

    run = relationship("VerificationRun", back_populates="entries")

    __table_args__ = (
        Index("ix_entry_results_entry", "entry_id"),
    )

    def to_dict(self) -> dict:
        return {
            "run_id": self.run_id,
            "entry_id": self.entry_id,
            "status": self.status,
            "degree": self.degree,
            "order": self.order,
            "r": self.r,
            "rank": self.rank,
            "special": self.special,
            "duration_ms": self.duration_ms,
        }


class AuditLog(Base):
    """审计日志表"""
    __tablename__ = "audit_logs"

    id = Column(Integer, primary_key=True, autoincrement=True)
    log_id = Column(String(64), unique=True, nullable=False, index=True)

    event_type = Column(String(64), nullable=False)      # run_start, entry_pass, ...
    event_category = Column(String(32))                  # run, entry
    run_id = Column(String(64), index=True)

    action = Column(String(256), nullable=False)
    target = Column(String(256))
    details = Column(JSON)

    status = Column(String(32))                          # success, failure, skipped
    error_message = Column(Text)
    source = Column(String(64))

    timestamp = Column(DateTime, default=datetime.utcnow, index=True)


class MetricSnapshot(Base):
    """指标快照表"""
    __tablename__ = "metric_snapshots"

    id = Column(Integer, primary_key=True, autoincrement=True)

    metric_type = Column(String(64), nullable=False)     # success_rate, duration
    metric_scope = Column(String(32), nullable=False)    # entry, run
    run_id = Column(String(64), index=True)

    window_start = Column(DateTime, nullable=False)
    window_end = Column(DateTime, nullable=False)

    value = Column(Float, nullable=False)
    count = Column(Integer)
    avg_value = Column(Float)
    p50_value = Column(Float)
    p90_value = Column(Float)

    created_at = Column(DateTime, default=datetime.utcnow)
