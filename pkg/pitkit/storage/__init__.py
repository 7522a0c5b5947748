"""
验证运行的持久化（SQLAlchemy）
"""

from .database import Base, configure, drop_all_tables, get_engine, init_db, session_scope
from .models import AuditLog, EntryResultRecord, MetricSnapshot, VerificationRun
from .repository import AuditRepository, MetricsRepository, VerificationRepository

__all__ = [
    "AuditLog",
    "AuditRepository",
    "Base",
    "EntryResultRecord",
    "MetricSnapshot",
    "MetricsRepository",
    "VerificationRepository",
    "VerificationRun",
    "configure",
    "drop_all_tables",
    "get_engine",
    "init_db",
    "session_scope",
]
