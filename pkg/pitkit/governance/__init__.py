"""
治理：审计日志与验证指标
"""

from .audit import AuditEvent, AuditEventType, AuditLogger, get_audit_logger
from .metrics import AggregatedMetrics, MetricsCollector, get_metrics_collector

__all__ = [
    "AggregatedMetrics",
    "AuditEvent",
    "AuditEventType",
    "AuditLogger",
    "MetricsCollector",
    "get_audit_logger",
    "get_metrics_collector",
]
