"""
审计日志

记录目录验证运行中的事件，可导出到 JSON 文件或数据库
"""

import json
import logging
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

logger = logging.getLogger(__name__)


class AuditEventType(str, Enum):
    """审计事件类型"""
    RUN_START = "run_start"
    RUN_END = "run_end"

    ENTRY_START = "entry_start"
    ENTRY_PASS = "entry_pass"
    ENTRY_FAIL = "entry_fail"
    ENTRY_ERROR = "entry_error"
    ENTRY_SKIPPED = "entry_skipped"


class AuditEventCategory(str, Enum):
    RUN = "run"
    ENTRY = "entry"


@dataclass
class AuditEvent:
    """审计事件"""
    event_id: str
    event_type: AuditEventType
    event_category: AuditEventCategory

    action: str
    target: Optional[str] = None       # 条目 id

    run_id: Optional[str] = None

    status: str = "success"            # success, failure, skipped
    error_message: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)

    source: str = "cli"
    timestamp: datetime = field(default_factory=datetime.utcnow)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "event_id": self.event_id,
            "event_type": self.event_type.value,
            "event_category": self.event_category.value,
            "action": self.action,
            "target": self.target,
            "run_id": self.run_id,
            "status": self.status,
            "error_message": self.error_message,
            "details": self.details,
            "source": self.source,
            "timestamp": self.timestamp.isoformat(),
        }


class AuditLogger:
    """
    审计日志记录器

    事件保存在内存中（线程安全），超过 max_events 时丢弃最早的
    """

    EVENT_CATEGORY_MAP = {
        AuditEventType.RUN_START: AuditEventCategory.RUN,
        AuditEventType.RUN_END: AuditEventCategory.RUN,
    }

    def __init__(self, max_events: int = 10000):
        self.max_events = max_events
        self._events: List[AuditEvent] = []
        self._lock = threading.Lock()
        self._handlers: List[Callable[[AuditEvent], None]] = []

    def log(
        self,
        event_type: AuditEventType,
        action: str,
        target: str = None,
        run_id: str = None,
        status: str = "success",
        error_message: str = None,
        details: Dict[str, Any] = None,
    ) -> AuditEvent:
        event = AuditEvent(
            event_id=str(uuid.uuid4())[:16],
            event_type=event_type,
            event_category=self.EVENT_CATEGORY_MAP.get(event_type, AuditEventCategory.ENTRY),
            action=action,
            target=target,
            run_id=run_id,
            status=status,
            error_message=error_message,
            details=details or {},
        )

        with self._lock:
            self._events.append(event)
            if len(self._events) > self.max_events:
                self._events = self._events[-self.max_events:]

        for handler in self._handlers:
            try:
                handler(event)
            except Exception:
                logger.exception("审计处理器失败: %s", event.event_type.value)

        return event

    def log_run_start(self, run_id: str, entry_count: int, include_slow: bool) -> AuditEvent:
        return self.log(
            AuditEventType.RUN_START,
            action=f"开始验证 {entry_count} 个条目",
            run_id=run_id,
            details={"entries": entry_count, "include_slow": include_slow},
        )

    def log_entry_start(self, run_id: str, entry_id: str) -> AuditEvent:
        return self.log(
            AuditEventType.ENTRY_START,
            action=f"开始验证条目 {entry_id}",
            target=entry_id,
            run_id=run_id,
        )

    def log_run_end(self, run_id: str, passed: int, failed: int, errors: int) -> AuditEvent:
        return self.log(
            AuditEventType.RUN_END,
            action=f"验证结束: {passed} 通过, {failed} 失败, {errors} 错误",
            run_id=run_id,
            status="success" if failed == 0 and errors == 0 else "failure",
            details={"passed": passed, "failed": failed, "errors": errors},
        )

    def log_entry(self, run_id: str, entry_id: str, status: str,
                  duration_ms: float = None, error: str = None,
                  details: Dict[str, Any] = None) -> AuditEvent:
        """按条目状态（PASS/FAIL/ERROR/SKIPPED）记录"""
        event_type = {
            "PASS": AuditEventType.ENTRY_PASS,
            "FAIL": AuditEventType.ENTRY_FAIL,
            "ERROR": AuditEventType.ENTRY_ERROR,
            "SKIPPED": AuditEventType.ENTRY_SKIPPED,
        }[status]
        return self.log(
            event_type,
            action=f"条目 {entry_id}: {status}",
            target=entry_id,
            run_id=run_id,
            status={"PASS": "success", "SKIPPED": "skipped"}.get(status, "failure"),
            error_message=error,
            details={"duration_ms": duration_ms, **(details or {})},
        )

    def get_events(
        self,
        event_type: AuditEventType = None,
        run_id: str = None,
        target: str = None,
        limit: int = 100,
    ) -> List[AuditEvent]:
        """按时间倒序返回事件"""
        with self._lock:
            events = list(self._events)

        if event_type:
            events = [e for e in events if e.event_type == event_type]
        if run_id:
            events = [e for e in events if e.run_id == run_id]
        if target:
            events = [e for e in events if e.target == target]

        events.sort(key=lambda e: e.timestamp, reverse=True)
        return events[:limit]

    def add_handler(self, handler: Callable[[AuditEvent], None]):
        self._handlers.append(handler)

    def clear(self):
        with self._lock:
            self._events = []

    def export_to_db(self, session, events: List[AuditEvent] = None):
        """导出到数据库"""
        from ..storage.repository import AuditRepository

        repo = AuditRepository(session)
        with self._lock:
            events = list(events or self._events)

        for event in events:
            repo.log(
                event_type=event.event_type.value,
                event_category=event.event_category.value,
                action=event.action,
                run_id=event.run_id,
                target=event.target,
                details=event.details,
                status=event.status,
                error_message=event.error_message,
                source=event.source,
            )

    def export_to_file(self, filepath: str):
        with self._lock:
            events = [e.to_dict() for e in self._events]

        with open(filepath, 'w', encoding='utf-8') as f:
            json.dump(events, f, ensure_ascii=False, indent=2)


_logger: Optional[AuditLogger] = None


def get_audit_logger() -> AuditLogger:
    """获取全局审计日志器"""
    global _logger
    if _logger is None:
        _logger = AuditLogger()
    return _logger
