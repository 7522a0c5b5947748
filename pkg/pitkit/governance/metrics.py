"""
指标收集

记录每个目录条目的耗时与结果，汇总成功率、耗时分位数和最慢条目
"""

import threading
from collections import defaultdict
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional


class MetricType(str, Enum):
    SUCCESS_RATE = "success_rate"
    DURATION = "duration"


class MetricScope(str, Enum):
    ENTRY = "entry"
    RUN = "run"


@dataclass
class EntryMetric:
    """单个条目的一次验证"""
    run_id: str
    scope: MetricScope
    target_id: str
    success: bool
    duration_ms: float
    timestamp: datetime = field(default_factory=datetime.utcnow)
    error_type: Optional[str] = None
    metadata: Dict[str, Any] = field(default_factory=dict)


@dataclass
class AggregatedMetrics:
    """聚合指标"""
    scope: MetricScope
    target_id: str

    total_count: int = 0
    success_count: int = 0
    error_count: int = 0

    avg_duration_ms: float = 0.0
    min_duration_ms: float = 0.0
    max_duration_ms: float = 0.0
    p50_duration_ms: float = 0.0
    p90_duration_ms: float = 0.0

    @property
    def success_rate(self) -> float:
        if self.total_count == 0:
            return 0.0
        return self.success_count / self.total_count

    def to_dict(self) -> Dict[str, Any]:
        return {
            "total": self.total_count,
            "success": self.success_count,
            "errors": self.error_count,
            "success_rate": round(self.success_rate, 4),
            "avg_duration_ms": round(self.avg_duration_ms, 1),
            "p50_duration_ms": round(self.p50_duration_ms, 1),
            "p90_duration_ms": round(self.p90_duration_ms, 1),
        }


class MetricsCollector:
    """
    指标收集器（线程安全）

    harness 可并发验证条目，各线程直接调用 record
    """

    def __init__(self):
        self._metrics: List[EntryMetric] = []
        self._lock = threading.Lock()

    def record(
        self,
        run_id: str,
        target_id: str,
        success: bool,
        duration_ms: float,
        scope: MetricScope = MetricScope.ENTRY,
        error_type: str = None,
        **metadata
    ):
        metric = EntryMetric(
            run_id=run_id,
            scope=scope,
            target_id=target_id,
            success=success,
            duration_ms=duration_ms,
            error_type=error_type,
            metadata=metadata,
        )
        with self._lock:
            self._metrics.append(metric)

    def _filter(self, run_id: str = None, target_id: str = None,
                scope: MetricScope = MetricScope.ENTRY) -> List[EntryMetric]:
        with self._lock:
            metrics = list(self._metrics)
        metrics = [m for m in metrics if m.scope == scope]
        if run_id:
            metrics = [m for m in metrics if m.run_id == run_id]
        if target_id:
            metrics = [m for m in metrics if m.target_id == target_id]
        return metrics

    def get_success_rate(self, run_id: str = None) -> float:
        metrics = self._filter(run_id)
        if not metrics:
            return 0.0
        return sum(1 for m in metrics if m.success) / len(metrics)

    def get_percentile_duration(self, percentile: int, run_id: str = None) -> float:
        metrics = self._filter(run_id)
        if not metrics:
            return 0.0
        durations = sorted(m.duration_ms for m in metrics)
        index = int(len(durations) * percentile / 100)
        return durations[min(index, len(durations) - 1)]

    def get_aggregated_metrics(self, run_id: str = None, target_id: str = None) -> AggregatedMetrics:
        metrics = self._filter(run_id, target_id)
        if not metrics:
            return AggregatedMetrics(scope=MetricScope.ENTRY, target_id=target_id or "all")

        durations = sorted(m.duration_ms for m in metrics)
        return AggregatedMetrics(
            scope=MetricScope.ENTRY,
            target_id=target_id or "all",
            total_count=len(metrics),
            success_count=sum(1 for m in metrics if m.success),
            error_count=sum(1 for m in metrics if not m.success),
            avg_duration_ms=sum(durations) / len(durations),
            min_duration_ms=durations[0],
            max_duration_ms=durations[-1],
            p50_duration_ms=durations[len(durations) // 2],
            p90_duration_ms=durations[min(int(len(durations) * 0.9), len(durations) - 1)],
        )

    def slowest(self, limit: int = 5, run_id: str = None) -> List[Dict[str, Any]]:
        metrics = sorted(self._filter(run_id), key=lambda m: m.duration_ms, reverse=True)
        return [{"entry": m.target_id, "duration_ms": round(m.duration_ms, 1)} for m in metrics[:limit]]

    def get_top_errors(self, limit: int = 10, run_id: str = None) -> List[Dict[str, Any]]:
        counts = defaultdict(int)
        for m in self._filter(run_id):
            if not m.success and m.error_type:
                counts[(m.target_id, m.error_type)] += 1
        ranked = sorted(counts.items(), key=lambda x: x[1], reverse=True)
        return [
            {"target_id": key[0], "error_type": key[1], "count": count}
            for key, count in ranked[:limit]
        ]

    def summary(self, run_id: str = None) -> Dict[str, Any]:
        """验证摘要中的指标部分"""
        data = self.get_aggregated_metrics(run_id).to_dict()
        data["slowest"] = self.slowest(run_id=run_id)
        return data

    def export_to_db(self, session, run_id: str = None):
        """导出聚合快照到数据库"""
        from ..storage.repository import MetricsRepository

        repo = MetricsRepository(session)
        metrics = self.get_aggregated_metrics(run_id)
        if metrics.total_count > 0:
            repo.record_snapshot(
                metric_type=MetricType.SUCCESS_RATE.value,
                metric_scope=MetricScope.ENTRY.value,
                run_id=run_id,
                value=metrics.success_rate,
                count=metrics.total_count,
                avg_value=metrics.avg_duration_ms,
                p50_value=metrics.p50_duration_ms,
                p90_value=metrics.p90_duration_ms,
            )

    def clear(self):
        with self._lock:
            self._metrics = []


_collector: Optional[MetricsCollector] = None


def get_metrics_collector() -> MetricsCollector:
    """获取全局指标收集器"""
    global _collector
    if _collector is None:
        _collector = MetricsCollector()
    return _collector
