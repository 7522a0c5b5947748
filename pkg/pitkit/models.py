from pydantic import BaseModel, Field
from typing import Optional, Any
from datetime import datetime
from enum import Enum


class EntryStatus(str, Enum):
    """目录条目的验证状态"""
    PASS = "PASS"
    FAIL = "FAIL"
    ERROR = "ERROR"
    SKIPPED = "SKIPPED"


# ============================================================
# 分类结果
# ============================================================

class QuotientSignature(BaseModel):
    """G^Σ 的签名：阶、秩、子轨道长度，匹配时附名称"""
    degree: int
    order: int
    rank: int
    suborbits: list[int] = []
    name: Optional[str] = None


class SpecialPairModel(BaseModel):
    """特殊对判定结果"""
    holds: bool
    p: Optional[int] = None
    c: Optional[int] = None
    r: Optional[int] = None
    failed_condition: Optional[str] = None


class PitReport(BaseModel):
    """单个群的分类记录（CLI 输出契约，字段名稳定）"""
    degree: int
    order: int
    r: Optional[int] = None              # |C|；非真内传递时为空
    sigma_count: Optional[int] = None    # |Σ|
    rank: Optional[int] = None
    special: Optional[bool] = None
    plinth_order: Optional[int] = None
    quotient_signature: Optional[QuotientSignature] = None
    line_tag: Optional[int] = None       # 表中行号
    innately_transitive: bool = True
    proper: bool = True
    quasiprimitive: Optional[bool] = None
    plinth_abelian: Optional[bool] = None
    verdict: Optional[SpecialPairModel] = None
    criteria: Optional[dict[str, bool]] = None


# ============================================================
# 目录
# ============================================================

class ExpectedRow(BaseModel):
    """期望的一行（数据，不从计算结果回填）"""
    trans_id: Optional[str] = None       # 仅作文档
    degree: int
    order: int
    r: int
    rank: Optional[int] = None
    special: Optional[bool] = None
    line: Optional[int] = None
    quotient: Optional[str] = None

    def key(self) -> tuple:
        return (self.degree, self.order, self.r, self.rank)


class CatalogEntry(BaseModel):
    """目录条目：构造配方 + 期望行"""
    id: str
    title: str = ""
    plinth: dict[str, Any]               # 配方（kind + 参数）
    groups: str = "all"                  # all / centralizer_product / normalizer
    lifts: list[str] = []                # 自同构名
    plinth_order: Optional[int] = None
    expected: list[ExpectedRow]
    optional: bool = False               # 需要外部数据
    slow: bool = False
    notes: str = ""


class ProducedGroup(BaseModel):
    """条目构造出的一个群"""
    degree: int
    order: int
    r: int
    rank: int
    special: Optional[bool] = None
    line: Optional[int] = None
    sigma_count: int
    quotient: Optional[QuotientSignature] = None
    criteria_agree: Optional[bool] = None
    r_transitive: Optional[bool] = None
    cell_two_transitive: Optional[bool] = None

    def key(self) -> tuple:
        return (self.degree, self.order, self.r, self.rank)


class FieldDiff(BaseModel):
    """期望与产出之间的差异"""
    field: str
    expected: Any = None
    produced: Any = None


class EntryResult(BaseModel):
    """单个条目的验证结果"""
    entry_id: str
    status: EntryStatus
    produced: list[ProducedGroup] = []
    expected: list[ExpectedRow] = []
    diffs: list[FieldDiff] = []
    checks: dict[str, bool] = {}
    error: Optional[str] = None
    duration_ms: Optional[float] = None


class VerificationReport(BaseModel):
    """一次完整验证"""
    run_id: str
    started_at: datetime = Field(default_factory=datetime.now)
    include_slow: bool = False
    results: list[EntryResult] = []
    passed: int = 0
    failed: int = 0
    errors: int = 0
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.errors == 0

    def add(self, result: EntryResult) -> None:
        self.results.append(result)
        if result.status == EntryStatus.PASS:
            self.passed += 1
        elif result.status == EntryStatus.FAIL:
            self.failed += 1
        elif result.status == EntryStatus.ERROR:
            self.errors += 1
        else:
            self.skipped += 1

    def deterministic_dump(self) -> dict:
        """去掉时间字段后的输出，两次运行逐字节一致"""
        return self.model_dump(
            mode="json",
            exclude={"run_id": True, "started_at": True,
                     "results": {"__all__": {"duration_ms"}}},
        )
