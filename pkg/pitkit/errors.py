"""
异常体系

所有库内错误都继承自 PitkitError；只有 CLI 负责把异常翻译成退出码。
"""

from typing import Any, Dict, Optional


class PitkitError(Exception):
    """pitkit 错误基类"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


# ==================== 置换群核心 ====================

class NotTransitive(PitkitError):
    """群在其作用域上不传递"""


class BlocksNotInvariant(PitkitError):
    """给定划分不是群不变的块系"""


class WitnessNotNormalizing(PitkitError):
    """见证元不正规化点稳定子"""


class NotSubgroup(PitkitError):
    """给定的群不是子群"""


class IndexOverflow(PitkitError):
    """陪集作用的次数超过上限"""


class GroupTooLarge(PitkitError):
    """群阶超过元素枚举上限"""


class BudgetExhausted(PitkitError):
    """搜索在预算内未能终止（结论未知，而非证明不同）"""


class IndexTooLarge(PitkitError):
    """中间子群枚举的指数过大"""


# ==================== 代数 ====================

class NotPrime(PitkitError):
    """参数要求素数"""


class FormNotPreserved(PitkitError):
    """矩阵不保持给定的形式"""


class RNotDividing(PitkitError):
    """r 不整除所需的数"""


class NotInStabilizer(PitkitError):
    """元素不在二次型稳定子中"""


class NotLiftable(PitkitError):
    """自同构不能提升到陪集作用"""


# ==================== 分类 ====================

class SigmaNotFixed(PitkitError):
    """子群 R 不固定点 σ"""


class UnknownLine(PitkitError):
    """未知的表行号"""


class PreconditionFailed(PitkitError):
    """前置条件不满足"""


class NotPartialLinearSpace(PitkitError):
    """关联结构不是部分线性空间"""

    def __init__(self, axiom: str, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, {"axiom": axiom, **(details or {})})
        self.axiom = axiom


# ==================== 目录与 CLI ====================

class DataFileMissing(PitkitError):
    """生成元数据文件缺失"""


class Mismatch(PitkitError):
    """验证结果与期望值不符"""


class ParseError(PitkitError):
    """文本格式解析失败"""


class OrderMismatch(PitkitError):
    """导入的群阶与期望不符"""


class UsageError(PitkitError):
    """命令行用法错误"""
