"""有限域、矩阵与经典群生成元"""

from .classical import (
    frobenius_action,
    gl_extra,
    gu_extra,
    sl_generators,
    sl_order,
    sp_generators,
    sp_order,
    su3_generators,
    su3_order,
)
from .field import FiniteField, make_field
from .matrix import Matrix, SemilinearElement, format_matrices

__all__ = [
    "FiniteField", "Matrix", "SemilinearElement", "format_matrices", "frobenius_action",
    "gl_extra", "gu_extra", "make_field", "sl_generators", "sl_order", "sp_generators",
    "sp_order", "su3_generators", "su3_order",
]
