"""
迷向点作用与伸缩迷向点作用（ΓU(3,q)）
"""

from __future__ import annotations

import logging
from typing import List, Sequence

from ..algebra.classical import frobenius_action, gu_extra, hermitian, su3_generators
from ..algebra.field import FiniteField
from ..algebra.matrix import Matrix, Vector
from ..perm.action import LabeledAction
from .scaled import ScaledConstruction, ScaledDomain, build_construction, check_r, monic_vectors

logger = logging.getLogger(__name__)


def isotropic_vectors(f: FiniteField) -> List[Vector]:
    """GF(q²)^3 中 (u, u) = 0 的首一向量，共 q³+1 个"""
    return [u for u in monic_vectors(f, 3) if hermitian(f, u, u) == 0]


def isotropic_action(gens: Sequence[Matrix], f: FiniteField, name: str = "isotropic") -> LabeledAction:
    domain = ScaledDomain(f, isotropic_vectors(f), 1)
    return LabeledAction(
        name=name,
        labels=domain.labels(),
        generators=[domain.permutation(g) for g in gens],
        source_generators=list(gens),
        homomorphism=domain.permutation,
    )


def scaled_isotropic_action(f: FiniteField, r: int) -> ScaledConstruction:
    """
    ΓU(3,q) 在伸缩迷向点上的作用（f 的阶为 q²）

    生成元顺序：ωI、SU(3,q) 生成元、diag(1, ω^{q-1}, 1)、φ。
    """
    check_r(f.q, r)
    domain = ScaledDomain(f, isotropic_vectors(f), r)
    extra = [gu_extra(f), frobenius_action(f, 3)]
    logger.info("伸缩迷向作用 q=%d r=%d: 次数 %d", f.subfield_order, r, domain.degree)
    return build_construction(f"scaled-isotropic(q={f.subfield_order},r={r})", domain,
                              su3_generators(f), extra, 3)
