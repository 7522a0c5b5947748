"""
射影点作用与伸缩射影点作用
"""

from __future__ import annotations

import logging
from typing import List, Sequence

from ..algebra.classical import frobenius_action, gl_extra, sl_generators
from ..algebra.field import FiniteField
from ..algebra.matrix import SemilinearElement
from ..perm.action import LabeledAction
from .scaled import Element, ScaledConstruction, ScaledDomain, build_construction, check_r, monic_vectors

logger = logging.getLogger(__name__)


def projective_action(gens: Sequence[Element], f: FiniteField, name: str = "projective") -> LabeledAction:
    """矩阵（或半线性元素）在 (q^d-1)/(q-1) 个一维子空间上的作用"""
    if not gens:
        raise ValueError("至少需要一个矩阵")
    linear = [g.matrix if isinstance(g, SemilinearElement) else g for g in gens]
    d = linear[0].dim
    for g in linear:
        if g.dim != d:
            raise ValueError("矩阵维数不一致")
        if g.det() == 0:
            raise ValueError("矩阵不可逆")
    domain = ScaledDomain(f, monic_vectors(f, d), 1)
    return LabeledAction(
        name=name,
        labels=domain.labels(),
        generators=[domain.permutation(g) for g in gens],
        source_generators=list(gens),
        homomorphism=domain.permutation,
    )


def scaled_projective_action(d: int, f: FiniteField, r: int) -> ScaledConstruction:
    """
    ΓL(d,q) 在伸缩射影点 {εv} 上的作用

    生成元顺序：ωI、SL(d,q) 生成元、diag(ω,1,...,1)、φ（a > 1 时）。

    Raises:
        NotPrime: r 不是素数
        RNotDividing: r 不整除 q-1
    """
    check_r(f.q, r)
    extra = [gl_extra(d, f)]
    if f.a > 1:
        extra.append(frobenius_action(f, d))
    domain = ScaledDomain(f, monic_vectors(f, d), r)
    logger.info("伸缩射影作用 d=%d q=%d r=%d: 次数 %d", d, f.q, r, domain.degree)
    return build_construction(f"scaled-projective(d={d},q={f.q},r={r})", domain,
                              sl_generators(d, f), extra, d)
