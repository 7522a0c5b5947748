"""
Ree(3)' = PSL(2,8) 的 56 点作用

M = PSL(2,8) 作用在 PG(1,8) 上；R 是 Sylow-3 子群 C9，
M_σ = N_M(R) ≅ C9 ⋊ C2。Ω 为 R 的陪集（56 个），Σ 为 M_σ 的陪集（28 个）。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from ..algebra.classical import frobenius_action, sl_generators
from ..algebra.field import make_field
from ..config import get_settings
from ..errors import DataFileMissing, IndexOverflow
from ..perm.action import LabeledAction
from ..perm.cosets import coset_action, element_of_order, normalizer_small
from ..perm.group import GeneratedGroup
from .lifting import AutLiftSpec, assemble_normalizer
from .projective import projective_action

logger = logging.getLogger(__name__)


@dataclass
class Line7Action:
    """56 点作用及其相关对象"""
    base: LabeledAction           # PSL(2,8) 与 φ 在 9 个射影点上
    plinth_base: GeneratedGroup   # PSL(2,8)
    r: GeneratedGroup             # C9
    m_sigma: GeneratedGroup       # N_M(R)，阶 18
    omega: LabeledAction          # 56 点
    sigma: LabeledAction          # 28 点
    normalizer: GeneratedGroup    # PΓL(2,8) 在 56 点上，阶 3024
    quotient_on_sigma: GeneratedGroup  # PΓL(2,8) 在 28 点上


def ree3_line7_action() -> Line7Action:
    f = make_field(2, 3)
    sl = sl_generators(2, f)
    base = projective_action(sl + [frobenius_action(f, 2)], f, name="PGammaL(2,8) on PG(1,8)")
    plinth_base = GeneratedGroup(base.generators[: len(sl)], base.degree, name="PSL(2,8)")
    frobenius = base.generators[-1]

    r = GeneratedGroup([element_of_order(plinth_base, 9)], base.degree, name="C9")
    m_sigma = normalizer_small(plinth_base, r)
    omega = coset_action(plinth_base, r, name="Ree(3)' on 56")
    sigma = coset_action(plinth_base, m_sigma, name="Ree(3)' on 28")

    assembly = assemble_normalizer(omega, r, [AutLiftSpec("frobenius", frobenius)])
    overgroup = GeneratedGroup(plinth_base.generators + [frobenius], base.degree)
    x_sigma = normalizer_small(overgroup, r)
    quotient = coset_action(overgroup, x_sigma, name="PGammaL(2,8) on 28").group
    logger.info("Ree(3)' 作用: |N| = %d", assembly.normalizer.order())
    return Line7Action(
        base=base,
        plinth_base=plinth_base,
        r=r,
        m_sigma=m_sigma,
        omega=omega,
        sigma=sigma,
        normalizer=assembly.normalizer,
        quotient_on_sigma=quotient,
    )


def ree_degree(q: int) -> int:
    """Ree(q) 在 2(q³+1) 个点上的作用次数（r = 2）"""
    a, rem = 0, q
    while rem % 3 == 0:
        rem //= 3
        a += 1
    if rem != 1 or a % 2 == 0 or q <= 3:
        raise ValueError(f"q = {q} 不是 3^(2a+1) > 3 形式")
    return 2 * (q ** 3 + 1)


def ree_action(q: int, cap: Optional[int] = None) -> LabeledAction:
    """
    Ree(q)（q > 3）的构造骨架

    只检查参数与次数上限（默认取小群上限）；生成元需以数据文件提供，未随包分发。

    Raises:
        IndexOverflow: 次数超过上限
        DataFileMissing: 缺少 ree{q}.perm
    """
    settings = get_settings()
    cap = cap or settings.small_group_cap
    degree = ree_degree(q)
    if degree > cap:
        raise IndexOverflow(f"Ree({q}) 作用次数 {degree} 超过上限 {cap}",
                            {"degree": degree, "cap": cap})
    path = settings.data_dir / f"ree{q}.perm"
    raise DataFileMissing(f"缺少 Ree({q}) 生成元文件 {path.name}", {"path": str(path)})
