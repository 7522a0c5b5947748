"""
分类流水线：识别 → φ̂ → 特殊对判定 → 秩与秩 3 判据 → 签名
"""

from __future__ import annotations

import logging
from typing import Optional

from ..models import PitReport, SpecialPairModel
from ..perm.group import GeneratedGroup
from .pit import InnatelyTransitiveMarker, PitDecomposition, decompose, detect_pit, phi_hat
from .rank3 import is_line7_quotient, rank3_criteria
from .signature import quotient_signature
from .special import SpecialPairVerdict, is_special_pair
from .table1 import line_of_quotient

logger = logging.getLogger(__name__)


def verdict_model(verdict: SpecialPairVerdict) -> SpecialPairModel:
    return SpecialPairModel(**verdict.to_dict())


def r_transitive_off_sigma(d: PitDecomposition) -> bool:
    """R^Σ 在 Σ∖{σ} 上是否传递"""
    if d.sigma_count <= 2:
        return True
    rest = [k for k in range(d.sigma_count) if k != d.sigma]
    return set(rest) <= d.r_sigma.orbit(rest[0])


def report_for(d: PitDecomposition, criteria: bool = True) -> PitReport:
    hat = phi_hat(d)
    verdict = is_special_pair(hat.quotient, hat.r_sigma, hat.sigma)
    signature = quotient_signature(hat.quotient)
    report = PitReport(
        degree=d.group.degree,
        order=d.group.order(),
        r=d.r,
        sigma_count=d.sigma_count,
        rank=d.group.rank(),
        special=verdict.holds,
        plinth_order=d.plinth.order(),
        quotient_signature=signature,
        line_tag=line_of_quotient(signature.name, signature.degree),
        quasiprimitive=False,
        plinth_abelian=d.plinth.is_abelian(),
        verdict=verdict_model(verdict),
    )
    if criteria and verdict.holds and not is_line7_quotient(d):
        report.criteria = rank3_criteria(d).criteria
    return report


def classify_group(group: GeneratedGroup, plinth: Optional[GeneratedGroup] = None) -> PitReport:
    """
    单个传递群的完整分类记录

    Args:
        plinth: 已知的传递极小正规子群（省去识别）
    """
    found = decompose(group, plinth) if plinth is not None else detect_pit(group)
    if found is None:
        return PitReport(degree=group.degree, order=group.order(), rank=group.rank(),
                         innately_transitive=False, proper=False)
    if isinstance(found, InnatelyTransitiveMarker):
        return PitReport(
            degree=group.degree,
            order=group.order(),
            rank=group.rank(),
            plinth_order=found.plinth_order,
            proper=False,
            quasiprimitive=found.quasiprimitive,
            plinth_abelian=found.plinth_abelian,
        )
    logger.info("分类: 次数 %d, 阶 %d, r=%d", group.degree, group.order(), found.r)
    return report_for(found)
