"""
商群签名与命名

按 (次数, 阶) 查表；同一键下有多个群时再比较元素阶集合。
只是签名匹配，不断言抽象同构。
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Optional, Union

from ..config import get_settings
from ..errors import GroupTooLarge
from ..models import QuotientSignature
from ..perm.group import GeneratedGroup

_Named = Union[str, Dict[FrozenSet[int], str]]

CURATED: Dict[tuple, _Named] = {
    (5, 60): "A5",
    (5, 120): "S5",
    (6, 60): "PSL(2,5)",
    (6, 120): "PGL(2,5)",
    (7, 168): "PSL(3,2)",
    (8, 168): "PSL(2,7)",
    (8, 336): "PGL(2,7)",
    (9, 504): "PSL(2,8)",
    (9, 1512): "PGammaL(2,8)",
    (10, 360): "PSL(2,9)",
    (10, 720): {
        frozenset({1, 2, 3, 4, 5, 6}): "PSigmaL(2,9)",
        frozenset({1, 2, 3, 4, 5, 8, 10}): "PGL(2,9)",
        frozenset({1, 2, 3, 4, 5, 8}): "M10",
    },
    (10, 1440): "PGammaL(2,9)",
    (11, 7920): "M11",
    (12, 660): "PSL(2,11)",
    (12, 1320): "PGL(2,11)",
    (12, 7920): "M11",
    (13, 5616): "PSL(3,3)",
    (14, 1092): "PSL(2,13)",
    (14, 2184): "PGL(2,13)",
    (18, 2448): "PSL(2,17)",
    (18, 4896): "PGL(2,17)",
    (26, 7800): "PSL(2,25)",
    (28, 1512): "PGammaL(2,8)",
    (28, 6048): "PSU(3,3)",
    (28, 12096): "PGammaU(3,3)",
    (28, 1451520): "Sp(6,2)",
    (36, 1451520): "Sp(6,2)",
    (57, 1876896): "PSL(3,7)",
    (57, 5630688): "PGL(3,7)",
    (65, 62400): "PSU(3,4)",
    (65, 249600): "PGammaU(3,4)",
    (176, 44352000): "HS",
    (276, 495766656000): "Co3",
}


def element_orders(group: GeneratedGroup) -> FrozenSet[int]:
    return frozenset(g.order() for g in group.elements())


def curated_name(group: GeneratedGroup) -> Optional[str]:
    named = CURATED.get((group.degree, group.order()))
    if named is None or isinstance(named, str):
        return named
    if group.order() > get_settings().small_group_cap:
        return None
    try:
        return named.get(element_orders(group))
    except GroupTooLarge:
        return None


def quotient_signature(group: GeneratedGroup) -> QuotientSignature:
    return QuotientSignature(
        degree=group.degree,
        order=group.order(),
        rank=group.rank(),
        suborbits=group.suborbit_lengths(),
        name=curated_name(group),
    )
