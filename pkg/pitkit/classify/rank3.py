"""
秩 3 判据

设 σ' ≠ σ 为另一块，α ∈ σ，α' ∈ σ'。对 φ̂(G) 为特殊对的 G，以下条件等价：
(a) G 的秩为 3；(b) G_α 在 Ω∖σ 上传递；(c) G_{α,σ'} 在 σ' 上传递；
(d) G_{σ,σ'} 在 σ×σ' 上传递；(e) G_{σ,σ'} = G_{σ,α'} G_{α,σ'}。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from ..errors import PreconditionFailed
from ..perm.chain import StabilizerChain
from ..perm.group import GeneratedGroup, orbits_of
from ..perm.permutation import Images
from .pit import PitDecomposition, phi_hat
from .special import is_special_pair

logger = logging.getLogger(__name__)


@dataclass
class Rank3Criteria:
    rank: int
    applicable: bool
    criteria: Optional[Dict[str, bool]] = None

    @property
    def agree(self) -> Optional[bool]:
        if self.criteria is None:
            return None
        return len(set(self.criteria.values())) == 1


def is_line7_quotient(d: PitDecomposition) -> bool:
    """Ree(3) = PΓL(2,8) 在 28 点上的商"""
    return d.sigma_count == 28 and d.quotient.group.order() == 1512 and d.plinth.order() == 504


class _Extended:
    """G 在 Ω ⊔ Σ 上的作用，块成为点以便取块稳定子"""

    def __init__(self, d: PitDecomposition):
        self.n = d.group.degree
        index = d.blocks.cell_index()
        self.index = index
        self.gens: List[Images] = []
        for g, img in zip(d.group.raw_generators, d.quotient.generator_images):
            self.gens.append(g + tuple(self.n + p for p in img.images))
        self.degree = self.n + d.blocks.cell_count

    def stabilizer_gens(self, points: List[int]) -> List[Images]:
        chain = StabilizerChain.build(self.degree, self.gens, points)
        return chain.level_generators(len(points))

    def stabilizer_order(self, points: List[int]) -> int:
        chain = StabilizerChain.build(self.degree, self.gens, points)
        order = 1
        for level in chain.levels[len(points):]:
            order *= len(level.orbit)
        return order


def rank3_criteria(d: PitDecomposition, strict: bool = False) -> Rank3Criteria:
    """
    直接计算秩，并分别求 (b)-(e)

    前置条件不满足时只返回秩；strict 为真时抛出 PreconditionFailed。
    """
    rank = d.group.rank()
    hat = phi_hat(d)
    verdict = is_special_pair(hat.quotient, hat.r_sigma, hat.sigma)
    if not verdict.holds or is_line7_quotient(d):
        if strict:
            raise PreconditionFailed("φ̂(G) 不是特殊对或商为 Ree(3)", {"rank": rank})
        return Rank3Criteria(rank, applicable=False)

    ext = _Extended(d)
    n = ext.n
    cells = d.blocks.blocks
    sigma = d.sigma
    cell = cells[sigma]
    other = next(k for k in range(len(cells)) if k != sigma)
    cell_other = cells[other]
    alpha, alpha2 = 0, cell_other[0]
    s_pt, s2_pt = n + sigma, n + other

    # (b)
    g_alpha = ext.stabilizer_gens([alpha])
    outside = [p for p in range(n) if ext.index[p] != sigma]
    orbit_b = _orbit(g_alpha, outside[0])
    crit_b = all(p in orbit_b for p in outside)

    # (c)
    g_alpha_s2 = ext.stabilizer_gens([alpha, s2_pt])
    crit_c = set(cell_other) <= _orbit(g_alpha_s2, alpha2)

    # (d)
    g_s_s2 = ext.stabilizer_gens([s_pt, s2_pt])
    pair_orbit = {(alpha, alpha2)}
    queue = [(alpha, alpha2)]
    while queue:
        a, b = queue.pop()
        for g in g_s_s2:
            nxt = (g[a], g[b])
            if nxt not in pair_orbit:
                pair_orbit.add(nxt)
                queue.append(nxt)
    crit_d = len(pair_orbit) == len(cell) * len(cell_other)

    # (e)：|AB| = |A||B|/|A∩B|，A = G_{σ,α'}，B = G_{α,σ'}，A∩B = G_{α,α'}
    order_a = ext.stabilizer_order([s_pt, alpha2])
    order_b = ext.stabilizer_order([alpha, s2_pt])
    order_ab = ext.stabilizer_order([alpha, alpha2])
    crit_e = order_a * order_b // order_ab == ext.stabilizer_order([s_pt, s2_pt])

    criteria = {"a": rank == 3, "b": crit_b, "c": crit_c, "d": crit_d, "e": crit_e}
    logger.debug("秩 3 判据: %s", criteria)
    return Rank3Criteria(rank, applicable=True, criteria=criteria)


def _orbit(gens: List[Images], point: int) -> set:
    orbit = {point}
    queue = [point]
    while queue:
        x = queue.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                queue.append(y)
    return orbit
