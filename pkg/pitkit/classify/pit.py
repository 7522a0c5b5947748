"""
内传递群的识别与分解

对真内传递群 G：M 为传递极小正规子群，C = C_G(M) 半正则且不传递，
C 的轨道构成块系 Σ，G 在 Σ 上的作用给出拟本原商 G^Σ。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Union

from ..errors import NotTransitive
from ..perm.blocks import ActionQuotient, BlockSystem, quotient_on_blocks
from ..perm.cosets import centralizer_in_symmetric
from ..perm.group import GeneratedGroup, intersection_with, is_normal_in
from ..perm.normal import minimal_normal_subgroups
from ..perm.permutation import Permutation

logger = logging.getLogger(__name__)


@dataclass
class PitDecomposition:
    """G = G^Ω 的分解"""
    group: GeneratedGroup
    plinth: GeneratedGroup
    centralizer: GeneratedGroup
    blocks: BlockSystem
    quotient: ActionQuotient
    sigma: int
    r_sigma: GeneratedGroup

    @property
    def r(self) -> int:
        return self.centralizer.order()

    @property
    def sigma_count(self) -> int:
        return self.blocks.cell_count


@dataclass
class InnatelyTransitiveMarker:
    """内传递但不是真内传递（或基座交换）的情形"""
    plinth: GeneratedGroup
    quasiprimitive: bool
    plinth_abelian: bool

    @property
    def plinth_order(self) -> int:
        return self.plinth.order()


def decompose(group: GeneratedGroup, plinth: GeneratedGroup,
              centralizer: Optional[GeneratedGroup] = None) -> PitDecomposition:
    """
    已知基座 M 时的分解

    Args:
        centralizer: 可选的 C_Sym(M)（已知时省去重新计算）
    """
    c_sym = centralizer or centralizer_in_symmetric(plinth)
    c = intersection_with(group, c_sym)
    blocks = BlockSystem.from_cells(c.orbits())
    quotient = quotient_on_blocks(group, blocks)
    sigma = blocks.cell_of(0)
    stab = plinth.stabilizer(0)
    images = [quotient.project(g) for g in stab.generators]
    r_sigma = GeneratedGroup(images, blocks.cell_count)
    return PitDecomposition(group, plinth, c, blocks, quotient, sigma, r_sigma)


def detect_pit(group: GeneratedGroup) -> Union[PitDecomposition, InnatelyTransitiveMarker, None]:
    """
    识别真内传递群

    Returns:
        PitDecomposition：真内传递；
        InnatelyTransitiveMarker：内传递但 C_G(M) 平凡或传递；
        None：不是内传递群

    Raises:
        NotTransitive: 输入不传递
    """
    if not group.is_transitive():
        raise NotTransitive("detect_pit 需要传递群", {"degree": group.degree})
    minimal = minimal_normal_subgroups(group)
    transitive = [m for m in minimal if m.is_transitive()]
    if not transitive:
        return None
    quasiprimitive = len(transitive) == len(minimal)
    for m in sorted(transitive, key=lambda k: k.is_abelian()):
        c = intersection_with(group, centralizer_in_symmetric(m))
        if c.order() > 1 and not c.is_transitive():
            logger.info("真内传递: |M| = %d, |C| = %d", m.order(), c.order())
            return decompose(group, m)
    m = transitive[0]
    return InnatelyTransitiveMarker(m, quasiprimitive, m.is_abelian())


@dataclass
class PhiHat:
    """φ̂(G) = (G^Σ, R^Σ)"""
    quotient: GeneratedGroup
    plinth_quotient: GeneratedGroup
    r_sigma: GeneratedGroup
    sigma: int
    r_normal: bool
    r_invariant: bool


def phi_hat(d: PitDecomposition) -> PhiHat:
    x = d.quotient.group
    m_sigma_images = [d.quotient.project(g) for g in d.plinth.generators]
    plinth_quotient = GeneratedGroup(m_sigma_images, d.sigma_count)
    m_point = plinth_quotient.stabilizer(d.sigma)
    x_point = x.stabilizer(d.sigma)
    return PhiHat(
        quotient=x,
        plinth_quotient=plinth_quotient,
        r_sigma=d.r_sigma,
        sigma=d.sigma,
        r_normal=d.r_sigma.is_subgroup_of(m_point) and is_normal_in(d.r_sigma, m_point),
        r_invariant=is_normal_in(d.r_sigma, x_point),
    )


def cell_action_two_transitive(d: PitDecomposition) -> bool:
    """G_σ 在 σ 上的作用是否 2-传递（G_α 在 σ∖{α} 上传递）"""
    cell = set(d.blocks.blocks[d.sigma])
    if len(cell) <= 2:
        return True
    stab = d.group.stabilizer(0)
    orbit = stab.orbit(next(p for p in sorted(cell) if p != 0))
    return cell - {0} <= orbit
