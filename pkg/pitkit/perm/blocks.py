"""
块系与块上的商作用
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import BlocksNotInvariant, NotTransitive
from .group import GeneratedGroup, kernel_of_action
from .permutation import Images, Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockSystem:
    """Ω 的划分，块按最小点排序，块内点升序"""
    blocks: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_cells(cls, cells: Iterable[Iterable[int]]) -> "BlockSystem":
        blocks = sorted(tuple(sorted(c)) for c in cells)
        return cls(tuple(blocks))

    @property
    def cell_size(self) -> int:
        return len(self.blocks[0])

    @property
    def cell_count(self) -> int:
        return len(self.blocks)

    @property
    def degree(self) -> int:
        return sum(len(b) for b in self.blocks)

    def cell_index(self) -> List[int]:
        """点 -> 所在块的序号"""
        index = [0] * self.degree
        for k, block in enumerate(self.blocks):
            for p in block:
                index[p] = k
        return index

    def cell_of(self, point: int) -> int:
        return self.cell_index()[point]

    def is_trivial(self) -> bool:
        return self.cell_count == 1 or self.cell_size == 1

    def block_images(self, g: Images, index: Optional[List[int]] = None) -> Optional[Tuple[int, ...]]:
        """g 在块上诱导的置换；若 g 不保持划分返回 None"""
        index = index or self.cell_index()
        images = []
        for block in self.blocks:
            target = index[g[block[0]]]
            if any(index[g[p]] != target for p in block[1:]):
                return None
            images.append(target)
        if len(set(images)) != len(images):
            return None
        return tuple(images)


def _find(parent: List[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def minimal_block(generators: Sequence[Images], degree: int, seeds: Sequence[int]) -> BlockSystem:
    """包含 seeds 的最小块系（Atkinson 并查集算法）"""
    parent = list(range(degree))
    queue = []
    root = _find(parent, seeds[0])
    for s in seeds[1:]:
        rs = _find(parent, s)
        if rs != root:
            parent[rs] = root
            queue.append(rs)
    while queue:
        x = queue.pop()
        for g in generators:
            a = _find(parent, g[x])
            b = _find(parent, g[_find(parent, x)])
            if a != b:
                parent[b] = a
                queue.append(b)
    cells: Dict[int, List[int]] = {}
    for p in range(degree):
        cells.setdefault(_find(parent, p), []).append(p)
    return BlockSystem.from_cells(cells.values())


def minimal_block_systems(group: GeneratedGroup) -> List[BlockSystem]:
    """传递群的全部极小非平凡块系"""
    if not group.is_transitive():
        raise NotTransitive("块系只对传递群计算", {"degree": group.degree})
    n = group.degree
    gens = group.raw_generators
    found: Dict[Tuple[int, ...], BlockSystem] = {}
    for p in range(1, n):
        system = minimal_block(gens, n, (0, p))
        if system.cell_count > 1:
            found.setdefault(system.blocks[0], system)
    zero_blocks = [set(b) for b in found]
    minimal = [
        system for key, system in found.items()
        if not any(other < set(key) for other in zero_blocks)
    ]
    return sorted(minimal, key=lambda s: (s.cell_size, s.blocks))


def block_system_from_orbits(orbits: Iterable[Iterable[int]]) -> BlockSystem:
    return BlockSystem.from_cells(orbits)


@dataclass
class ActionQuotient:
    """G 在块系上的作用 G^Σ 及其核"""
    source: GeneratedGroup
    blocks: BlockSystem
    group: GeneratedGroup
    generator_images: List[Permutation] = field(default_factory=list)
    _kernel: Optional[GeneratedGroup] = None

    def project(self, g: Permutation) -> Permutation:
        images = self.blocks.block_images(g.images)
        if images is None:
            raise BlocksNotInvariant("元素不保持块系")
        return Permutation(images)

    @property
    def kernel(self) -> GeneratedGroup:
        if self._kernel is None:
            self._kernel = kernel_of_action(self.source, self.generator_images)
        return self._kernel

    def pairs(self) -> List[Tuple[Permutation, Permutation]]:
        return list(zip(self.source.generators, self.generator_images))


def quotient_on_blocks(group: GeneratedGroup, blocks: BlockSystem) -> ActionQuotient:
    if blocks.degree != group.degree:
        raise BlocksNotInvariant("块系次数与群次数不符",
                                 {"blocks": blocks.degree, "group": group.degree})
    index = blocks.cell_index()
    images = []
    for g in group.raw_generators:
        img = blocks.block_images(g, index)
        if img is None:
            raise BlocksNotInvariant("生成元不保持块系", {"generator": list(g)})
        images.append(Permutation(img))
    quotient = GeneratedGroup(images, blocks.cell_count)
    return ActionQuotient(group, blocks, quotient, images)
