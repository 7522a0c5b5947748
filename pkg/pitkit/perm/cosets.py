"""
陪集作用与中心化子
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..config import get_settings
from ..errors import IndexOverflow, NotSubgroup, NotTransitive, WitnessNotNormalizing
from .action import LabeledAction
from .group import GeneratedGroup, orbits_of
from .permutation import Images, Permutation, inverse_images, mul_images

logger = logging.getLogger(__name__)


class CosetTable:
    """
    右陪集表 R\\M

    陪集按 BFS 顺序编号（从平凡陪集出发，生成元按声明顺序）。
    桶键是 R 的各轨道在代表元下的像集，桶内用 x·y^-1 ∈ R 判定。
    """

    def __init__(self, group: GeneratedGroup, subgroup: GeneratedGroup, cap: Optional[int] = None):
        cap = cap or get_settings().coset_cap
        if subgroup.degree != group.degree or not subgroup.is_subgroup_of(group):
            raise NotSubgroup("R 不是 M 的子群")
        index = group.order() // subgroup.order()
        if index > cap:
            raise IndexOverflow(f"陪集数 {index} 超过上限 {cap}", {"index": index, "cap": cap})
        self.group = group
        self.subgroup = subgroup
        self.index = index
        self._orbits = [tuple(o) for o in subgroup.orbits()]
        self.reps: List[Images] = []
        self.words: List[Tuple[int, ...]] = []
        self._buckets: Dict[tuple, List[int]] = {}
        self._enumerate()

    def _key(self, x: Images) -> tuple:
        return tuple(frozenset(map(x.__getitem__, o)) for o in self._orbits)

    def lookup(self, x: Images) -> Optional[int]:
        r_chain = self.subgroup.chain
        for c in self._buckets.get(self._key(x), ()):
            if r_chain.contains(mul_images(x, inverse_images(self.reps[c]))):
                return c
        return None

    def _add(self, x: Images, word: Tuple[int, ...]) -> int:
        c = len(self.reps)
        self.reps.append(x)
        self.words.append(word)
        self._buckets.setdefault(self._key(x), []).append(c)
        return c

    def _enumerate(self) -> None:
        gens = self.group.raw_generators
        self._add(self.group.chain.identity, ())
        images: List[List[int]] = [[] for _ in gens]
        k = 0
        while k < len(self.reps):
            rep = self.reps[k]
            for i, g in enumerate(gens):
                y = mul_images(rep, g)
                c = self.lookup(y)
                if c is None:
                    c = self._add(y, self.words[k] + (i,))
                images[i].append(c)
            k += 1
        if len(self.reps) != self.index:
            raise NotSubgroup(f"陪集枚举得到 {len(self.reps)} 个陪集，期望 {self.index}")
        self.generator_images = [Permutation(img) for img in images]

    def act(self, x: Permutation) -> Permutation:
        """M 中元素在陪集上的置换"""
        x = x.images
        images = []
        for rep in self.reps:
            c = self.lookup(mul_images(rep, x))
            if c is None:
                raise NotSubgroup("元素不在 M 中")
            images.append(c)
        return Permutation(images)

    def label(self, c: int) -> str:
        word = self.words[c]
        return ".".join(f"g{i}" for i in word) if word else "e"


def coset_action(group: GeneratedGroup, subgroup: GeneratedGroup,
                 cap: Optional[int] = None, name: str = "cosets") -> LabeledAction:
    """M 在 R 的右陪集上的作用"""
    table = CosetTable(group, subgroup, cap)
    logger.info("陪集作用 %s: 次数 %d", name, table.index)
    return LabeledAction(
        name=name,
        labels=[table.label(c) for c in range(table.index)],
        generators=table.generator_images,
        source_generators=group.generators,
        homomorphism=table.act,
    )


# ==================== 中心化子 ====================

def normalizer_witness(group: GeneratedGroup) -> List[Permutation]:
    """对 Fix(M_0) 中每个点取 M 中把 0 送到它的元素"""
    if not group.is_transitive():
        raise NotTransitive("需要传递群", {"degree": group.degree})
    level = group.chain.levels[0]
    stab = group.stabilizer_generators(0)
    fixed = [p for p in range(group.degree) if all(g[p] == p for g in stab)]
    return [Permutation(level.transversal[p]) for p in fixed]


def centralizer_of_transitive(group: GeneratedGroup, witness: Sequence[Permutation]) -> GeneratedGroup:
    """
    传递群 M 在 Sym(Ω) 中的中心化子

    对每个见证元 n（n 正规化 M_0），c_n 把 γ = 0^{x_γ} 送到 (0^n)^{x_γ}。

    Raises:
        NotTransitive: M 不传递
        WitnessNotNormalizing: 某个见证元不正规化 M_0
    """
    if not group.is_transitive():
        raise NotTransitive("中心化子构造需要传递群", {"degree": group.degree})
    n = group.degree
    transversal = group.chain.levels[0].transversal
    stab = group.stabilizer_generators(0)
    gens = []
    for w in witness:
        wi = inverse_images(w.images)
        for s in stab:
            if mul_images(mul_images(wi, s), w.images)[0] != 0:
                raise WitnessNotNormalizing("见证元不正规化点稳定子",
                                            {"witness": w.to_cycle_string()})
        target = w[0]
        gens.append(Permutation(transversal[g][target] for g in range(n)))
    return GeneratedGroup(gens, n)


def centralizer_in_symmetric(group: GeneratedGroup) -> GeneratedGroup:
    return centralizer_of_transitive(group, normalizer_witness(group))


def centralizer_in(group: GeneratedGroup, plinth: GeneratedGroup) -> GeneratedGroup:
    """C_G(M) = C_Sym(M) ∩ G，M 需传递"""
    from .group import intersection_with

    return intersection_with(group, centralizer_in_symmetric(plinth))


def normalizer_small(group: GeneratedGroup, subgroup: GeneratedGroup) -> GeneratedGroup:
    """小群中子群的正规化子（逐元素检验）"""
    from .group import reduce_generators

    members = []
    for g in group.elements():
        gi = inverse_images(g.images)
        if all(subgroup.contains(mul_images(mul_images(gi, h), g.images))
               for h in subgroup.raw_generators):
            members.append(g.images)
    kept, chain = reduce_generators(group.degree, members)
    return GeneratedGroup(kept, group.degree, chain=chain)


def element_of_order(group: GeneratedGroup, order: int) -> Permutation:
    """确定性枚举中第一个阶为 order 的元素"""
    for g in group.elements():
        if g.order() == order:
            return g
    raise ValueError(f"群中没有阶为 {order} 的元素")
