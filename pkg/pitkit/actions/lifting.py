"""
自同构提升与基座上的正规化子

M 在 R 的陪集上作用，f 是 M 的自同构（由正规化基域 M 的置换 t 给出）。
若 f(R) 在 Ω 上有公共不动点 β（即 f(R) 与 R 在 M 中共轭），
则 π(0^x) = β^{f(x)} 良定义，且 π 正规化 M^Ω。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from ..config import get_settings
from ..errors import BudgetExhausted, IndexTooLarge, NotLiftable
from ..perm.action import LabeledAction
from ..perm.blocks import minimal_block
from ..perm.cosets import CosetTable, centralizer_in_symmetric
from ..perm.group import GeneratedGroup
from ..perm.permutation import Permutation

logger = logging.getLogger(__name__)


@dataclass
class AutLiftSpec:
    """
    待提升的自同构

    Attributes:
        name: 名称（如 "diagonal"、"frobenius"、"duality"）
        base_element: 在基域上正规化 M 的置换 t，f(m) = t^-1 m t
        conjugator: 提升成功后记录的 β 的陪集标签
    """
    name: str
    base_element: Permutation
    conjugator: Optional[str] = None

    def images(self, m_action: LabeledAction) -> List[Permutation]:
        t = self.base_element
        return [m_action.image(m.conjugate(t)) for m in m_action.source_generators]

    def compose(self, other: "AutLiftSpec") -> "AutLiftSpec":
        return AutLiftSpec(f"{self.name}*{other.name}", self.base_element * other.base_element)


def lift_automorphism(m_action: LabeledAction, r: GeneratedGroup, spec: AutLiftSpec,
                      budget: Optional[int] = None) -> Permutation:
    """
    把 f 提升为 Ω 上正规化 M^Ω 的置换 π

    Raises:
        NotLiftable: f(R) 在 Ω 上没有公共不动点
        BudgetExhausted: 传播步数超出预算
    """
    budget = budget or get_settings().lift_budget
    n = m_action.degree
    t = spec.base_element
    stab_images = [m_action.image(x.conjugate(t)) for x in r.generators]
    fixed = [p for p in range(n) if all(g[p] == p for g in stab_images)]
    if not fixed:
        raise NotLiftable(f"自同构 {spec.name} 不能提升到陪集作用", {"automorphism": spec.name})
    beta = fixed[0]
    spec.conjugator = m_action.labels[beta]

    images = spec.images(m_action)
    pairs = list(zip(m_action.generators, images))
    pi = [-1] * n
    used = [False] * n
    pi[0] = beta
    used[beta] = True
    queue = [0]
    steps = 0
    while queue:
        gamma = queue.pop()
        for m, fm in pairs:
            steps += 1
            if steps > budget:
                raise BudgetExhausted("提升传播超出预算", {"budget": budget})
            delta = m[gamma]
            target = fm[pi[gamma]]
            if pi[delta] < 0:
                if used[target]:
                    raise NotLiftable(f"自同构 {spec.name} 的提升不是双射")
                pi[delta] = target
                used[target] = True
                queue.append(delta)
            elif pi[delta] != target:
                raise NotLiftable(f"自同构 {spec.name} 的提升不相容")
    if min(pi) < 0:
        raise NotLiftable("陪集作用不传递，无法提升")
    logger.debug("提升 %s: β=%d", spec.name, beta)
    return Permutation(pi)


@dataclass
class NormalizerAssembly:
    """N = ⟨C, M, 提升⟩ 及其组成部分"""
    plinth: GeneratedGroup
    centralizer: GeneratedGroup
    lifts: Dict[str, Permutation]
    skipped: List[str]
    normalizer: GeneratedGroup


def assemble_normalizer(m_action: LabeledAction, r: GeneratedGroup,
                        aut_specs: Sequence[AutLiftSpec]) -> NormalizerAssembly:
    plinth = m_action.group
    centralizer = centralizer_in_symmetric(plinth)
    lifts: Dict[str, Permutation] = {}
    failed: List[AutLiftSpec] = []
    for spec in aut_specs:
        try:
            lifts[spec.name] = lift_automorphism(m_action, r, spec)
        except NotLiftable as exc:
            logger.info("自同构 %s 不可提升: %s", spec.name, exc.message)
            failed.append(spec)
    # 两个不可提升自同构之积仍可能可提升
    for a, b in combinations(failed, 2):
        product = a.compose(b)
        try:
            lifts[product.name] = lift_automorphism(m_action, r, product)
        except NotLiftable:
            continue
    skipped = [s.name for s in failed if not any(s.name in k for k in lifts)]
    normalizer = GeneratedGroup(
        centralizer.generators + plinth.generators + list(lifts.values()), plinth.degree,
    )
    return NormalizerAssembly(plinth, centralizer, lifts, skipped, normalizer)


def normalizer_over_plinth(m_action: LabeledAction, r: GeneratedGroup,
                           aut_specs: Sequence[AutLiftSpec]) -> GeneratedGroup:
    return assemble_normalizer(m_action, r, aut_specs).normalizer


# ==================== 中间子群 ====================

def intermediate_subgroups(n: GeneratedGroup, h: GeneratedGroup,
                           cap: Optional[int] = None) -> List[GeneratedGroup]:
    """
    h ≤ K ≤ n 的全部子群（按阶升序）

    K 对应于 n 在 h 的陪集上的作用中含点 0 的块；块格由极小块的并生成。

    Raises:
        IndexTooLarge: |n:h| 超过上限
    """
    cap = cap or get_settings().index_cap
    index = n.order() // h.order()
    if index > cap:
        raise IndexTooLarge(f"指数 {index} 超过上限 {cap}", {"index": index, "cap": cap})
    table = CosetTable(n, h)
    gens = [g.images for g in table.generator_images]
    blocks: Dict[frozenset, None] = {frozenset([0]): None}
    atoms = []
    for p in range(1, index):
        atom = frozenset(minimal_block(gens, index, (0, p)).blocks[0])
        if atom not in blocks:
            blocks[atom] = None
            atoms.append(atom)
    frontier = list(blocks)
    while frontier:
        nxt = []
        for block in frontier:
            for atom in atoms:
                if atom <= block:
                    continue
                joined = frozenset(minimal_block(gens, index, sorted(block | atom)).blocks[0])
                if joined not in blocks:
                    blocks[joined] = None
                    nxt.append(joined)
        frontier = nxt

    result = []
    for block in blocks:
        extra = [Permutation(table.reps[p]) for p in sorted(block) if p]
        result.append(GeneratedGroup(h.generators + extra, n.degree))
    return sorted(result, key=lambda k: k.order())


def _index_of(subgroups: List[GeneratedGroup], k: GeneratedGroup) -> int:
    for i, s in enumerate(subgroups):
        if s.order() == k.order() and k.is_subgroup_of(s):
            return i
    raise ValueError("共轭子群不在中间子群列表中")


def overgroup_classes(n: GeneratedGroup, subgroups: List[GeneratedGroup]) -> List[GeneratedGroup]:
    """在 n 的共轭作用下取代表（每类保留列表中最靠前者）"""
    parent = list(range(len(subgroups)))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    for i, k in enumerate(subgroups):
        for x in n.generators:
            j = _index_of(subgroups, k.conjugate(x))
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [k for i, k in enumerate(subgroups) if find(i) == i]


def plinth_overgroups(n: GeneratedGroup, plinth: GeneratedGroup,
                      centralizer: GeneratedGroup) -> List[Tuple[GeneratedGroup, int]]:
    """
    M ≤ G ≤ N 且 G ∩ C ≠ 1 的群 G（N-共轭意义下），附 |G ∩ C|
    """
    c_elements = list(centralizer.elements())
    result = []
    for k in overgroup_classes(n, intermediate_subgroups(n, plinth)):
        meet = sum(1 for c in c_elements if k.contains(c))
        if meet > 1:
            result.append((k, meet))
    return result
