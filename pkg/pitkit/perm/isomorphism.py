"""
置换同构

判定是否存在双射 ψ 使 ψ^-1 G1 ψ = G2。先比较指纹（阶、秩、子轨道长度、
极小块系轮廓），再做带预算的回溯：固定 ψ(a1) = a2，为 G1 的生成元依次
选取 G2 中同轮换型的像，沿 Schreier 图传播 ψ 并检验相容性。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..config import get_settings
from ..errors import BudgetExhausted, GroupTooLarge, NotTransitive
from .blocks import minimal_block_systems
from .group import GeneratedGroup
from .permutation import Images, Permutation, inverse_images, mul_images

logger = logging.getLogger(__name__)


@dataclass
class PermIsomorphism:
    """见证：psi[i] 是点 i 的像，generator_images[k] = psi^-1 s_k psi"""
    psi: Permutation
    generator_images: List[Permutation]


def fingerprint(group: GeneratedGroup) -> Tuple:
    """置换同构不变量"""
    orbit_lengths = tuple(sorted(len(o) for o in group.orbits()))
    if not group.is_transitive():
        return (group.degree, group.order(), orbit_lengths)
    blocks = tuple(sorted((b.cell_size, b.cell_count) for b in minimal_block_systems(group)))
    return (
        group.degree,
        group.order(),
        orbit_lengths,
        tuple(group.suborbit_lengths()),
        blocks,
    )


class _Search:
    def __init__(self, g1: GeneratedGroup, g2: GeneratedGroup, a1: int, a2: int,
                 budget: int, accept: Optional[Callable[[Images], bool]],
                 reduce_by: Optional[GeneratedGroup]):
        self.n = g1.degree
        self.gens = list(g1.raw_generators)
        self.a1, self.a2 = a1, a2
        self.budget = budget
        self.nodes = 0
        self.accept = accept
        try:
            elements = [g.images for g in g2.elements()]
        except GroupTooLarge as exc:
            raise BudgetExhausted("候选像集合过大，无法在预算内搜索", exc.details)
        self.candidates: List[List[Images]] = []
        for k, s in enumerate(self.gens):
            ctype = Permutation(s).cycle_type()
            pool = [t for t in elements if Permutation(t).cycle_type() == ctype]
            if k == 0 and reduce_by is not None:
                pool = self._class_reps(pool, reduce_by)
            self.candidates.append(pool)

    @staticmethod
    def _class_reps(pool: List[Images], by: GeneratedGroup) -> List[Images]:
        # 在 by 的共轭作用下取轨道代表
        members = set(pool)
        seen = set()
        reps = []
        conj = [(inverse_images(h), h) for h in by.raw_generators]
        for t in pool:
            if t in seen:
                continue
            reps.append(t)
            seen.add(t)
            queue = [t]
            while queue:
                x = queue.pop()
                for hi, h in conj:
                    y = mul_images(mul_images(hi, x), h)
                    if y in members and y not in seen:
                        seen.add(y)
                        queue.append(y)
        return reps

    def _propagate(self, psi: List[int], used: List[bool], assigned: List[Tuple[Images, Images]],
                   frontier: List[int]) -> Optional[Tuple[List[int], List[bool]]]:
        psi = list(psi)
        used = list(used)
        queue = list(frontier)
        while queue:
            gamma = queue.pop()
            image = psi[gamma]
            for s, t in assigned:
                delta = s[gamma]
                target = t[image]
                if psi[delta] < 0:
                    if used[target]:
                        return None
                    psi[delta] = target
                    used[target] = True
                    queue.append(delta)
                elif psi[delta] != target:
                    return None
        return psi, used

    def run(self) -> Optional[Tuple[Images, List[Images]]]:
        psi = [-1] * self.n
        used = [False] * self.n
        psi[self.a1] = self.a2
        used[self.a2] = True
        return self._descend(0, psi, used, [])

    def _descend(self, k: int, psi: List[int], used: List[bool],
                 assigned: List[Tuple[Images, Images]]):
        if k == len(self.gens):
            if min(psi) < 0:
                return None
            images = tuple(psi)
            if self.accept is not None and not self.accept(images):
                return None
            return images, [t for _, t in assigned]
        s = self.gens[k]
        known = [p for p in range(self.n) if psi[p] >= 0]
        for t in self.candidates[k]:
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExhausted("置换同构搜索超出预算", {"budget": self.budget})
            pair = (s, t)
            state = self._propagate(psi, used, assigned + [pair], known)
            if state is None:
                continue
            found = self._descend(k + 1, state[0], state[1], assigned + [pair])
            if found is not None:
                return found
        return None


def _search(g1: GeneratedGroup, g2: GeneratedGroup, a1: int, a2: int, budget: Optional[int],
            accept=None, reduce_by=None) -> Optional[PermIsomorphism]:
    budget = budget or get_settings().iso_budget
    if not g1.raw_generators:
        psi = list(range(g1.degree))
        psi[a1], psi[a2] = psi[a2], psi[a1]
        images = tuple(psi)
        if accept is None or accept(images):
            return PermIsomorphism(Permutation(images), [])
        return None
    search = _Search(g1, g2, a1, a2, budget, accept, reduce_by)
    found = search.run()
    logger.debug("置换同构搜索结束: nodes=%d found=%s", search.nodes, found is not None)
    if found is None:
        return None
    images, gen_images = found
    return PermIsomorphism(Permutation(images), [Permutation(t) for t in gen_images])


def perm_isomorphic(g1: GeneratedGroup, g2: GeneratedGroup,
                    budget: Optional[int] = None) -> Optional[PermIsomorphism]:
    """
    置换同构判定

    Returns:
        见证，或 None（可证明不同构）

    Raises:
        NotTransitive: 输入不传递
        BudgetExhausted: 预算内未能判定
    """
    if g1.degree != g2.degree:
        return None
    if not g1.is_transitive() or not g2.is_transitive():
        raise NotTransitive("置换同构判定需要传递群")
    if g1.same_as(g2):
        return PermIsomorphism(Permutation.identity(g1.degree), g1.generators)
    if fingerprint(g1) != fingerprint(g2):
        return None
    return _search(g1, g2, 0, 0, budget, reduce_by=g2.stabilizer(0))


def pairs_equivalent(pair1: Tuple[GeneratedGroup, GeneratedGroup, int],
                     pair2: Tuple[GeneratedGroup, GeneratedGroup, int],
                     budget: Optional[int] = None) -> Optional[PermIsomorphism]:
    """
    (G, R, σ) 与 (H, S, δ) 的等价：ψ(σ) = δ，ψ^-1 G ψ = H，ψ^-1 R ψ = S
    """
    g, r, sigma = pair1
    h, s, delta = pair2
    if g.degree != h.degree or r.order() != s.order():
        return None
    if not g.is_transitive() or not h.is_transitive():
        raise NotTransitive("等价判定需要传递群")
    if fingerprint(g) != fingerprint(h):
        return None
    if sorted(len(o) for o in r.orbits()) != sorted(len(o) for o in s.orbits()):
        return None

    def accept(psi: Images) -> bool:
        pi = inverse_images(psi)
        return all(s.contains(mul_images(mul_images(pi, x), psi)) for x in r.raw_generators)

    stab = h.stabilizer(delta)
    invariant = all(
        s.contains(mul_images(mul_images(inverse_images(x), y), x))
        for x in stab.raw_generators for y in s.raw_generators
    )
    return _search(g, h, sigma, delta, budget, accept=accept,
                   reduce_by=stab if invariant else None)
