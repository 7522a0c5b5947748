"""
由生成元给出的置换群

稳定子链在首次需要时构造并缓存；并发首次访问由锁串行化。
"""

from __future__ import annotations

import logging
import threading
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ..config import get_settings
from ..errors import GroupTooLarge, NotTransitive
from .chain import StabilizerChain
from .permutation import Images, Permutation, identity_images, inverse_images, mul_images

logger = logging.getLogger(__name__)

PermLike = Union[Permutation, Sequence[int]]


def _as_images(g: PermLike) -> Images:
    return g.images if isinstance(g, Permutation) else tuple(g)


def orbits_of(generators: Sequence[Images], degree: int) -> List[List[int]]:
    """生成元在 {0..degree-1} 上的轨道（按最小点排序，轨道内按 BFS 顺序）"""
    seen = [False] * degree
    result = []
    for start in range(degree):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        k = 0
        while k < len(orbit):
            point = orbit[k]
            for g in generators:
                image = g[point]
                if not seen[image]:
                    seen[image] = True
                    orbit.append(image)
            k += 1
        result.append(orbit)
    return result


def reduce_generators(degree: int, generators: Iterable[Images],
                      base_prefix: Sequence[int] = (0,)) -> Tuple[List[Images], StabilizerChain]:
    """只保留不属于已生成子群的生成元，同时得到其稳定子链"""
    chain = StabilizerChain(degree, base_prefix)
    kept = []
    for g in generators:
        if chain.add_generator(g):
            kept.append(g)
    return kept, chain


class GeneratedGroup:
    """
    置换群 ⟨generators⟩ ≤ Sym(degree)

    Args:
        generators: 生成元（Permutation 或像序列）
        degree: 次数；生成元为空时必须给出
        name: 可选的显示名
    """

    def __init__(
        self,
        generators: Iterable[PermLike],
        degree: Optional[int] = None,
        *,
        name: Optional[str] = None,
        chain: Optional[StabilizerChain] = None,
    ):
        gens = [_as_images(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("没有生成元时必须指定次数")
            degree = len(gens[0])
        if degree <= 0:
            raise ValueError(f"次数必须为正: {degree}")
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"生成元次数 {len(g)} 与群次数 {degree} 不符")
        self.degree = degree
        self.name = name
        identity = identity_images(degree)
        self._gens: Tuple[Images, ...] = tuple(g for g in gens if g != identity)
        self._chain = chain
        self._lock = threading.Lock()
        self._stabilizers: Dict[int, "GeneratedGroup"] = {}

    # ---------- 基本属性 ----------

    @classmethod
    def trivial(cls, degree: int) -> "GeneratedGroup":
        return cls([], degree)

    @property
    def generators(self) -> List[Permutation]:
        return [Permutation(g) for g in self._gens]

    @property
    def raw_generators(self) -> Tuple[Images, ...]:
        return self._gens

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = StabilizerChain.build(self.degree, self._gens, (0,))
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def is_trivial(self) -> bool:
        return not self._gens

    def contains(self, g: PermLike) -> bool:
        return self.chain.contains(_as_images(g))

    __contains__ = contains

    def is_subgroup_of(self, other: "GeneratedGroup") -> bool:
        return all(other.chain.contains(g) for g in self._gens)

    def same_as(self, other: "GeneratedGroup") -> bool:
        """作为 Sym(n) 的子群相等"""
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def is_abelian(self) -> bool:
        gens = self._gens
        return all(
            mul_images(a, b) == mul_images(b, a)
            for i, a in enumerate(gens) for b in gens[i + 1:]
        )

    def elements(self, cap: Optional[int] = None) -> Iterator[Permutation]:
        cap = cap or get_settings().small_group_cap
        order = self.order()
        if order > cap:
            raise GroupTooLarge(f"群阶 {order} 超过枚举上限 {cap}", {"order": order, "cap": cap})
        for g in self.chain.elements():
            yield Permutation(g)

    def subgroup(self, generators: Iterable[PermLike], name: Optional[str] = None) -> "GeneratedGroup":
        return GeneratedGroup(generators, self.degree, name=name)

    def conjugate(self, x: PermLike) -> "GeneratedGroup":
        x = _as_images(x)
        xi = inverse_images(x)
        return GeneratedGroup(
            [mul_images(mul_images(xi, g), x) for g in self._gens], self.degree
        )

    # ---------- 轨道与稳定子 ----------

    def orbit(self, point: int) -> frozenset:
        if not 0 <= point < self.degree:
            raise ValueError(f"点 {point} 超出次数 {self.degree}")
        orbit = [point]
        seen = {point}
        k = 0
        while k < len(orbit):
            for g in self._gens:
                image = g[orbit[k]]
                if image not in seen:
                    seen.add(image)
                    orbit.append(image)
            k += 1
        return frozenset(orbit)

    def orbits(self) -> List[List[int]]:
        return orbits_of(self._gens, self.degree)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def chain_with_base(self, base_prefix: Sequence[int]) -> StabilizerChain:
        """以给定基前缀重建稳定子链"""
        chain = self.chain
        if chain.base[: len(base_prefix)] == list(base_prefix):
            return chain
        return StabilizerChain.build(self.degree, chain.strong_generators(), base_prefix)

    def stabilizer_generators(self, point: int) -> List[Images]:
        """G_point 的强生成元（未约化）"""
        return self.chain_with_base((point,)).level_generators(1)

    def stabilizer(self, point: int) -> "GeneratedGroup":
        if not 0 <= point < self.degree:
            raise ValueError(f"点 {point} 超出次数 {self.degree}")
        cached = self._stabilizers.get(point)
        if cached is not None:
            return cached
        kept, chain = reduce_generators(self.degree, self.stabilizer_generators(point))
        group = GeneratedGroup(kept, self.degree, chain=chain)
        self._stabilizers[point] = group
        return group

    def pointwise_stabilizer(self, points: Sequence[int]) -> "GeneratedGroup":
        points = list(dict.fromkeys(points))
        chain = self.chain_with_base(points)
        kept, sub = reduce_generators(self.degree, chain.level_generators(len(points)))
        return GeneratedGroup(kept, self.degree, chain=sub)

    def rank(self) -> int:
        """传递群的秩：点稳定子的轨道数"""
        if not self.is_transitive():
            raise NotTransitive("秩只对传递群有定义", {"degree": self.degree})
        return len(orbits_of(self.stabilizer_generators(0), self.degree))

    def suborbit_lengths(self) -> List[int]:
        if not self.is_transitive():
            raise NotTransitive("子轨道只对传递群有定义", {"degree": self.degree})
        return sorted(len(o) for o in orbits_of(self.stabilizer_generators(0), self.degree))

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"GeneratedGroup({label}degree={self.degree}, gens={len(self._gens)})"


# ==================== 子群构造 ====================

def normal_closure(group: GeneratedGroup, elements: Iterable[PermLike]) -> GeneratedGroup:
    """elements 在 group 中的正规闭包"""
    degree = group.degree
    chain = StabilizerChain(degree, (0,))
    gens: List[Images] = []
    queue = [_as_images(e) for e in elements]
    while queue:
        x = queue.pop()
        if chain.add_generator(x):
            gens.append(x)
            for g in group.raw_generators:
                queue.append(mul_images(mul_images(inverse_images(g), x), g))
    return GeneratedGroup(gens, degree, chain=chain)


def derived_subgroup(group: GeneratedGroup) -> GeneratedGroup:
    gens = group.raw_generators
    commutators = []
    for i, a in enumerate(gens):
        ai = inverse_images(a)
        for b in gens[i + 1:]:
            c = mul_images(mul_images(ai, inverse_images(b)), mul_images(a, b))
            commutators.append(c)
    return normal_closure(group, commutators) if commutators else GeneratedGroup.trivial(group.degree)


def perfect_residual(group: GeneratedGroup) -> GeneratedGroup:
    """导出列的终点 G^∞"""
    current = group
    while True:
        nxt = derived_subgroup(current)
        if nxt.order() == current.order():
            return current
        current = nxt


def is_normal_in(sub: GeneratedGroup, group: GeneratedGroup) -> bool:
    for g in group.raw_generators:
        gi = inverse_images(g)
        for h in sub.raw_generators:
            if not sub.chain.contains(mul_images(mul_images(gi, h), g)):
                return False
    return True


def intersection_with(group: GeneratedGroup, small: GeneratedGroup) -> GeneratedGroup:
    """group ∩ small（small 需可枚举）"""
    members = [g for g in small.elements() if group.contains(g)]
    kept, chain = reduce_generators(group.degree, [g.images for g in members])
    return GeneratedGroup(kept, group.degree, chain=chain)


def kernel_of_action(group: GeneratedGroup, images: Sequence[Permutation]) -> GeneratedGroup:
    """
    生成元到另一作用的同态的核

    images[i] 是第 i 个生成元的像。在 Ω ⊔ Δ 上的乘积作用中，
    以 Δ 的点作为基前缀，Δ 的逐点稳定子限制到 Ω 即为核。
    """
    n = group.degree
    gens = group.raw_generators
    if len(images) != len(gens):
        raise ValueError("像的个数与非平凡生成元个数不符")
    m = images[0].degree if images else 0
    combined = [
        g + tuple(n + p for p in img.images) for g, img in zip(gens, images)
    ]
    chain = StabilizerChain.build(n + m, combined, tuple(range(n, n + m)))
    level = chain.level_generators(m)
    kept, sub = reduce_generators(n, [h[:n] for h in level])
    return GeneratedGroup(kept, n, chain=sub)
