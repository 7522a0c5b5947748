"""
伸缩点域

点 εv（ε ∈ F*/⟨ω^r⟩）规范化为 (j, u)：u 为首个非零坐标为 1 的向量，
v = μu 时把 μ 推入下标 j ← j + dlog μ (mod r)。r = 1 即射影点。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..algebra.field import FiniteField
from ..algebra.matrix import Matrix, SemilinearElement, Vector
from ..errors import NotPrime, RNotDividing
from ..perm.action import LabeledAction
from ..perm.blocks import BlockSystem
from ..perm.group import GeneratedGroup
from ..perm.permutation import Permutation

Element = Union[Matrix, SemilinearElement]


@dataclass(frozen=True)
class ScaledPoint:
    j: int
    u: Vector

    def label(self) -> str:
        return f"{self.j}:" + ",".join(map(str, self.u))


def monic_vectors(f: FiniteField, d: int) -> List[Vector]:
    """全部首一向量，按首个非零位置、再按其余坐标字典序"""
    result = []
    for lead in range(d):
        for tail in product(range(f.q), repeat=d - 1 - lead):
            result.append((0,) * lead + (1,) + tail)
    return result


def normalize(f: FiniteField, w: Sequence[int]) -> Tuple[int, Vector]:
    """w = μu，返回 (dlog μ, u)"""
    lead = next(x for x in w if x)
    if lead == 1:
        return 0, tuple(w)
    inv = f.inv(lead)
    return f.dlog(lead), tuple(f.mul(x, inv) for x in w)


def check_r(f_order: int, r: int) -> None:
    if r < 2 or any(r % p == 0 for p in range(2, int(r ** 0.5) + 1)):
        raise NotPrime(f"r = {r} 不是素数", {"r": r})
    if (f_order - 1) % r:
        raise RNotDividing(f"r = {r} 不整除 {f_order - 1}", {"r": r, "q_minus_1": f_order - 1})


class ScaledDomain:
    """
    伸缩点集合 {(j, u)}，点号 j * |U| + idx(u)

    Args:
        field: 域
        vectors: 首一代表向量（必须在所用群的作用下封闭）
        r: 下标模数
    """

    def __init__(self, f: FiniteField, vectors: Sequence[Vector], r: int = 1):
        self.field = f
        self.vectors = list(vectors)
        self.r = r
        self.index: Dict[Vector, int] = {u: i for i, u in enumerate(self.vectors)}

    @property
    def cell_count(self) -> int:
        return len(self.vectors)

    @property
    def degree(self) -> int:
        return self.r * len(self.vectors)

    def point(self, j: int, u: Vector) -> int:
        return (j % self.r) * len(self.vectors) + self.index[u]

    def point_of(self, k: int) -> ScaledPoint:
        j, idx = divmod(k, len(self.vectors))
        return ScaledPoint(j, self.vectors[idx])

    def labels(self) -> List[str]:
        return [self.point_of(k).label() for k in range(self.degree)]

    def cells(self) -> BlockSystem:
        n = len(self.vectors)
        return BlockSystem.from_cells(
            [j * n + idx for j in range(self.r)] for idx in range(n)
        )

    def permutation(self, element: Element) -> Permutation:
        """φ^i A 诱导的置换：εv ↦ ε^{φ^i}(v^{φ^i} A)"""
        f = self.field
        if isinstance(element, Matrix):
            element = SemilinearElement.linear(element)
        twist = f.q0 ** element.frob % self.r if self.r > 1 else 0
        n = len(self.vectors)
        moved = []
        for u in self.vectors:
            shift, image = normalize(f, element.act(u))
            moved.append((shift, self.index[image]))
        images = [0] * self.degree
        for j in range(self.r):
            base = j * twist if self.r > 1 else 0
            for idx, (shift, target) in enumerate(moved):
                images[j * n + idx] = ((base + shift) % self.r) * n + target
        return Permutation(images)

    def scalar_permutation(self, value: int) -> Permutation:
        """λI：每个点的下标加 dlog λ"""
        shift = self.field.dlog(value) % self.r
        n = len(self.vectors)
        return Permutation(
            ((j + shift) % self.r) * n + idx for j in range(self.r) for idx in range(n)
        )


@dataclass
class ScaledConstruction:
    """
    伸缩构造的产物

    Attributes:
        action: N 的生成元在 Ω 上的作用（homomorphism 接受矩阵或半线性元素）
        plinth_generators: M（SL 或 SU 的像）的生成元
        scalar_generator: ωI 的像，生成 C = Z/Y
        normalizer_generators: ⟨Z, M, GL/GU 对角部分, φ⟩ 的像
    """
    name: str
    domain: ScaledDomain
    action: LabeledAction
    plinth_generators: List[Permutation]
    scalar_generator: Permutation
    normalizer_generators: List[Permutation]
    d: int
    r: int

    @property
    def field(self) -> FiniteField:
        return self.domain.field

    @cached_property
    def plinth(self) -> GeneratedGroup:
        return GeneratedGroup(self.plinth_generators, self.domain.degree, name=f"{self.name}:M")

    @cached_property
    def centralizer(self) -> GeneratedGroup:
        return GeneratedGroup([self.scalar_generator], self.domain.degree, name=f"{self.name}:C")

    @cached_property
    def normalizer(self) -> GeneratedGroup:
        return GeneratedGroup(self.normalizer_generators, self.domain.degree, name=f"{self.name}:N")

    @cached_property
    def centralizer_times_plinth(self) -> GeneratedGroup:
        return GeneratedGroup(
            [self.scalar_generator] + self.plinth_generators, self.domain.degree,
            name=f"{self.name}:CxM",
        )


def build_construction(name: str, domain: ScaledDomain, plinth: List[Matrix],
                       extra: List[Element], d: int) -> ScaledConstruction:
    f = domain.field
    scalar = Matrix.scalar(f, d, f.omega)
    sources: List[Element] = [scalar] + list(plinth) + list(extra)
    perms = [domain.permutation(e) for e in sources]
    action = LabeledAction(
        name=name,
        labels=domain.labels(),
        generators=perms,
        source_generators=sources,
        homomorphism=domain.permutation,
        cells=domain.cells(),
    )
    return ScaledConstruction(
        name=name,
        domain=domain,
        action=action,
        plinth_generators=perms[1:1 + len(plinth)],
        scalar_generator=perms[0],
        normalizer_generators=perms,
        d=d,
        r=domain.r,
    )
