"""
带标签的作用
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional

from .blocks import BlockSystem
from .group import GeneratedGroup
from .permutation import Permutation


@dataclass
class LabeledAction:
    """
    有限集合上的带标签作用

    Attributes:
        name: 作用名
        labels: 点的标签（下标即点号）
        generators: 生成元在该作用下的置换
        source_generators: 抽象生成元（矩阵、基置换等），与 generators 一一对应
        homomorphism: 抽象元素 -> 置换
        cells: 可选的块系（如伸缩作用中的胞腔）
        named_points: 具名点
    """
    name: str
    labels: List[str]
    generators: List[Permutation]
    source_generators: Optional[List[Any]] = None
    homomorphism: Optional[Callable[[Any], Permutation]] = None
    cells: Optional[BlockSystem] = None
    named_points: Dict[str, int] = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return len(self.labels)

    @cached_property
    def group(self) -> GeneratedGroup:
        return GeneratedGroup(self.generators, self.degree, name=self.name)

    def image(self, element: Any) -> Permutation:
        if self.homomorphism is None:
            raise ValueError(f"作用 {self.name} 没有同态")
        return self.homomorphism(element)

    def dump_domain(self) -> List[str]:
        return [f"{i}\t{label}" for i, label in enumerate(self.labels)]

    def point(self, name_or_index: Any) -> int:
        if isinstance(name_or_index, str):
            if name_or_index not in self.named_points:
                raise KeyError(f"作用 {self.name} 没有具名点 {name_or_index!r}")
            return self.named_points[name_or_index]
        return int(name_or_index)
