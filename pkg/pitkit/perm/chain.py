"""
稳定子链（基与强生成集）

确定性的增量 Schreier–Sims：每层保存基点、强生成元、轨道与陪集代表，
已检验过的 (轨道点, 生成元序号) 对不再重复筛选。所有元素都以像元组表示。
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .permutation import Images, identity_images, inverse_images, mul_images

logger = logging.getLogger(__name__)


class Level:
    """链中的一层：G^(i) 作用在基点 point 的轨道上"""

    __slots__ = ("point", "gens", "orbit", "transversal", "inverse", "checked")

    def __init__(self, point: int, identity: Images):
        self.point = point
        self.gens: List[Images] = []
        self.orbit: List[int] = [point]
        self.transversal: Dict[int, Images] = {point: identity}
        self.inverse: Dict[int, Images] = {point: identity}
        self.checked: Set[Tuple[int, int]] = set()

    def copy(self) -> "Level":
        other = Level.__new__(Level)
        other.point = self.point
        other.gens = list(self.gens)
        other.orbit = list(self.orbit)
        other.transversal = dict(self.transversal)
        other.inverse = dict(self.inverse)
        other.checked = set(self.checked)
        return other


class StabilizerChain:
    """
    稳定子链

    Args:
        degree: 作用域大小
        base_prefix: 强制的基前缀（其后的基点按需选取最小的被移动点）
    """

    def __init__(self, degree: int, base_prefix: Sequence[int] = ()):
        self.degree = degree
        self.identity = identity_images(degree)
        self.levels: List[Level] = []
        for point in base_prefix:
            self.levels.append(Level(point, self.identity))

    @classmethod
    def build(
        cls,
        degree: int,
        generators: Iterable[Sequence[int]],
        base_prefix: Sequence[int] = (),
    ) -> "StabilizerChain":
        chain = cls(degree, base_prefix)
        for g in generators:
            chain.add_generator(tuple(g))
        return chain

    # ---------- 查询 ----------

    @property
    def base(self) -> List[int]:
        return [level.point for level in self.levels]

    def order(self) -> int:
        result = 1
        for level in self.levels:
            result *= len(level.orbit)
        return result

    def sift(self, g: Images, start: int = 0) -> Tuple[Images, int]:
        """筛选：返回 (余元, 失败层号)；完全通过时层号为链长"""
        for i in range(start, len(self.levels)):
            level = self.levels[i]
            beta = g[level.point]
            inv = level.inverse.get(beta)
            if inv is None:
                return g, i
            if beta != level.point:
                g = mul_images(g, inv)
        return g, len(self.levels)

    def contains(self, g: Sequence[int]) -> bool:
        residue, _ = self.sift(tuple(g))
        return residue == self.identity

    def strong_generators(self) -> List[Images]:
        seen = set()
        result = []
        for level in self.levels:
            for g in level.gens:
                if g not in seen:
                    seen.add(g)
                    result.append(g)
        return result

    def level_generators(self, i: int) -> List[Images]:
        """G^(i) 的生成元（i 超出链长时为平凡群）"""
        if i >= len(self.levels):
            return []
        return list(self.levels[i].gens)

    def tail(self, start: int) -> "StabilizerChain":
        """G^(start) 的链（各层复制，互不共享）"""
        other = StabilizerChain(self.degree)
        other.levels = [level.copy() for level in self.levels[start:]]
        return other

    def elements(self) -> Iterator[Images]:
        """按 u_{k-1} ... u_0 的乘积枚举全部元素"""
        levels = self.levels

        def walk(i: int, acc: Images) -> Iterator[Images]:
            if i < 0:
                yield acc
                return
            level = levels[i]
            for beta in level.orbit:
                yield from walk(i - 1, mul_images(acc, level.transversal[beta]))

        yield from walk(len(levels) - 1, self.identity)

    # ---------- 增量构造 ----------

    def add_generator(self, g: Sequence[int]) -> bool:
        """加入生成元；若已是成员则返回 False"""
        g = tuple(g)
        if len(g) != self.degree:
            raise ValueError(f"生成元次数 {len(g)} 与链次数 {self.degree} 不符")
        residue, j = self.sift(g)
        if residue == self.identity:
            return False
        self._insert(residue, 0, j)
        self._complete(j)
        return True

    def _insert(self, h: Images, lo: int, hi: int) -> None:
        # h 固定 base[:hi]
        if hi == len(self.levels):
            moved = next(p for p in range(self.degree) if h[p] != p)
            self.levels.append(Level(moved, self.identity))
        for i in range(lo, hi + 1):
            level = self.levels[i]
            level.gens.append(h)
            self._extend_orbit(level)

    @staticmethod
    def _extend_orbit(level: Level) -> None:
        # 陪集代表只追加不替换，已检验的 Schreier 生成元保持有效
        transversal, inverse, orbit = level.transversal, level.inverse, level.orbit
        k = 0
        while k < len(orbit):
            beta = orbit[k]
            u = transversal[beta]
            for s in level.gens:
                gamma = s[beta]
                if gamma not in transversal:
                    v = mul_images(u, s)
                    transversal[gamma] = v
                    inverse[gamma] = inverse_images(v)
                    orbit.append(gamma)
            k += 1

    def _complete(self, i: int) -> None:
        identity = self.identity
        while i >= 0:
            level = self.levels[i]
            jumped = False
            k = 0
            while k < len(level.orbit) and not jumped:
                beta = level.orbit[k]
                u = level.transversal[beta]
                for idx in range(len(level.gens)):
                    key = (beta, idx)
                    if key in level.checked:
                        continue
                    level.checked.add(key)
                    s = level.gens[idx]
                    schreier = mul_images(mul_images(u, s), level.inverse[s[beta]])
                    if schreier == identity:
                        continue
                    h, j = self.sift(schreier, i + 1)
                    if h != identity:
                        self._insert(h, i + 1, j)
                        i = j
                        jumped = True
                        break
                k += 1
            if not jumped:
                i -= 1
        logger.debug("稳定子链完成: base=%s order=%d", self.base, self.order())
