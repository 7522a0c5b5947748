"""
部分线性空间

点线关联结构 (P, L)：线长 k > 2 恒定，每点所在线数恒定，任两点至多共一线，
且存在不共线的点对。秩 3 群的两个非平凡轨道对应共线点对与不共线点对。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from ..actions.projective import scaled_projective_action
from ..algebra.field import make_field
from ..errors import NotPartialLinearSpace, ParseError
from ..perm.group import GeneratedGroup, orbits_of
from ..perm.permutation import Permutation

logger = logging.getLogger(__name__)

Line = FrozenSet[int]


@dataclass
class IncidenceStructure:
    """点 0..n-1 与若干条线"""
    point_count: int
    lines: List[Line]
    name: str = "design"

    @classmethod
    def of(cls, point_count: int, lines, name: str = "design") -> "IncidenceStructure":
        unique = sorted({frozenset(l) for l in lines}, key=lambda l: sorted(l))
        return cls(point_count, unique, name)

    @property
    def line_size(self) -> Optional[int]:
        sizes = {len(l) for l in self.lines}
        return sizes.pop() if len(sizes) == 1 else None

    def replication(self) -> Optional[int]:
        counts = [0] * self.point_count
        for line in self.lines:
            for p in line:
                counts[p] += 1
        values = set(counts)
        return values.pop() if len(values) == 1 else None

    def collinear_pairs(self) -> Dict[Tuple[int, int], int]:
        """(a, b), a < b -> 共线的线数"""
        pairs: Dict[Tuple[int, int], int] = {}
        for line in self.lines:
            for a, b in combinations(sorted(line), 2):
                pairs[(a, b)] = pairs.get((a, b), 0) + 1
        return pairs

    def collinear_with(self, point: int) -> set:
        result = set()
        for line in self.lines:
            if point in line:
                result |= line
        result.discard(point)
        return result

    def preserved_by(self, g: Permutation) -> bool:
        lines = set(self.lines)
        return all(frozenset(g[p] for p in line) in lines for line in self.lines)

    def to_text(self) -> str:
        rows = [f"points {self.point_count}"]
        rows.extend(" ".join(map(str, sorted(l))) for l in self.lines)
        return "\n".join(rows) + "\n"


@dataclass
class PlsReport:
    points: int
    lines: int
    line_size: int
    replication: int
    preserved: bool
    rank: int
    orbitals_match: bool
    group_order: int
    unpreserving_generators: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.preserved and self.rank == 3 and self.orbitals_match

    def to_dict(self) -> dict:
        return {
            "points": self.points,
            "lines": self.lines,
            "line_size": self.line_size,
            "replication": self.replication,
            "preserved": self.preserved,
            "rank": self.rank,
            "orbitals_match": self.orbitals_match,
            "group_order": self.group_order,
        }


def check_axioms(s: IncidenceStructure) -> None:
    """
    Raises:
        NotPartialLinearSpace: 违反的公理名见 axiom 属性
    """
    if not s.lines:
        raise NotPartialLinearSpace("line_size", "没有线")
    for line in s.lines:
        if any(not 0 <= p < s.point_count for p in line):
            raise NotPartialLinearSpace("points", "线中含有越界点", {"line": sorted(line)})
    k = s.line_size
    if k is None or k <= 2:
        raise NotPartialLinearSpace("line_size", "线长不恒定或不超过 2", {"line_size": k})
    if s.replication() is None:
        raise NotPartialLinearSpace("replication", "各点所在线数不恒定")
    pairs = s.collinear_pairs()
    doubled = [pair for pair, count in pairs.items() if count > 1]
    if doubled:
        raise NotPartialLinearSpace("pair", "存在同时位于两条线上的点对",
                                    {"pair": list(doubled[0])})
    if len(pairs) == s.point_count * (s.point_count - 1) // 2:
        raise NotPartialLinearSpace("non_collinear", "任两点都共线（线性空间）")


def verify_pls(s: IncidenceStructure, g: GeneratedGroup) -> PlsReport:
    """
    检查部分线性空间公理、生成元保持线集，并比较 G_0 的轨道与共线/不共线点集

    Raises:
        NotPartialLinearSpace: 违反公理
        ValueError: 群的次数与点数不符
    """
    if g.degree != s.point_count:
        raise ValueError(f"群次数 {g.degree} 与点数 {s.point_count} 不符")
    check_axioms(s)
    bad = [i for i, x in enumerate(g.generators) if not s.preserved_by(x)]
    rank = g.rank() if g.is_transitive() else 0
    collinear = s.collinear_with(0)
    others = set(range(1, s.point_count)) - collinear
    orbits = [set(o) for o in orbits_of(g.stabilizer_generators(0), g.degree) if 0 not in o]
    orbitals_match = sorted(map(sorted, orbits)) == sorted(map(sorted, [collinear, others]))
    report = PlsReport(
        points=s.point_count,
        lines=len(s.lines),
        line_size=s.line_size,
        replication=s.replication(),
        preserved=not bad,
        rank=rank,
        orbitals_match=orbitals_match,
        group_order=g.order(),
        unpreserving_generators=bad,
    )
    logger.info("部分线性空间 %s: 秩 %d, 轨道匹配 %s", s.name, rank, orbitals_match)
    return report


# ==================== 设计文件 ====================

def parse_design(text: str, name: str = "design") -> IncidenceStructure:
    """格式：首行 "points n"，其后每行一条线（空格分隔的点号）；# 开头为注释"""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ParseError("设计文件为空")
    head = rows[0].split()
    if len(head) != 2 or head[0] != "points" or not head[1].isdigit():
        raise ParseError(f"首行应为 'points n'，实际为 {rows[0]!r}")
    n = int(head[1])
    lines = []
    for k, row in enumerate(rows[1:], start=2):
        try:
            points = [int(x) for x in row.split()]
        except ValueError:
            raise ParseError(f"第 {k} 行含有非整数", {"row": row})
        if any(not 0 <= p < n for p in points):
            raise ParseError(f"第 {k} 行点号越界", {"row": row})
        lines.append(points)
    return IncidenceStructure.of(n, lines, name)


def read_design(path: Union[str, Path]) -> IncidenceStructure:
    path = Path(path)
    return parse_design(path.read_text(encoding="utf-8"), name=path.stem)


# ==================== 两个例子 ====================

FANO_LINES = [frozenset((1 + t) % 7 for t in (s, s + 1, s + 3)) for s in range(7)]


def _fano_collineations() -> List[Tuple[int, ...]]:
    """Z7 上线为 {1,2,4}+t 的 Fano 平面的全部直射"""
    lines = set(FANO_LINES)
    return [
        g for g in permutations(range(7))
        if all(frozenset(g[p] for p in line) in lines for line in lines)
    ]


def z14_structure() -> IncidenceStructure:
    """Z14 上线为 {x, x+1, x+4, x+6} 的结构"""
    lines = [[(x + d) % 14 for d in (0, 1, 4, 6)] for x in range(14)]
    return IncidenceStructure.of(14, lines, name="z14")


def z14_group(s: Optional[IncidenceStructure] = None) -> GeneratedGroup:
    """
    ⟨x+1, 9x, Fano 对合的提升⟩，阶 336

    提升形如 x = 8s + 7ε ↦ 8g(s) + 7(ε + δ_s)（中国剩余定理坐标），
    在 Fano 直射 g 与 δ ∈ {0,1}^7 上搜索第一个保持线集且不在 ⟨x+1, 9x⟩ 中的。
    """
    s = s or z14_structure()
    shift = Permutation((x + 1) % 14 for x in range(14))
    scale = Permutation(9 * x % 14 for x in range(14))
    base = GeneratedGroup([shift, scale], 14)
    for g in _fano_collineations():
        if g[0] != 0 or g == tuple(range(7)):
            continue
        for mask in range(128):
            images = [0] * 14
            for x in range(14):
                point, eps = x % 7, x % 2
                delta = (mask >> point) & 1
                images[x] = (8 * g[point] + 7 * ((eps + delta) % 2)) % 14
            lift = Permutation(images)
            if s.preserved_by(lift) and not base.contains(lift):
                logger.debug("Z14 提升: g=%s δ=%s", g, format(mask, "07b"))
                return GeneratedGroup([shift, scale, lift], 14, name="C2 x PSL(3,2)")
    raise ValueError("未找到 Fano 对合的提升")


def _pg32_vectors():
    """ΓL(2,4) 的伸缩作用（r = 3），每个点是 GF(4)² 中的非零向量 ω^j u"""
    f = make_field(2, 2)
    construction = scaled_projective_action(2, f, 3)
    domain = construction.domain
    vectors = []
    for k in range(domain.degree):
        pt = domain.point_of(k)
        scale = f.exp(pt.j)
        vectors.append(tuple(f.mul(scale, x) for x in pt.u))
    return f, construction, vectors


def _pg32_lines(f, vectors) -> List[Line]:
    index = {v: k for k, v in enumerate(vectors)}
    lines = set()
    for a, b in combinations(range(len(vectors)), 2):
        c = tuple(f.add(x, y) for x, y in zip(vectors[a], vectors[b]))
        lines.add(frozenset((a, b, index[c])))
    return sorted(lines, key=lambda l: sorted(l))


def pg32_structure() -> Tuple[IncidenceStructure, GeneratedGroup]:
    """PG(3,2) 去掉 GF(4)-线展开的 5 条线后剩下的 30 条线，与 ΓL(2,4)（阶 360）"""
    f, construction, vectors = _pg32_vectors()
    spread = {frozenset(cell) for cell in construction.domain.cells().blocks}
    lines = [l for l in _pg32_lines(f, vectors) if l not in spread]
    structure = IncidenceStructure.of(len(vectors), lines, name="pg32-minus-spread")
    return structure, construction.normalizer


def pg32_full() -> IncidenceStructure:
    """PG(3,2) 的全部 35 条线（线性空间）"""
    f, _, vectors = _pg32_vectors()
    return IncidenceStructure.of(len(vectors), _pg32_lines(f, vectors), name="pg32")
