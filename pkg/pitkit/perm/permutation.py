"""
置换

置换以像元组表示：第 i 个分量是点 i 的像。
复合采用右作用约定：p * q 表示先作用 p 再作用 q，即 (p * q)[i] = q[p[i]]。
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import lcm
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

from ..errors import ParseError

Images = Tuple[int, ...]


@lru_cache(maxsize=64)
def identity_images(degree: int) -> Images:
    return tuple(range(degree))


def mul_images(a: Sequence[int], b: Sequence[int]) -> Images:
    """先 a 后 b"""
    return tuple(map(b.__getitem__, a))


def inverse_images(a: Sequence[int]) -> Images:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


class Permutation:
    """{0..n-1} 上的置换"""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        self.images: Images = tuple(images)
        self._hash = None

    # ---------- 构造 ----------

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(identity_images(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    raise ParseError(f"点 {point} 超出次数 {degree}", {"point": point})
                if point in seen:
                    raise ParseError(f"点 {point} 在轮换中重复出现", {"point": point})
                seen.add(point)
            for k, point in enumerate(cycle):
                images[point] = cycle[(k + 1) % len(cycle)]
        return cls(images)

    # ---------- 基本运算 ----------

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(mul_images(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(inverse_images(self.images))

    __invert__ = inverse

    def __pow__(self, exponent: int) -> "Permutation":
        base = self.images if exponent >= 0 else inverse_images(self.images)
        exponent = abs(exponent)
        result = identity_images(self.degree)
        while exponent:
            if exponent & 1:
                result = mul_images(result, base)
            base = mul_images(base, base)
            exponent >>= 1
        return Permutation(result)

    def conjugate(self, x: "Permutation") -> "Permutation":
        """x^-1 * self * x"""
        return x.inverse() * self * x

    def commutator(self, other: "Permutation") -> "Permutation":
        return self.inverse() * other.inverse() * self * other

    def is_identity(self) -> bool:
        return self.images == identity_images(self.degree)

    # ---------- 结构 ----------

    def cycles(self) -> List[Tuple[int, ...]]:
        """非平凡轮换，按最小点排序"""
        seen = [False] * self.degree
        result = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = self.images[point]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def cycle_type(self) -> Tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        fixed = self.degree - sum(lengths)
        return tuple(sorted(lengths + [1] * fixed))

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def support(self) -> List[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def fixed_points(self) -> List[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    # ---------- 比较与显示 ----------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def to_cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def to_image_line(self) -> str:
        return " ".join(map(str, self.images))

    def __repr__(self) -> str:
        return f"Permutation({self.to_cycle_string()}, degree={self.degree})"


# ==================== 文本格式 ====================

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """
    解析一个置换

    支持轮换记号 "(0 1 2)(3 4)" 或像列表 "1 2 0 4 3"。
    """
    text = text.strip()
    if not text:
        raise ParseError("空的置换文本")
    if text.startswith("("):
        if _CYCLE_RE.sub("", text).strip():
            raise ParseError(f"无法解析的轮换记号: {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            parts = body.replace(",", " ").split()
            try:
                cycles.append([int(p) for p in parts])
            except ValueError:
                raise ParseError(f"轮换中含非整数: {body!r}")
        return Permutation.from_cycles(cycles, degree)

    try:
        images = [int(p) for p in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"像列表中含非整数: {text!r}")
    if len(images) != degree:
        raise ParseError(
            f"像列表长度 {len(images)} 与次数 {degree} 不符",
            {"expected": degree, "actual": len(images)},
        )
    if sorted(images) != list(range(degree)):
        raise ParseError("像列表不是双射", {"images": images})
    return Permutation(images)


def parse_permutation_file(text: str) -> Tuple[int, List[Permutation]]:
    """
    解析置换文件

    格式：首个有效行为 "degree n"，之后每行一个生成元。
    空行与 '#' 开头的注释行被忽略。
    """
    lines = [
        line.strip() for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("置换文件为空")
    header = lines[0].split()
    if len(header) != 2 or header[0].lower() != "degree":
        raise ParseError(f"缺少 degree 头: {lines[0]!r}")
    try:
        degree = int(header[1])
    except ValueError:
        raise ParseError(f"次数不是整数: {header[1]!r}")
    if degree <= 0:
        raise ParseError(f"次数必须为正: {degree}")
    if len(lines) < 2:
        raise ParseError("置换文件中没有生成元")
    return degree, [parse_permutation(line, degree) for line in lines[1:]]


def read_permutation_file(path: Path) -> Tuple[int, List[Permutation]]:
    return parse_permutation_file(Path(path).read_text(encoding="utf-8"))


def format_permutations(degree: int, perms: Iterable[Permutation]) -> str:
    lines = [f"degree {degree}"]
    lines.extend(p.to_image_line() for p in perms)
    return "\n".join(lines) + "\n"
