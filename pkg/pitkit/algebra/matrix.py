"""
有限域上的矩阵与半线性元素

行向量约定：向量从左乘矩阵，v ↦ vA。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .field import FiniteField

Vector = Tuple[int, ...]
Rows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Matrix:
    """d×d 矩阵，元素为域元素编码"""
    field: FiniteField
    rows: Rows

    @classmethod
    def of(cls, field: FiniteField, rows: Iterable[Iterable[int]]) -> "Matrix":
        rows = tuple(tuple(r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("矩阵必须为方阵")
        return cls(field, rows)

    @classmethod
    def identity(cls, field: FiniteField, d: int) -> "Matrix":
        return cls(field, tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d)))

    @classmethod
    def scalar(cls, field: FiniteField, d: int, value: int) -> "Matrix":
        return cls(field, tuple(tuple(value if i == j else 0 for j in range(d)) for i in range(d)))

    @classmethod
    def diagonal(cls, field: FiniteField, entries: Sequence[int]) -> "Matrix":
        d = len(entries)
        return cls(field, tuple(tuple(entries[i] if i == j else 0 for j in range(d)) for i in range(d)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __mul__(self, other: "Matrix") -> "Matrix":
        f = self.field
        cols = list(zip(*other.rows))
        return Matrix(f, tuple(
            tuple(_dot(f, row, col) for col in cols) for row in self.rows
        ))

    def act(self, v: Sequence[int]) -> Vector:
        """vA"""
        f = self.field
        result = [0] * self.dim
        for vi, row in zip(v, self.rows):
            if vi:
                for j, aij in enumerate(row):
                    if aij:
                        result[j] = f.add(result[j], f.mul(vi, aij))
        return tuple(result)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.rows)))

    def map_entries(self, fn) -> "Matrix":
        return Matrix(self.field, tuple(tuple(fn(x) for x in row) for row in self.rows))

    def frobenius(self, power: int = 1) -> "Matrix":
        """A^{φ^power}：元素逐个取 q0^power 次幂"""
        f = self.field
        return self.map_entries(lambda x: f.frobenius(x, power))

    def conjugate(self) -> "Matrix":
        """Ā：元素逐个取 q 次幂（二次扩张域）"""
        return self.map_entries(self.field.conj)

    def _echelon(self) -> Tuple[List[List[int]], List[List[int]], int, int]:
        f = self.field
        d = self.dim
        a = [list(r) for r in self.rows]
        inv = [list(r) for r in Matrix.identity(f, d).rows]
        det = 1
        for col in range(d):
            pivot = next((r for r in range(col, d) if a[r][col]), None)
            if pivot is None:
                return a, inv, 0, col
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                inv[col], inv[pivot] = inv[pivot], inv[col]
                det = f.neg(det)
            p = a[col][col]
            det = f.mul(det, p)
            pinv = f.inv(p)
            a[col] = [f.mul(x, pinv) for x in a[col]]
            inv[col] = [f.mul(x, pinv) for x in inv[col]]
            for r in range(d):
                if r != col and a[r][col]:
                    c = a[r][col]
                    a[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(a[r], a[col])]
                    inv[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(inv[r], inv[col])]
        return a, inv, det, d

    def det(self) -> int:
        return self._echelon()[2]

    def inverse(self) -> "Matrix":
        _, inv, det, _ = self._echelon()
        if det == 0:
            raise ZeroDivisionError("矩阵不可逆")
        return Matrix(self.field, tuple(tuple(r) for r in inv))

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.field, self.dim)

    def dlog_rows(self) -> List[List[int]]:
        """按离散对数编码（零元记为 -1）"""
        return [[self.field.dlog(x) if x else -1 for x in row] for row in self.rows]


def _dot(f: FiniteField, u: Sequence[int], v: Sequence[int]) -> int:
    total = 0
    for x, y in zip(u, v):
        if x and y:
            total = f.add(total, f.mul(x, y))
    return total


@dataclass(frozen=True)
class SemilinearElement:
    """
    半线性元素 φ^i A：v ↦ (v^{φ^i}) A

    合成律 (φ^i A)(φ^j B) = φ^{i+j} (A^{φ^j} B)。
    """
    frob: int
    matrix: Matrix

    @property
    def field(self) -> FiniteField:
        return self.matrix.field

    @classmethod
    def linear(cls, matrix: Matrix) -> "SemilinearElement":
        return cls(0, matrix)

    def __mul__(self, other: "SemilinearElement") -> "SemilinearElement":
        a = self.field.a
        return SemilinearElement(
            (self.frob + other.frob) % a,
            self.matrix.frobenius(other.frob) * other.matrix,
        )

    def act(self, v: Sequence[int]) -> Vector:
        f = self.field
        if self.frob:
            v = tuple(f.frobenius(x, self.frob) for x in v)
        return self.matrix.act(v)


def format_matrices(field: FiniteField, matrices: Sequence[Matrix]) -> str:
    """矩阵导出格式：首行 "q0 a d"，每个矩阵一块，按行列出离散对数（零记为 -1）"""
    d = matrices[0].dim if matrices else 0
    blocks = [f"{field.q0} {field.a} {d}"]
    for m in matrices:
        blocks.append("\n".join(" ".join(map(str, row)) for row in m.dlog_rows()))
    return "\n\n".join(blocks) + "\n"
