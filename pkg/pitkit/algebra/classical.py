"""
经典群的生成元

SL(d,q) 用初等矩阵与对角环面；SU(3,q) 用 Q 集合中的根元、环面元与 Weyl 元；
Sp(2d,2) 用辛平延。各构造都在返回前检验所保持的形式。
"""

from __future__ import annotations

import logging
from typing import List

from ..errors import FormNotPreserved
from .field import FiniteField, make_field
from .matrix import Matrix, SemilinearElement

logger = logging.getLogger(__name__)


def _elementary(f: FiniteField, d: int, i: int, j: int, value: int) -> Matrix:
    rows = [[1 if r == c else 0 for c in range(d)] for r in range(d)]
    rows[i][j] = value
    return Matrix.of(f, rows)


def is_degenerate(d: int, q: int) -> bool:
    """PSL(d,q) 非单的情形"""
    return (d, q) in {(2, 2), (2, 3)}


def sl_generators(d: int, f: FiniteField) -> List[Matrix]:
    """SL(d,q) 的生成元：对角元 diag(..ω, ω^-1..) 与相邻初等矩阵"""
    if d < 2:
        raise ValueError(f"维数必须 ≥ 2: {d}")
    if is_degenerate(d, f.q):
        logger.warning("PSL(%d,%d) 不是单群，生成元仍会构造", d, f.q)
    gens = []
    if f.q > 2:
        omega, omega_inv = f.omega, f.inv(f.omega)
        for i in range(d - 1):
            entries = [1] * d
            entries[i], entries[i + 1] = omega, omega_inv
            gens.append(Matrix.diagonal(f, entries))
    for i in range(d - 1):
        gens.append(_elementary(f, d, i, i + 1, 1))
        gens.append(_elementary(f, d, i + 1, i, 1))
    return gens


def gl_extra(d: int, f: FiniteField) -> Matrix:
    """diag(ω, 1, ..., 1)，与 SL 一起生成 GL"""
    return Matrix.diagonal(f, [f.omega] + [1] * (d - 1))


def frobenius_action(f: FiniteField, d: int = 1) -> SemilinearElement:
    """逐元素 q0 次幂映射 φ（GF(q0) 上为恒等）"""
    return SemilinearElement(1 % f.a, Matrix.identity(f, d))


# ==================== 酉群 ====================

def unitary_form(f: FiniteField) -> Matrix:
    """反对角形式矩阵 P，(u, v) = u1 v̄3 + u2 v̄2 + u3 v̄1"""
    return Matrix.of(f, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])


def hermitian(f: FiniteField, u, v) -> int:
    total = 0
    for x, y in zip(u, reversed(v)):
        if x and y:
            total = f.add(total, f.mul(x, f.conj(y)))
    return total


def preserves_unitary_form(a: Matrix) -> bool:
    p = unitary_form(a.field)
    return a * p * a.conjugate().transpose() == p


def _root_element(f: FiniteField, u: int) -> Matrix:
    # [[1,0,0],[u,1,0],[s,-ū,1]]，其中 s + s̄ + uū = 0（u = 0 时取 s ≠ 0）
    target = f.neg(f.mul(u, f.conj(u)))
    for s in f.elements:
        if u == 0 and s == 0:
            continue
        if f.add(s, f.conj(s)) == target:
            return Matrix.of(f, [[1, 0, 0], [u, 1, 0], [s, f.neg(f.conj(u)), 1]])
    raise ValueError(f"{f} 中找不到满足迹条件的 s")


def su3_generators(f: FiniteField) -> List[Matrix]:
    """
    SU(3,q) 的生成元（f 的阶为 q²）

    Raises:
        FormNotPreserved: 某个候选生成元不保持 P
    """
    if f.a % 2:
        raise ValueError(f"{f} 不是某个 GF(q) 的二次扩张")
    q = f.subfield_order
    omega = f.omega
    gens = [_root_element(f, u) for u in (1, omega, 0)]
    gens.append(Matrix.diagonal(f, [omega, f.pow(omega, q - 1), f.pow(omega, -q)]))
    minus_one = f.neg(1)
    gens.append(Matrix.of(f, [[0, 0, 1], [0, minus_one, 0], [1, 0, 0]]))
    check_unitary(gens)
    return gens


def gu_extra(f: FiniteField) -> Matrix:
    """diag(1, ω^{q-1}, 1)，行列式 ω^{q-1}，保持 P"""
    q = f.subfield_order
    return Matrix.diagonal(f, [1, f.pow(f.omega, q - 1), 1])


def check_unitary(gens: List[Matrix]) -> None:
    for k, g in enumerate(gens):
        if not preserves_unitary_form(g):
            raise FormNotPreserved(f"第 {k} 个生成元不保持酉形式", {"index": k})


# ==================== 辛群（特征 2） ====================

def symplectic_form(d: int) -> Matrix:
    """J = [[0, I], [I, 0]]，基 e_1..e_d, f_1..f_d"""
    f = make_field(2, 1)
    n = 2 * d
    return Matrix.of(f, [[1 if abs(i - j) == d else 0 for j in range(n)] for i in range(n)])


def transvection(d: int, v) -> Matrix:
    """t_v: x ↦ x + B(x, v) v，矩阵 I + J vᵀ v"""
    f = make_field(2, 1)
    n = 2 * d
    jv = [v[(i + d) % n] for i in range(n)]
    return Matrix.of(f, [[(1 if i == j else 0) ^ (jv[i] & v[j]) for j in range(n)] for i in range(n)])


def preserves_symplectic_form(g: Matrix, d: int) -> bool:
    j = symplectic_form(d)
    return g * j * g.transpose() == j


def sp_generators(d: int, f: FiniteField = None) -> List[Matrix]:
    """
    Sp(2d,2) 的平延生成元：v ∈ {e_i, f_i, e_i + e_{i+1}}

    这组向量张成 V，在 B 下连通，且不全落在某个二次型的正交群中。
    """
    if d < 2:
        raise ValueError(f"d 必须 ≥ 2: {d}")
    if f is not None and f.q != 2:
        raise ValueError("辛群生成元只在 GF(2) 上构造")
    n = 2 * d
    vectors = []
    for i in range(d):
        vectors.append(tuple(1 if k == i else 0 for k in range(n)))
        vectors.append(tuple(1 if k == i + d else 0 for k in range(n)))
    for i in range(d - 1):
        vectors.append(tuple(1 if k in (i, i + 1) else 0 for k in range(n)))
    gens = [transvection(d, v) for v in vectors]
    for k, g in enumerate(gens):
        if not preserves_symplectic_form(g, d):
            raise FormNotPreserved(f"第 {k} 个平延不保持辛形式", {"index": k})
    return gens


# ==================== 阶公式 ====================

def sl_order(d: int, q: int) -> int:
    order = q ** (d * (d - 1) // 2)
    for i in range(2, d + 1):
        order *= q ** i - 1
    return order


def su3_order(q: int) -> int:
    return q ** 3 * (q ** 2 - 1) * (q ** 3 + 1)


def sp_order(d: int, q: int = 2) -> int:
    order = q ** (d * d)
    for i in range(1, d + 1):
        order *= q ** (2 * i) - 1
    return order
