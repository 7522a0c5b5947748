"""
Sp(2d,2) 的二次型作用与 Dickson 不变量

V = GF(2)^{2d} 的向量编码为位掩码（第 i 位为第 i 个坐标，基 e_1..e_d, f_1..f_d）。
二次型以值表表示：一个 2^{2d} 位整数，第 u 位为 Q(u)。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..algebra.classical import sp_generators
from ..algebra.field import make_field
from ..algebra.matrix import Matrix
from ..errors import NotInStabilizer
from ..perm.action import LabeledAction
from ..perm.group import GeneratedGroup
from ..perm.permutation import Permutation

logger = logging.getLogger(__name__)


def _bits(mask: int, n: int) -> Tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(n))


def _mask(bits: Sequence[int]) -> int:
    return sum(b << i for i, b in enumerate(bits))


def apply_matrix(m: Matrix, u: int, n: int) -> int:
    return _mask(m.act(_bits(u, n)))


def base_form(d: int) -> List[int]:
    """Q0(x) = Σ x_{e_i} x_{f_i} 在所有向量上的取值"""
    n = 2 * d
    return [
        sum(((u >> i) & 1) & ((u >> (i + d)) & 1) for i in range(d)) & 1
        for u in range(1 << n)
    ]


@dataclass(frozen=True)
class QuadraticFormPoint:
    """以值表给出的二次型"""
    table: int
    zeros: int
    epsilon: str

    def value(self, u: int) -> int:
        return (self.table >> u) & 1

    def label(self) -> str:
        return format(self.table, "x")


def all_forms(d: int) -> List[QuadraticFormPoint]:
    """极化为固定交错形式的全部 2^{2d} 个二次型 Q0 + ℓ"""
    n = 2 * d
    q0 = base_form(d)
    plus_zeros = (1 << (n - 1)) + (1 << (d - 1))
    forms = []
    for ell in range(1 << n):
        values = [q0[u] ^ (bin(u & ell).count("1") & 1) for u in range(1 << n)]
        zeros = values.count(0)
        forms.append(QuadraticFormPoint(
            table=_mask(values),
            zeros=zeros,
            epsilon="+" if zeros == plus_zeros else "-",
        ))
    return forms


def polarizes(form: QuadraticFormPoint, d: int) -> bool:
    """(u, v) = Q(u+v) - Q(u) - Q(v)"""
    n = 2 * d
    for u in range(1 << n):
        for v in range(1 << n):
            b = sum(((u >> i) & 1) * ((v >> ((i + d) % n)) & 1) for i in range(n)) & 1
            if form.value(u ^ v) ^ form.value(u) ^ form.value(v) != b:
                return False
    return True


def transform_form(form: QuadraticFormPoint, g_inv: Matrix, n: int) -> int:
    """Q^g(u) = Q(u g^-1) 的值表"""
    return _mask([form.value(apply_matrix(g_inv, u, n)) for u in range(1 << n)])


@dataclass
class SymplecticAction:
    """
    Sp(2d,2) 在非零向量与全部二次型上的联合作用

    点 0..2^{2d}-2 为非零向量 u（点号 u-1），其后为按 ℓ 排列的二次型。
    """
    d: int
    generators: List[Matrix]
    forms: List[QuadraticFormPoint]
    action: LabeledAction

    @property
    def vector_count(self) -> int:
        return (1 << (2 * self.d)) - 1

    def form_point(self, ell: int) -> int:
        return self.vector_count + ell

    def first_form(self, epsilon: str) -> int:
        return next(k for k, f in enumerate(self.forms) if f.epsilon == epsilon)

    @cached_property
    def group(self) -> GeneratedGroup:
        return self.action.group

    def matrix_of(self, g: Permutation) -> Matrix:
        """从基向量的像读出矩阵"""
        n = 2 * self.d
        rows = [_bits(g[(1 << i) - 1] + 1, n) for i in range(n)]
        return Matrix.of(make_field(2, 1), rows)


def symplectic_action(d: int) -> SymplecticAction:
    n = 2 * d
    gens = sp_generators(d)
    forms = all_forms(d)
    lookup: Dict[int, int] = {f.table: k for k, f in enumerate(forms)}
    vectors = (1 << n) - 1

    def permutation(g: Matrix) -> Permutation:
        g_inv = g.inverse()
        images = [apply_matrix(g, u, n) - 1 for u in range(1, 1 << n)]
        images.extend(vectors + lookup[transform_form(f, g_inv, n)] for f in forms)
        return Permutation(images)

    labels = [f"v:{u:x}" for u in range(1, 1 << n)] + [f"Q:{f.label()}" for f in forms]
    action = LabeledAction(
        name=f"Sp({n},2)",
        labels=labels,
        generators=[permutation(g) for g in gens],
        source_generators=gens,
        homomorphism=permutation,
    )
    result = SymplecticAction(d, gens, forms, action)
    action.named_points.update({
        "plus_form": result.form_point(result.first_form("+")),
        "minus_form": result.form_point(result.first_form("-")),
    })
    return result


def quadratic_form_action(d: int) -> Dict[str, LabeledAction]:
    """
    Sp(2d,2) 在 ε = +、- 两类二次型上的作用

    Returns:
        {"+": 作用, "-": 作用}，次数分别为 2^{2d-1} ± 2^{d-1}
    """
    n = 2 * d
    gens = sp_generators(d)
    forms = all_forms(d)
    result = {}
    for epsilon in ("+", "-"):
        members = [f for f in forms if f.epsilon == epsilon]
        lookup = {f.table: k for k, f in enumerate(members)}

        def permutation(g: Matrix, members=members, lookup=lookup) -> Permutation:
            g_inv = g.inverse()
            return Permutation(lookup[transform_form(f, g_inv, n)] for f in members)

        result[epsilon] = LabeledAction(
            name=f"Sp({n},2) on Q{epsilon}",
            labels=[f.label() for f in members],
            generators=[permutation(g) for g in gens],
            source_generators=gens,
            homomorphism=permutation,
        )
    return result


# ==================== Dickson 不变量 ====================

def gf2_rank(rows: np.ndarray) -> int:
    a = rows.copy() % 2
    rank = 0
    n_rows, n_cols = a.shape
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if a[r, col]), None)
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        for r in range(n_rows):
            if r != rank and a[r, col]:
                a[r] ^= a[rank]
        rank += 1
    return rank


def preserves_form(h: Matrix, form: QuadraticFormPoint, d: int) -> bool:
    n = 2 * d
    return all(form.value(apply_matrix(h, u, n)) == form.value(u) for u in range(1 << n))


def dickson_class(h: Matrix, form: QuadraticFormPoint, d: int) -> int:
    """
    rank(h - I) 的奇偶性；0 当且仅当 h ∈ Ω(V, Q)

    Raises:
        NotInStabilizer: h 不保持 Q
    """
    if not preserves_form(h, form, d):
        raise NotInStabilizer("矩阵不保持给定二次型", {"form": form.label()})
    m = np.array(h.rows, dtype=np.int64) ^ np.eye(h.dim, dtype=np.int64)
    return gf2_rank(m) % 2


def kernel_of_cyclic_character(group: GeneratedGroup, character) -> GeneratedGroup:
    """
    取值于 Z/2 的特征标的核

    陪集代表取 {1, t}（t 为首个特征标非零的生成元），核由 Schreier 生成元生成。
    """
    from ..perm.group import reduce_generators

    gens = group.generators
    values = [character(g) for g in gens]
    if not any(values):
        return group
    t = gens[values.index(1)]
    t_inv = t.inverse()
    schreier = []
    for s, v in zip(gens, values):
        schreier.append(s * t_inv if v else s)
        schreier.append(t * s if v else t * s * t_inv)
    kept, chain = reduce_generators(group.degree, [g.images for g in schreier if not g.is_identity()])
    return GeneratedGroup(kept, group.degree, chain=chain)
