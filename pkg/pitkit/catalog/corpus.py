"""
2-传递群样本

每个样本给出群 X 以及在表中所属行的参数；把 M_σ 交换化的每个素因子 r
代入表格谓词得到预测，再与穷举神谕的结果对照。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional

from ..actions.projective import projective_action
from ..actions.ree import ree3_line7_action
from ..actions.symplectic import quadratic_form_action
from ..actions.unitary import isotropic_action
from ..algebra.classical import frobenius_action, gl_extra, sl_generators, su3_generators
from ..algebra.field import make_field
from ..algebra.matrix import Matrix, SemilinearElement
from ..classify.special import (
    oracle_special_scan,
    socle_of_almost_simple,
    special_classes,
    special_r_values,
)
from ..classify.table1 import Table1Instance, table1_predicate
from ..perm.cosets import coset_action
from ..perm.group import GeneratedGroup, derived_subgroup
from ..perm.normal import prime_factors
from .ingest import ingest_generators
from .recipes import alternating_base

logger = logging.getLogger(__name__)


# ==================== 群的构造 ====================

def field_power(f, j: int, d: int) -> Optional[SemilinearElement]:
    """φ^j（j 为 a 的倍数时为恒等，返回 None）"""
    if j % f.a == 0:
        return None
    return SemilinearElement(j % f.a, Matrix.identity(f, d))


def linear_group(d: int, q0: int, a: int = 1, diagonal: bool = False, j: Optional[int] = None,
                 name: str = "") -> GeneratedGroup:
    """PSL(d,q)，可附加 diag(ω,1,..) 与 φ^j，作用在射影点上"""
    f = make_field(q0, a)
    gens = list(sl_generators(d, f))
    if diagonal:
        gens.append(gl_extra(d, f))
    if j is not None:
        phi = field_power(f, j, d)
        if phi is not None:
            gens.append(phi)
    return projective_action(gens, f, name=name).group


def unitary_group(q0: int, a: int = 1, j: Optional[int] = None, name: str = "") -> GeneratedGroup:
    """PSU(3,q) 附加 φ^j（φ 在 GF(q²) 上的阶为 2a），作用在迷向点上"""
    f = make_field(q0, 2 * a)
    gens = list(su3_generators(f))
    if j is not None:
        phi = field_power(f, j, 3)
        if phi is not None:
            gens.append(phi)
    return isotropic_action(gens, f, name=name).group


def symmetric_group(n: int) -> GeneratedGroup:
    base = alternating_base(n)
    return GeneratedGroup(base.plinth.generators + [base.extras["transposition"]], n, name=f"S{n}")


def m11_on_12() -> GeneratedGroup:
    """M11 在 PSL(2,11) 的陪集上；PSL(2,11) 取 ⟨11-轮换, 对合⟩ 中第一个阶为 660 的"""
    m11 = ingest_generators("m11.perm", 7920, name="M11")
    cycle = m11.generators[0]
    for x in m11.elements():
        if x.order() != 2:
            continue
        h = GeneratedGroup([cycle, x], m11.degree)
        if h.order() == 660:
            return coset_action(m11, h, name="M11 on 12").group
    raise ValueError("M11 中没有找到 PSL(2,11)")


# ==================== 样本 ====================

@dataclass
class CorpusGroup:
    """
    Attributes:
        params: 表格行参数（不含 r）；None 表示不属于任何行
    """
    name: str
    build: Callable[[], GeneratedGroup]
    params: Optional[Table1Instance] = None
    slow: bool = False


@dataclass
class OracleComparison:
    name: str
    degree: int
    candidates: List[int]
    predicted: List[int]
    oracle: List[int]
    classes: Dict[int, int] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.predicted == self.oracle

    @property
    def unique(self) -> bool:
        return all(n == 1 for n in self.classes.values())

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "degree": self.degree,
            "candidates": self.candidates,
            "predicted": self.predicted,
            "oracle": self.oracle,
            "agree": self.agree,
            "unique": self.unique,
        }


def _psl2(q0: int, a: int = 1, pgl: bool = False) -> CorpusGroup:
    q = q0 ** a
    label = f"{'PGL' if pgl else 'PSL'}(2,{q})"
    return CorpusGroup(
        name=f"{label} on {q + 1}",
        build=lambda: linear_group(2, q0, a, diagonal=pgl, name=label),
        params=Table1Instance(line=2, r=0, d=2, q0=q0, a=a, j=a),
    )


def desk_corpus() -> List[CorpusGroup]:
    corpus = [
        CorpusGroup("A5 on 5", lambda: alternating_base(5).plinth,
                    Table1Instance(line=1, r=0, x_index=1)),
        CorpusGroup("S5 on 5", lambda: symmetric_group(5),
                    Table1Instance(line=1, r=0, x_index=2)),
        CorpusGroup("PGammaL(2,4) on 5", lambda: linear_group(2, 2, 2, j=1, name="PGammaL(2,4)"),
                    Table1Instance(line=2, r=0, d=2, q0=2, a=2, j=1)),
    ]
    for q0, a in ((2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (17, 1)):
        corpus.append(_psl2(q0, a))
        if q0 != 2:
            corpus.append(_psl2(q0, a, pgl=True))
    corpus.extend([
        CorpusGroup("PSL(3,2) on 7", lambda: linear_group(3, 2, name="PSL(3,2)"),
                    Table1Instance(line=3, r=0)),
        CorpusGroup("PSL(3,3) on 13", lambda: linear_group(3, 3, name="PSL(3,3)"),
                    Table1Instance(line=2, r=0, d=3, q0=3, a=1, j=1)),
        CorpusGroup("M11 on 11", lambda: ingest_generators("m11.perm", 7920, name="M11"),
                    Table1Instance(line=8, r=0)),
        CorpusGroup("M11 on 12", m11_on_12),
        CorpusGroup("PSU(3,3) on 28", lambda: unitary_group(3, name="PSU(3,3)"),
                    Table1Instance(line=4, r=0, q0=3, a=1, j=2)),
        CorpusGroup("PGammaL(2,8) on 28", lambda: ree3_line7_action().quotient_on_sigma,
                    Table1Instance(line=7, r=0, x_index=3)),
        CorpusGroup("Sp(6,2) on 28", lambda: quadratic_form_action(3)["-"].group,
                    Table1Instance(line=5, r=0, d=3, epsilon="-"), slow=True),
        CorpusGroup("Sp(6,2) on 36", lambda: quadratic_form_action(3)["+"].group,
                    Table1Instance(line=5, r=0, d=3, epsilon="+"), slow=True),
    ])
    return corpus


def abelianization_primes(x: GeneratedGroup, sigma: int = 0) -> List[int]:
    """|M_σ : M_σ'| 的素因子，M 为 X 的基柱"""
    m_sigma = socle_of_almost_simple(x).stabilizer(sigma)
    index = m_sigma.order() // derived_subgroup(m_sigma).order()
    return prime_factors(index) if index > 1 else []


def predicted_r_values(item: CorpusGroup, candidates: List[int]) -> List[int]:
    if item.params is None:
        return []
    return [r for r in candidates if table1_predicate(replace(item.params, r=r))]


def compare_with_oracle(item: CorpusGroup) -> OracleComparison:
    """在一个样本上比较表格谓词与神谕扫描"""
    x = item.build()
    candidates = abelianization_primes(x)
    scan = oracle_special_scan(x)
    result = OracleComparison(
        name=item.name,
        degree=x.degree,
        candidates=candidates,
        predicted=predicted_r_values(item, candidates),
        oracle=special_r_values(scan),
        classes=special_classes(scan),
    )
    logger.info("%s: 预测 %s, 神谕 %s", item.name, result.predicted, result.oracle)
    return result
