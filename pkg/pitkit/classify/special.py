"""
特殊对判定

(X, R) 是特殊对，当且仅当：
(a) X 在 Σ 上 2-传递且基柱 T = X^∞ 为非交换单群；
(b) R 是 T_σ 的真非平凡正规子群，在 X_σ 下不变，T_σ/R 为 p^c 阶初等交换群；
(c) X_σ 的共轭作用在 T_σ/R 的 p^c - 1 个非平凡元上传递（p^c = 2 时自动成立）。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, List, Optional

from ..errors import GroupTooLarge, SigmaNotFixed
from ..perm.group import (
    GeneratedGroup,
    derived_subgroup,
    is_normal_in,
    normal_closure,
    perfect_residual,
)
from ..perm.normal import is_simple, prime_factors
from ..perm.permutation import Images, Permutation, inverse_images, mul_images

logger = logging.getLogger(__name__)

# 商群枚举上限
MAX_QUOTIENT_ORDER = 4096
# 神谕扫描的子空间枚举上限
MAX_SCAN_ORDER = 256


class FailedCondition(str, Enum):
    NOT_2_TRANSITIVE = "not2transitive"
    SOCLE_NOT_SIMPLE = "socleNotSimple"
    R_NOT_NORMAL_INVARIANT = "RnotNormalInvariant"
    QUOTIENT_NOT_ELEM_ABELIAN = "quotientNotElemAbelian"
    CONJUGATION_NOT_TRANSITIVE = "conjugationNotTransitive"


@dataclass
class SpecialPairVerdict:
    holds: bool
    p: Optional[int] = None
    c: Optional[int] = None
    failed_condition: Optional[FailedCondition] = None

    @property
    def r(self) -> Optional[int]:
        return self.p ** self.c if self.p is not None else None

    def to_dict(self) -> Dict:
        return {
            "holds": self.holds,
            "p": self.p,
            "c": self.c,
            "r": self.r,
            "failed_condition": self.failed_condition.value if self.failed_condition else None,
        }


def socle_of_almost_simple(x: GeneratedGroup) -> GeneratedGroup:
    """2-传递几乎单群的基柱 X^∞"""
    return perfect_residual(x)


def is_two_transitive(x: GeneratedGroup) -> bool:
    return x.degree > 1 and x.is_transitive() and x.rank() == 2


class CosetQuotient:
    """H/K 的元素（K ⊴ H），以 H 中的代表元表示"""

    def __init__(self, h: GeneratedGroup, k: GeneratedGroup, cap: int = MAX_QUOTIENT_ORDER):
        order = h.order() // k.order()
        if order > cap:
            raise GroupTooLarge(f"商群阶 {order} 超过上限 {cap}", {"order": order, "cap": cap})
        self.k = k
        self.order = order
        identity = h.chain.identity
        self.reps: List[Images] = [identity]
        queue = [identity]
        while queue:
            x = queue.pop()
            for g in h.raw_generators:
                y = mul_images(x, g)
                if self.index_of(y) is None:
                    self.reps.append(y)
                    queue.append(y)

    def index_of(self, x: Images) -> Optional[int]:
        for i, rep in enumerate(self.reps):
            if self.k.chain.contains(mul_images(x, inverse_images(rep))):
                return i
        return None

    def conjugation_permutation(self, g: Images) -> Permutation:
        gi = inverse_images(g)
        return Permutation(self.index_of(mul_images(mul_images(gi, rep), g)) for rep in self.reps)


def is_special_pair(x: GeneratedGroup, r_sub: GeneratedGroup, sigma: int) -> SpecialPairVerdict:
    """
    特殊对判定，依次检查 (a)(b)(c)

    Raises:
        SigmaNotFixed: R 不固定 σ
    """
    if any(g[sigma] != sigma for g in r_sub.raw_generators):
        raise SigmaNotFixed("R 不固定 σ", {"sigma": sigma})
    if not is_two_transitive(x):
        return SpecialPairVerdict(False, failed_condition=FailedCondition.NOT_2_TRANSITIVE)

    socle = socle_of_almost_simple(x)
    if socle.order() == 1 or not is_simple(socle):
        return SpecialPairVerdict(False, failed_condition=FailedCondition.SOCLE_NOT_SIMPLE)

    m_sigma = socle.stabilizer(sigma)
    x_sigma = x.stabilizer(sigma)
    r_order = r_sub.order()
    if (
        r_order == 1
        or r_order == m_sigma.order()
        or not r_sub.is_subgroup_of(m_sigma)
        or not is_normal_in(r_sub, m_sigma)
        or not is_normal_in(r_sub, x_sigma)
    ):
        return SpecialPairVerdict(False, failed_condition=FailedCondition.R_NOT_NORMAL_INVARIANT)

    index = m_sigma.order() // r_order
    p = prime_factors(index)[0]
    c = 0
    rest = index
    while rest % p == 0:
        rest //= p
        c += 1
    gens = m_sigma.generators
    abelian = all(r_sub.contains(a.commutator(b)) for a, b in combinations(gens, 2))
    exponent_p = all(r_sub.contains(g ** p) for g in gens)
    if rest != 1 or not abelian or not exponent_p:
        return SpecialPairVerdict(False, failed_condition=FailedCondition.QUOTIENT_NOT_ELEM_ABELIAN)

    if index > 2:
        quotient = CosetQuotient(m_sigma, r_sub)
        perms = [quotient.conjugation_permutation(g) for g in x_sigma.raw_generators]
        orbit = {1}
        queue = [1]
        while queue:
            i = queue.pop()
            for perm in perms:
                j = perm[i]
                if j not in orbit:
                    orbit.add(j)
                    queue.append(j)
        if len(orbit) != index - 1:
            return SpecialPairVerdict(False, p, c, FailedCondition.CONJUGATION_NOT_TRANSITIVE)

    return SpecialPairVerdict(True, p, c)


# ==================== 神谕扫描 ====================

@dataclass
class OracleCandidate:
    subgroup: GeneratedGroup
    p: int
    index: int
    verdict: SpecialPairVerdict

    @property
    def r(self) -> int:
        return self.index


def _subgroups_of_elementary_abelian(quotient: CosetQuotient) -> List[frozenset]:
    """V = H/K 的全部真子群（以代表元序号集表示）"""
    n = quotient.order
    table = [
        [quotient.index_of(mul_images(a, b)) for b in quotient.reps] for a in quotient.reps
    ]

    def span(elements) -> frozenset:
        group = {0}
        for e in elements:
            if e in group:
                continue
            group.add(e)
            while True:
                new = {table[a][b] for a in group for b in group} - group
                if not new:
                    break
                group |= new
        return frozenset(group)

    found = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for sub in frontier:
            for e in range(n):
                if e in sub:
                    continue
                bigger = span(list(sub) + [e])
                if len(bigger) < n and bigger not in found:
                    found.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def oracle_special_scan(x: GeneratedGroup, sigma: int = 0) -> List[OracleCandidate]:
    """
    穷举 T_σ 中商为初等交换群的正规子群 R，逐一判定特殊对

    与表格谓词无关，用于交叉验证。

    Raises:
        GroupTooLarge: 某个 T_σ/K_p 的阶超过枚举上限
    """
    socle = socle_of_almost_simple(x)
    m_sigma = socle.stabilizer(sigma)
    derived = derived_subgroup(m_sigma)
    abelian_order = m_sigma.order() // derived.order()
    candidates = []
    for p in (prime_factors(abelian_order) if abelian_order > 1 else []):
        powers = [g ** p for g in m_sigma.generators]
        k_p = normal_closure(m_sigma, derived.generators + powers)
        quotient = CosetQuotient(m_sigma, k_p, cap=MAX_SCAN_ORDER)
        for sub in _subgroups_of_elementary_abelian(quotient):
            extra = [Permutation(quotient.reps[i]) for i in sorted(sub) if i]
            r_sub = GeneratedGroup(k_p.generators + extra, x.degree)
            verdict = is_special_pair(x, r_sub, sigma)
            candidates.append(OracleCandidate(r_sub, p, m_sigma.order() // r_sub.order(), verdict))
    logger.info("神谕扫描: %d 个候选，%d 个特殊",
                len(candidates), sum(c.verdict.holds for c in candidates))
    return candidates


def special_r_values(candidates: List[OracleCandidate]) -> List[int]:
    """成立的特殊对对应的 r（去重升序）"""
    return sorted({c.r for c in candidates if c.verdict.holds})


def special_classes(candidates: List[OracleCandidate]) -> Dict[int, int]:
    """每个 r 下互不相同的特殊 R 的个数

    特殊 R 在 X_σ 下不变，因此各自构成一个 X_σ-共轭类。
    """
    classes: Dict[int, List[GeneratedGroup]] = {}
    for cand in candidates:
        if not cand.verdict.holds:
            continue
        reps = classes.setdefault(cand.r, [])
        if not any(cand.subgroup.same_as(rep) for rep in reps):
            reps.append(cand.subgroup)
    return {r: len(reps) for r, reps in classes.items()}
