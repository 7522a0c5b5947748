"""
目录条目的构造配方

配方是 YAML 中的字典：plinth.kind 决定走哪条构造路线。

- scaled_projective / scaled_isotropic：伸缩构造，直接给出 M、C、N
- coset：基域上的群 M 与子群 R，M 在 R 的陪集上作用，N 由提升的自同构生成
- line7：PΓL(2,8) 的 56 点作用
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

from ..actions.lifting import AutLiftSpec, assemble_normalizer, plinth_overgroups
from ..actions.projective import projective_action, scaled_projective_action
from ..actions.ree import ree3_line7_action
from ..actions.symplectic import quadratic_form_action
from ..actions.unitary import scaled_isotropic_action
from ..algebra.classical import frobenius_action, gl_extra, sl_generators
from ..algebra.field import make_field
from ..config import get_settings
from ..errors import ParseError
from ..perm.chain import StabilizerChain
from ..perm.cosets import centralizer_in_symmetric, coset_action, element_of_order, normalizer_small
from ..perm.group import GeneratedGroup, derived_subgroup
from ..perm.permutation import Permutation, parse_permutation
from .ingest import ingest_generators

logger = logging.getLogger(__name__)

GROUP_MODES = ("all", "centralizer_product", "normalizer")


# ==================== 基域 ====================

@dataclass
class BaseAction:
    """基域上的 M 及可用于提升的额外置换（正规化 M）"""
    name: str
    plinth: GeneratedGroup
    extras: Dict[str, Permutation] = field(default_factory=dict)


def _cycle(points: List[int], degree: int) -> Permutation:
    return Permutation.from_cycles([points], degree)


def alternating_base(n: int) -> BaseAction:
    """A_n 在 n 个点上；额外置换 transposition = (0 1)"""
    if n < 3:
        raise ParseError(f"交错群次数过小: {n}")
    long_cycle = list(range(n)) if n % 2 else list(range(1, n))
    gens = [_cycle([0, 1, 2], n), _cycle(long_cycle, n)]
    return BaseAction(
        name=f"A{n}",
        plinth=GeneratedGroup(gens, n, name=f"A{n}"),
        extras={"transposition": _cycle([0, 1], n)},
    )


_MATRIX_EXTRAS = {
    "diagonal": lambda f, d: gl_extra(d, f),
    "frobenius": lambda f, d: frobenius_action(f, d),
}


def projective_base(d: int, q0: int, a: int = 1, extras: Optional[List[str]] = None) -> BaseAction:
    """PSL(d,q) 在射影点上；extras 取 diagonal / frobenius"""
    f = make_field(q0, a)
    sl = sl_generators(d, f)
    names = list(extras or [])
    unknown = [n for n in names if n not in _MATRIX_EXTRAS]
    if unknown:
        raise ParseError(f"未知的额外生成元: {unknown}")
    extra = [_MATRIX_EXTRAS[n](f, d) for n in names]
    action = projective_action(sl + extra, f, name=f"PSL({d},{f.q})")
    plinth = GeneratedGroup(action.generators[: len(sl)], action.degree, name=f"PSL({d},{f.q})")
    return BaseAction(
        name=action.name,
        plinth=plinth,
        extras=dict(zip(names, action.generators[len(sl):])),
    )


def build_base(spec: Dict[str, Any]) -> BaseAction:
    kind = spec.get("kind")
    if kind == "alternating":
        return alternating_base(int(spec["n"]))
    if kind == "projective":
        return projective_base(int(spec["d"]), int(spec["q0"]), int(spec.get("a", 1)),
                               spec.get("extras"))
    if kind == "quadratic_forms":
        action = quadratic_form_action(int(spec["d"]))[spec["epsilon"]]
        return BaseAction(action.name, action.group)
    if kind == "data":
        group = ingest_generators(spec["file"], spec.get("order"), name=spec.get("name"))
        return BaseAction(group.name or spec["file"], group)
    raise ParseError(f"未知的基域配方: {kind!r}", {"base": spec})


# ==================== 子群 R ====================

def set_stabilizer(group: GeneratedGroup, points: List[int]) -> GeneratedGroup:
    """
    集合稳定子

    把 k-子集作为新点并入作用域，取该点的稳定子后限制回原来的点。
    """
    n = group.degree
    subsets = list(combinations(range(n), len(points)))
    index = {s: n + i for i, s in enumerate(subsets)}
    gens = [
        g + tuple(index[tuple(sorted(g[p] for p in s))] for s in subsets)
        for g in group.raw_generators
    ]
    target = index[tuple(sorted(points))]
    chain = StabilizerChain.build(n + len(subsets), gens, [target])
    return GeneratedGroup([g[:n] for g in chain.level_generators(1)], n)


def _derived(group: GeneratedGroup, depth: int) -> GeneratedGroup:
    for _ in range(depth):
        group = derived_subgroup(group)
    return group


def build_subgroup(m: GeneratedGroup, spec: Dict[str, Any]) -> GeneratedGroup:
    kind = spec.get("kind")
    depth = int(spec.get("derived", 0))
    if kind == "stabilizer":
        sub = m.stabilizer(int(spec.get("point", 0)))
    elif kind == "set_stabilizer":
        sub = set_stabilizer(m, [int(p) for p in spec["points"]])
    elif kind == "element_of_order":
        sub = GeneratedGroup([element_of_order(m, int(spec["order"]))], m.degree)
    elif kind == "generated":
        sub = GeneratedGroup([parse_permutation(c, m.degree) for c in spec["cycles"]], m.degree)
    else:
        raise ParseError(f"未知的子群配方: {kind!r}", {"subgroup": spec})
    return _derived(sub, depth)


# ==================== 基座作用 ====================

@dataclass
class PlinthSetup:
    """
    一个基座作用 M^Ω 及其 C = C_Sym(Ω)(M)、N

    Attributes:
        base: coset 路线下基域上的 M
        r_subgroup: coset 路线下的 R
        skipped_lifts: 无法提升的自同构
    """
    name: str
    plinth: GeneratedGroup
    centralizer: GeneratedGroup
    normalizer: GeneratedGroup
    base: Optional[BaseAction] = None
    r_subgroup: Optional[GeneratedGroup] = None
    skipped_lifts: List[str] = field(default_factory=list)

    @cached_property
    def centralizer_product(self) -> GeneratedGroup:
        return GeneratedGroup(
            self.centralizer.generators + self.plinth.generators, self.plinth.degree,
            name=f"{self.name}:CxM",
        )

    def meet(self, group: GeneratedGroup) -> int:
        """|G ∩ C|"""
        return sum(1 for c in self.centralizer.elements() if group.contains(c))

    def groups(self, mode: str = "all") -> List[Tuple[GeneratedGroup, int]]:
        """按 mode 给出 (G, |G ∩ C|)"""
        if mode == "all":
            return plinth_overgroups(self.normalizer, self.plinth, self.centralizer)
        if mode == "centralizer_product":
            return [(self.centralizer_product, self.centralizer.order())]
        if mode == "normalizer":
            return [(self.normalizer, self.meet(self.normalizer))]
        raise ParseError(f"未知的群选择方式: {mode!r}", {"modes": list(GROUP_MODES)})

    def expected_centralizer_order(self) -> Optional[int]:
        """
        |N_M(R) : R|，只在 M 可枚举时计算

        没有基域（伸缩构造）时取 M^Ω 本身和点稳定子 R = M_0。
        """
        if self.base is not None and self.r_subgroup is not None:
            m, r = self.base.plinth, self.r_subgroup
        else:
            m, r = self.plinth, self.plinth.stabilizer(0)
        if m.order() > get_settings().small_group_cap:
            return None
        return normalizer_small(m, r).order() // r.order()


def _scaled_setup(construction) -> PlinthSetup:
    plinth = construction.plinth
    return PlinthSetup(
        name=construction.name,
        plinth=plinth,
        centralizer=centralizer_in_symmetric(plinth),
        normalizer=construction.normalizer,
    )


def _coset_setup(spec: Dict[str, Any], lifts: List[str]) -> PlinthSetup:
    base = build_base(spec["base"])
    r = build_subgroup(base.plinth, spec["subgroup"])
    missing = [name for name in lifts if name not in base.extras]
    if missing:
        raise ParseError(f"基域 {base.name} 没有可提升的 {missing}")
    action = coset_action(base.plinth, r, name=f"{base.name} on R-cosets")
    specs = [AutLiftSpec(name, base.extras[name]) for name in lifts]
    assembly = assemble_normalizer(action, r, specs)
    return PlinthSetup(
        name=action.name,
        plinth=assembly.plinth,
        centralizer=assembly.centralizer,
        normalizer=assembly.normalizer,
        base=base,
        r_subgroup=r,
        skipped_lifts=assembly.skipped,
    )


def build_plinth(spec: Dict[str, Any], lifts: Optional[List[str]] = None) -> PlinthSetup:
    """
    按配方构造基座作用

    Raises:
        ParseError: 配方字段无法识别
        DataFileMissing: 数据文件缺失
        OrderMismatch: 数据文件生成的群阶不符
    """
    kind = spec.get("kind")
    if kind == "scaled_projective":
        f = make_field(int(spec["q0"]), int(spec.get("a", 1)))
        setup = _scaled_setup(scaled_projective_action(int(spec["d"]), f, int(spec["r"])))
    elif kind == "scaled_isotropic":
        f = make_field(int(spec["q0"]), int(spec.get("a", 2)))
        setup = _scaled_setup(scaled_isotropic_action(f, int(spec["r"])))
    elif kind == "coset":
        setup = _coset_setup(spec, list(lifts or []))
    elif kind == "line7":
        line7 = ree3_line7_action()
        plinth = line7.omega.group
        setup = PlinthSetup(
            name="line7",
            plinth=plinth,
            centralizer=centralizer_in_symmetric(plinth),
            normalizer=line7.normalizer,
            base=BaseAction("PSL(2,8)", line7.plinth_base),
            r_subgroup=line7.r,
        )
    else:
        raise ParseError(f"未知的基座配方: {kind!r}", {"plinth": spec})
    logger.info("基座 %s: 次数 %d, |M| = %d, |C| = %d", setup.name, setup.plinth.degree,
                setup.plinth.order(), setup.centralizer.order())
    return setup
