"""
正规子群

小群（阶不超过 PITKIT_SMALL_GROUP_CAP）用共轭类精确计算；
大群逐个下降出极小正规子群，每一轮在已找到部分的中心化子里继续，
直到积的中心化子落在积内。
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Optional

from ..config import get_settings
from ..errors import IndexOverflow
from .cosets import centralizer_in_symmetric
from .group import (
    GeneratedGroup,
    intersection_with,
    kernel_of_action,
    normal_closure,
    perfect_residual,
    reduce_generators,
)
from .permutation import Images, Permutation, inverse_images, mul_images

logger = logging.getLogger(__name__)


def _smallest_prime(n: int) -> int:
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def prime_factors(n: int) -> List[int]:
    result = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            result.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        result.append(n)
    return result


def prime_order_power(g: Permutation) -> Permutation:
    """g 的某个素数阶幂（g 非平凡）"""
    order = g.order()
    return g ** (order // _smallest_prime(order))


def conjugacy_classes(group: GeneratedGroup, cap: Optional[int] = None) -> List[List[Permutation]]:
    """共轭类（按元素枚举顺序的首个元素排列）"""
    elements = list(group.elements(cap))
    gens = group.raw_generators
    inverses = [inverse_images(g) for g in gens]
    assigned = set()
    classes = []
    for x in elements:
        if x.images in assigned:
            continue
        assigned.add(x.images)
        cls = [x.images]
        k = 0
        while k < len(cls):
            y = cls[k]
            for g, gi in zip(gens, inverses):
                z = mul_images(mul_images(gi, y), g)
                if z not in assigned:
                    assigned.add(z)
                    cls.append(z)
            k += 1
        classes.append([Permutation(c) for c in cls])
    return classes


def _class_key(sub: GeneratedGroup, reps: List[Permutation]) -> frozenset:
    return frozenset(i for i, r in enumerate(reps) if sub.contains(r))


def normal_subgroups_up_to_index(group: GeneratedGroup, max_index: int) -> List[GeneratedGroup]:
    """
    指数不超过 max_index 的全部正规子群（按阶降序）

    每个正规子群是若干共轭类的并，也是类闭包的积。
    """
    classes = conjugacy_classes(group)
    reps = [c[0] for c in classes]
    degree = group.degree
    found: Dict[frozenset, GeneratedGroup] = {}

    trivial = GeneratedGroup.trivial(degree)
    found[_class_key(trivial, reps)] = trivial
    atoms = []
    for rep in reps[1:]:
        closure = normal_closure(group, [rep])
        key = _class_key(closure, reps)
        if key not in found:
            found[key] = closure
            atoms.append(closure)

    frontier = list(found.values())
    while frontier:
        nxt = []
        for sub in frontier:
            for atom in atoms:
                if atom.is_subgroup_of(sub):
                    continue
                join = GeneratedGroup(list(sub.raw_generators) + list(atom.raw_generators), degree)
                key = _class_key(join, reps)
                if key not in found:
                    found[key] = join
                    nxt.append(join)
        frontier = nxt

    order = group.order()
    result = [n for n in found.values() if order // n.order() <= max_index]
    return sorted(result, key=lambda n: -n.order())


def _minimal_among(candidates: List[GeneratedGroup]) -> List[GeneratedGroup]:
    unique: List[GeneratedGroup] = []
    for c in sorted(candidates, key=lambda n: n.order()):
        if not any(u.same_as(c) for u in unique):
            unique.append(c)
    return [
        c for c in unique
        if not any(o is not c and o.order() < c.order() and o.is_subgroup_of(c) for o in unique)
    ]


def sample_elements(group: GeneratedGroup, limit: int = 64) -> List[Permutation]:
    """确定性的元素样本：生成元、强生成元、陪集代表与相邻乘积"""
    pool = list(group.raw_generators) + group.chain.strong_generators()
    for level in group.chain.levels:
        pool.extend(level.transversal[b] for b in level.orbit[1:4])
    products = [mul_images(a, b) for a, b in zip(pool, pool[1:])]
    seen = set()
    result = []
    identity = group.chain.identity
    for g in pool + products:
        if g != identity and g not in seen:
            seen.add(g)
            result.append(Permutation(g))
        if len(result) >= limit:
            break
    return result


def _shrink(group: GeneratedGroup, inside: GeneratedGroup,
            avoid: Optional[GeneratedGroup] = None) -> GeneratedGroup:
    """沿样本元素的正规闭包下降；avoid 给出时不进入 avoid 内部"""
    current = inside
    changed = True
    while changed:
        changed = False
        for x in sample_elements(current):
            y = prime_order_power(x)
            if avoid is not None and avoid.contains(y):
                continue
            closure = normal_closure(group, [y])
            if closure.order() < current.order():
                current = closure
                changed = True
                break
    return current


def centralizer_of_normal(group: GeneratedGroup, sub: GeneratedGroup) -> GeneratedGroup:
    """
    C_G(N)，N 为 G 的正规子群（不要求传递）

    G 共轭作用在 N 的生成元的共轭上，C_G(N) 是这个作用的核。

    Raises:
        IndexOverflow: 共轭个数超过 PITKIT_COSET_CAP
    """
    if sub.order() == 1:
        return group
    if sub.is_transitive():
        return intersection_with(group, centralizer_in_symmetric(sub))
    cap = get_settings().coset_cap
    gens = group.raw_generators
    inverses = [inverse_images(g) for g in gens]
    index: Dict[Images, int] = {}
    domain: List[Images] = []
    for h in sub.raw_generators:
        if h in index:
            continue
        index[h] = len(domain)
        domain.append(h)
        k = len(domain) - 1
        while k < len(domain):
            x = domain[k]
            for g, gi in zip(gens, inverses):
                y = mul_images(mul_images(gi, x), g)
                if y not in index:
                    if len(domain) >= cap:
                        raise IndexOverflow(f"共轭个数超过上限 {cap}", {"cap": cap})
                    index[y] = len(domain)
                    domain.append(y)
            k += 1
    images = [
        Permutation(index[mul_images(mul_images(gi, x), g)] for x in domain)
        for g, gi in zip(gens, inverses)
    ]
    return kernel_of_action(group, images)


def _socle_factors(group: GeneratedGroup) -> List[GeneratedGroup]:
    """
    逐个找极小正规子群，直到它们的积的中心化子落在积内

    每一轮从 C_G(已找到的积) 的完美剩余（平凡时取其本身）中
    取不在积内的样本元素，对其正规闭包下降。
    """
    degree = group.degree
    factors: List[GeneratedGroup] = []
    built = GeneratedGroup.trivial(degree)
    while True:
        source = centralizer_of_normal(group, built)
        residual = perfect_residual(source)
        if residual.order() > 1 and not residual.is_subgroup_of(built):
            source = residual
        seed = next(
            (prime_order_power(x) for x in sample_elements(source)
             if not built.contains(prime_order_power(x))),
            None,
        )
        if seed is None:
            break
        factor = _shrink(group, normal_closure(group, [seed]), avoid=built)
        factors.append(factor)
        built = GeneratedGroup(list(built.raw_generators) + list(factor.raw_generators), degree)
        logger.debug("找到极小正规子群 |N| = %d，积的阶 %d", factor.order(), built.order())
    return factors


def minimal_normal_subgroups(group: GeneratedGroup) -> List[GeneratedGroup]:
    """
    极小正规子群

    小群精确；大群返回一组积为基座的极小正规子群，
    外加每个传递因子的中心化子中的全部极小正规子群。
    大群路径靠样本元素下降，属于启发式。
    """
    if group.order() == 1:
        return []
    if group.order() <= get_settings().small_group_cap:
        candidates = [
            normal_closure(group, [cls[0]])
            for cls in conjugacy_classes(group)[1:]
            if _is_prime(cls[0].order())
        ]
        return _minimal_among(candidates)

    logger.info("群阶 %d 超过小群上限，走大群路径", group.order())
    candidates = _socle_factors(group)
    for k in list(candidates):
        if not k.is_transitive():
            continue
        centralizer = intersection_with(group, centralizer_in_symmetric(k))
        for c in centralizer.elements():
            if not c.is_identity():
                candidates.append(normal_closure(group, [prime_order_power(c)]))
    return _minimal_among(candidates)


def _is_prime(n: int) -> bool:
    return n > 1 and _smallest_prime(n) == n


def is_simple(group: GeneratedGroup) -> bool:
    """
    单群判定

    小群精确。大群要求完美且基座就是全群；基座由样本元素下降得到，
    所以大群的肯定结论是启发式的（否定结论总是有见证的真子群）。
    """
    order = group.order()
    if order == 1:
        return False
    if order <= get_settings().small_group_cap:
        for cls in conjugacy_classes(group)[1:]:
            if normal_closure(group, [cls[0]]).order() != order:
                return False
        return True
    if perfect_residual(group).order() != order:
        return False
    factors = _socle_factors(group)
    return len(factors) == 1 and factors[0].order() == order
