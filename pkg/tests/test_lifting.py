"""
自同构提升、正规化子组装与中间子群测试
"""
import pytest

from pitkit.actions.lifting import (
    AutLiftSpec,
    assemble_normalizer,
    intermediate_subgroups,
    lift_automorphism,
    overgroup_classes,
    plinth_overgroups,
)
from pitkit.actions.projective import scaled_projective_action
from pitkit.algebra.field import make_field
from pitkit.errors import IndexTooLarge, NotLiftable
from pitkit.perm.cosets import coset_action
from pitkit.perm.group import GeneratedGroup, derived_subgroup
from pitkit.perm.permutation import Permutation


def _c(points, degree):
    return Permutation.from_cycles([points], degree)


@pytest.fixture
def a5_on_15(alt5):
    """A5 在 V4 的陪集上（次数 15）"""
    r = derived_subgroup(alt5.stabilizer(0))
    return coset_action(alt5, r), r


@pytest.fixture
def klein4():
    return GeneratedGroup([Permutation([1, 0, 3, 2]), Permutation([2, 3, 0, 1])], 4)


# ==================== 提升测试 ====================

class TestLiftAutomorphism:
    def test_transposition_lifts(self, a5_on_15):
        """测试对换诱导的自同构可提升且正规化 M"""
        action, r = a5_on_15
        assert action.degree == 15
        pi = lift_automorphism(action, r, AutLiftSpec("transposition", _c([0, 1], 5)))
        plinth = action.group
        for m in plinth.generators:
            assert plinth.contains(m.conjugate(pi))
        assert not plinth.contains(pi)

    def test_inner_automorphism_lifts(self, a5_on_15):
        """测试内自同构的提升落在 C·M 中"""
        action, r = a5_on_15
        pi = lift_automorphism(action, r, AutLiftSpec("inner", _c([0, 1, 2], 5)))
        assembly = assemble_normalizer(action, r, [])
        assert GeneratedGroup(assembly.normalizer.generators, 15).contains(pi)

    def test_conjugacy_class_moved(self, klein4):
        """测试 f(R) 与 R 不共轭时不可提升"""
        r = GeneratedGroup([Permutation([1, 0, 3, 2])], 4)
        action = coset_action(klein4, r)
        with pytest.raises(NotLiftable):
            lift_automorphism(action, r, AutLiftSpec("swap", _c([1, 2], 4)))


class TestAssembleNormalizer:
    def test_a5_on_15(self, a5_on_15):
        """测试 N = ⟨C, M, π⟩ 的阶为 360，|C| = 3"""
        action, r = a5_on_15
        assembly = assemble_normalizer(action, r, [AutLiftSpec("transposition", _c([0, 1], 5))])
        assert assembly.centralizer.order() == 3
        assert assembly.plinth.order() == 60
        assert set(assembly.lifts) == {"transposition"}
        assert assembly.skipped == []
        assert assembly.normalizer.order() == 360

    def test_unliftable_automorphism_skipped(self, klein4):
        """测试不可提升的自同构被跳过"""
        r = GeneratedGroup([Permutation([1, 0, 3, 2])], 4)
        action = coset_action(klein4, r)
        assembly = assemble_normalizer(action, r, [AutLiftSpec("swap", _c([1, 2], 4))])
        assert assembly.skipped == ["swap"]
        assert assembly.lifts == {}
        assert assembly.normalizer.order() == 2


# ==================== 中间子群测试 ====================

class TestIntermediateSubgroups:
    def test_between_v4_and_s4(self, sym4):
        """测试 V4 ≤ K ≤ S4 的六个子群"""
        v4 = GeneratedGroup([Permutation([1, 0, 3, 2]), Permutation([2, 3, 0, 1])], 4)
        subgroups = intermediate_subgroups(sym4, v4)
        assert [k.order() for k in subgroups] == [4, 8, 8, 8, 12, 24]
        assert all(v4.is_subgroup_of(k) for k in subgroups)

    def test_conjugacy_classes_of_overgroups(self, sym4):
        """测试三个 D8 在 S4 中共轭"""
        v4 = GeneratedGroup([Permutation([1, 0, 3, 2]), Permutation([2, 3, 0, 1])], 4)
        classes = overgroup_classes(sym4, intermediate_subgroups(sym4, v4))
        assert [k.order() for k in classes] == [4, 8, 12, 24]

    def test_index_one(self, sym4):
        """测试 |n:h| = 1"""
        subgroups = intermediate_subgroups(sym4, sym4)
        assert len(subgroups) == 1
        assert subgroups[0].same_as(sym4)

    def test_index_too_large(self, sym4):
        """测试指数超过上限"""
        with pytest.raises(IndexTooLarge):
            intermediate_subgroups(sym4, GeneratedGroup.trivial(4), cap=10)

    def test_plinth_overgroups_meeting_centralizer(self):
        """测试 M ≤ G ≤ N 且 G ∩ C ≠ 1：C×M 与 N"""
        c = scaled_projective_action(2, make_field(5), 2)
        found = plinth_overgroups(c.normalizer, c.plinth, c.centralizer)
        assert sorted((g.order(), meet) for g, meet in found) == [(120, 2), (240, 2)]
