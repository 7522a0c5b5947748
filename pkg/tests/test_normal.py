"""
正规子群、共轭类与单群判定测试
"""
import pytest

from pitkit.actions.projective import projective_action
from pitkit.algebra.classical import sl_generators
from pitkit.algebra.field import make_field
from pitkit.errors import IndexOverflow
from pitkit.perm.group import GeneratedGroup
from pitkit.perm.normal import (
    centralizer_of_normal,
    conjugacy_classes,
    is_simple,
    minimal_normal_subgroups,
    normal_subgroups_up_to_index,
    prime_factors,
    sample_elements,
)
from pitkit.perm.permutation import Permutation


def _c(points, degree):
    return Permutation.from_cycles([points], degree)


def _a6_squared():
    """A6 × A6 作用在 12 个点上（两个不传递因子）"""
    left = GeneratedGroup([_c([0, 1, 2], 12), _c([1, 2, 3, 4, 5], 12)], 12)
    right = GeneratedGroup([_c([6, 7, 8], 12), _c([7, 8, 9, 10, 11], 12)], 12)
    product = GeneratedGroup(list(left.raw_generators) + list(right.raw_generators), 12)
    return product, left, right


# ==================== 算术测试 ====================

class TestPrimeFactors:
    @pytest.mark.parametrize("n,expected", [
        (1, []),
        (2, [2]),
        (360, [2, 3, 5]),
        (97, [97]),
        (1024, [2]),
    ])
    def test_prime_factors(self, n, expected):
        """测试素因子（去重升序）"""
        assert prime_factors(n) == expected


# ==================== 共轭类测试 ====================

class TestConjugacyClasses:
    def test_s4_classes(self, sym4):
        """测试 S4 的五个共轭类"""
        classes = conjugacy_classes(sym4)
        assert sorted(len(c) for c in classes) == [1, 3, 6, 6, 8]
        assert classes[0] == [Permutation.identity(4)]

    def test_a5_classes(self, alt5):
        """测试 A5 的类长 1, 12, 12, 15, 20"""
        assert sorted(len(c) for c in conjugacy_classes(alt5)) == [1, 12, 12, 15, 20]


# ==================== 正规子群测试 ====================

class TestNormalSubgroups:
    def test_normal_subgroups_of_s4(self, sym4):
        """测试 S4 的正规子群按阶降序"""
        orders = [n.order() for n in normal_subgroups_up_to_index(sym4, 24)]
        assert orders == [24, 12, 4, 1]

    def test_index_bound(self, sym4):
        """测试指数上限过滤"""
        orders = [n.order() for n in normal_subgroups_up_to_index(sym4, 2)]
        assert orders == [24, 12]

    def test_minimal_normal_subgroup_of_s4(self, sym4):
        """测试 S4 的唯一极小正规子群是 V4"""
        minimal = minimal_normal_subgroups(sym4)
        assert [m.order() for m in minimal] == [4]
        assert minimal[0].is_transitive()

    def test_minimal_normal_of_simple_group(self, alt5):
        """测试单群的极小正规子群是自身"""
        minimal = minimal_normal_subgroups(alt5)
        assert len(minimal) == 1
        assert minimal[0].same_as(alt5)

    def test_trivial_group_has_none(self):
        """测试平凡群"""
        assert minimal_normal_subgroups(GeneratedGroup.trivial(3)) == []

    def test_large_group_path(self, alt5, monkeypatch):
        """测试超过小群上限时的大群路径"""
        from pitkit.config import reset_settings

        monkeypatch.setenv("PITKIT_SMALL_GROUP_CAP", "30")
        reset_settings()
        minimal = minimal_normal_subgroups(alt5)
        assert [m.order() for m in minimal] == [60]

    def test_large_group_with_two_socle_factors(self):
        """测试大群路径找出基座的两个不传递因子"""
        product, left, right = _a6_squared()
        assert product.order() == 129600
        minimal = minimal_normal_subgroups(product)
        assert [m.order() for m in minimal] == [360, 360]
        assert not any(m.is_transitive() for m in minimal)
        assert any(m.same_as(left) for m in minimal)
        assert any(m.same_as(right) for m in minimal)

    def test_d10_index_two(self):
        """测试 D10 中指数不超过 2 的正规子群是 D10 与 C5"""
        d10 = GeneratedGroup([_c([0, 1, 2, 3, 4], 5),
                              Permutation.from_cycles([[1, 4], [2, 3]], 5)], 5)
        orders = [n.order() for n in normal_subgroups_up_to_index(d10, 2)]
        assert orders == [10, 5]

    def test_point_stabilizer_of_psl2_25(self):
        """测试 PSL(2,25) 点稳定子 C5²⋊C12 的指数 2、3 正规子群"""
        f = make_field(5, 2)
        m = projective_action(sl_generators(2, f), f).group
        assert m.order() == 7800
        h = m.stabilizer(0)
        assert h.order() == 300
        normals = normal_subgroups_up_to_index(h, 3)
        assert [n.order() for n in normals] == [300, 150, 100]
        # 素数指数，商循环；某个生成元的 index 次幂落回子群
        for n, index in ((normals[1], 2), (normals[2], 3)):
            outside = [g for g in h.generators if not n.contains(g)]
            assert outside
            assert n.contains(outside[0] ** index)


# ==================== 中心化子测试 ====================

class TestCentralizerOfNormal:
    def test_factor_centralizes_the_other(self):
        """测试不传递因子的中心化子是另一个因子"""
        product, left, right = _a6_squared()
        assert centralizer_of_normal(product, left).same_as(right)
        assert centralizer_of_normal(product, right).same_as(left)

    def test_trivial_and_transitive(self, sym4):
        """测试平凡子群与传递子群"""
        v4 = GeneratedGroup([Permutation.from_cycles([[0, 1], [2, 3]], 4),
                             Permutation.from_cycles([[0, 2], [1, 3]], 4)], 4)
        assert centralizer_of_normal(sym4, GeneratedGroup.trivial(4)).same_as(sym4)
        assert centralizer_of_normal(sym4, v4).same_as(v4)

    def test_conjugate_cap(self, monkeypatch):
        """测试共轭个数超过上限"""
        from pitkit.config import reset_settings

        monkeypatch.setenv("PITKIT_COSET_CAP", "10")
        reset_settings()
        product, left, _ = _a6_squared()
        with pytest.raises(IndexOverflow):
            centralizer_of_normal(product, left)


# ==================== 单群判定测试 ====================

class TestSimplicity:
    def test_a5_is_simple(self, alt5):
        """测试 A5 是单群"""
        assert is_simple(alt5)

    def test_prime_cyclic_is_simple(self):
        """测试素数阶循环群是单群"""
        assert is_simple(GeneratedGroup([_c([0, 1, 2, 3, 4], 5)], 5))

    def test_non_simple_groups(self, sym4):
        """测试 S4、A4 与平凡群不是单群"""
        a4 = GeneratedGroup([_c([0, 1, 2], 4), _c([1, 2, 3], 4)], 4)
        assert not is_simple(sym4)
        assert not is_simple(a4)
        assert not is_simple(GeneratedGroup.trivial(4))

    def test_sampled_simplicity_above_cap(self, alt5, monkeypatch):
        """测试超过上限时的抽样判定"""
        from pitkit.config import reset_settings

        monkeypatch.setenv("PITKIT_SMALL_GROUP_CAP", "30")
        reset_settings()
        assert is_simple(alt5)

    def test_large_simple_group(self):
        """测试超过上限的 A8 是单群"""
        a8 = GeneratedGroup([_c([0, 1, 2], 8), _c([1, 2, 3, 4, 5, 6, 7], 8)], 8)
        assert a8.order() == 20160
        assert is_simple(a8)

    def test_large_perfect_product_not_simple(self):
        """测试完美但基座有两个因子的大群不是单群"""
        product, _, _ = _a6_squared()
        assert not is_simple(product)

    def test_sample_is_deterministic(self, alt5):
        """测试元素样本确定且不含恒等"""
        first = sample_elements(alt5, limit=10)
        assert first == sample_elements(alt5, limit=10)
        assert all(not g.is_identity() for g in first)
        assert len(first) <= 10
