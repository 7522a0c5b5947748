"""
陪集作用、中心化子与小群正规化子测试
"""
import pytest

from pitkit.actions.projective import projective_action
from pitkit.algebra.classical import sl_generators
from pitkit.algebra.field import make_field
from pitkit.errors import IndexOverflow, NotSubgroup, NotTransitive, WitnessNotNormalizing
from pitkit.perm.cosets import (
    CosetTable,
    centralizer_in,
    centralizer_in_symmetric,
    centralizer_of_transitive,
    coset_action,
    element_of_order,
    normalizer_small,
    normalizer_witness,
)
from pitkit.perm.group import GeneratedGroup, derived_subgroup
from pitkit.perm.permutation import Permutation


def _c(points, degree):
    return Permutation.from_cycles([points], degree)


@pytest.fixture
def alt4():
    return GeneratedGroup([_c([0, 1, 2], 4), _c([1, 2, 3], 4)], 4, name="A4")


@pytest.fixture
def regular_s3():
    """S3 的右正则表示（次数 6）"""
    s3 = GeneratedGroup([_c([0, 1], 3), _c([0, 1, 2], 3)], 3)
    return coset_action(s3, GeneratedGroup.trivial(3)).group


# ==================== 陪集作用测试 ====================

class TestCosetAction:
    def test_action_on_point_stabilizer_cosets(self, sym4):
        """测试 S4 在点稳定子陪集上的作用"""
        action = coset_action(sym4, sym4.stabilizer(0))
        assert action.degree == 4
        assert action.group.order() == 24
        assert action.labels[0] == "e"

    def test_faithful_action_on_small_subgroup(self, alt5):
        """测试 A5 在 C3 陪集上的作用（次数 20）"""
        action = coset_action(alt5, GeneratedGroup([_c([0, 1, 2], 5)], 5))
        assert action.degree == 20
        assert action.group.order() == 60
        assert action.group.is_transitive()

    def test_homomorphism_matches_generators(self, sym4):
        """测试同态把生成元送到生成元的像"""
        action = coset_action(sym4, sym4.stabilizer(0))
        for source, image in zip(action.source_generators, action.generators):
            assert action.image(source) == image

    def test_homomorphism_respects_products(self, sym4):
        """测试同态保持乘法"""
        action = coset_action(sym4, sym4.stabilizer(1))
        a, b = sym4.generators
        assert action.image(a * b) == action.image(a) * action.image(b)

    def test_not_a_subgroup(self, alt4):
        """测试 R 不是 M 的子群"""
        with pytest.raises(NotSubgroup):
            CosetTable(alt4, GeneratedGroup([_c([0, 1], 4)], 4))

    def test_index_cap(self, sym4):
        """测试陪集数上限"""
        with pytest.raises(IndexOverflow):
            CosetTable(sym4, sym4.stabilizer(0), cap=3)

    def test_coset_cap_from_environment(self, sym4, monkeypatch):
        """测试 PITKIT_COSET_CAP 控制默认上限"""
        from pitkit.config import reset_settings

        monkeypatch.setenv("PITKIT_COSET_CAP", "3")
        reset_settings()
        with pytest.raises(IndexOverflow):
            coset_action(sym4, sym4.stabilizer(0))


# ==================== 中心化子测试 ====================

class TestCentralizer:
    def test_regular_cyclic_group_centralizes_itself(self):
        """测试正则循环群的中心化子是它自己"""
        c5 = GeneratedGroup([_c([0, 1, 2, 3, 4], 5)], 5)
        centralizer = centralizer_in_symmetric(c5)
        assert centralizer.same_as(c5)

    def test_primitive_group_has_trivial_centralizer(self, sym4):
        """测试 S4 在 Sym(4) 中的中心化子平凡"""
        assert centralizer_in_symmetric(sym4).order() == 1

    def test_regular_nonabelian_centralizer(self, regular_s3):
        """测试正则 S3 的中心化子同阶、非交换且与之交换"""
        centralizer = centralizer_in_symmetric(regular_s3)
        assert centralizer.order() == 6
        assert not centralizer.is_abelian()
        for c in centralizer.generators:
            for m in regular_s3.generators:
                assert c * m == m * c

    def test_centralizer_inside_subgroup(self, regular_s3):
        """测试 C_G(M) = C_Sym(M) ∩ G"""
        assert centralizer_in(regular_s3, regular_s3).order() == 1

    def test_witness_must_normalize(self, sym4):
        """测试见证元必须正规化点稳定子"""
        with pytest.raises(WitnessNotNormalizing):
            centralizer_of_transitive(sym4, [_c([0, 1], 4)])

    def test_intransitive_group_rejected(self):
        """测试不传递群"""
        with pytest.raises(NotTransitive):
            centralizer_in_symmetric(GeneratedGroup([_c([0, 1], 3)], 3))

    def test_psl32_on_v4_cosets(self):
        """测试 PSL(3,2) 在 S4 内 V4 的 42 个陪集上：C 阶 6 且非交换"""
        m = projective_action(sl_generators(3, make_field(2)), make_field(2)).group
        s4 = m.stabilizer(0)
        assert (m.order(), s4.order()) == (168, 24)
        v4 = derived_subgroup(derived_subgroup(s4))
        assert v4.order() == 4
        action = coset_action(m, v4).group
        assert action.degree == 42
        centralizer = centralizer_of_transitive(action, normalizer_witness(action))
        assert centralizer.order() == 6
        assert not centralizer.is_abelian()
        assert all(c * g == g * c for c in centralizer.generators for g in action.generators)
        assert all(centralizer.stabilizer(p).order() == 1 for p in range(42))


# ==================== 正规化子测试 ====================

class TestSmallGroupHelpers:
    def test_normalizer_of_four_cycle(self, sym4):
        """测试 ⟨(0 1 2 3)⟩ 在 S4 中的正规化子为 D8"""
        normalizer = normalizer_small(sym4, GeneratedGroup([_c([0, 1, 2, 3], 4)], 4))
        assert normalizer.order() == 8

    def test_element_of_order(self, sym4):
        """测试按阶取元素"""
        assert element_of_order(sym4, 4).order() == 4
        assert element_of_order(sym4, 3).order() == 3

    def test_element_of_missing_order(self, sym4):
        """测试不存在的阶"""
        with pytest.raises(ValueError):
            element_of_order(sym4, 5)
