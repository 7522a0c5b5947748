"""
分类流水线上的具体例子：PSL(2,25) 的两个伸缩作用、伸缩条件失败时的识别
"""
import pytest

from pitkit.actions.projective import scaled_projective_action
from pitkit.algebra.field import make_field
from pitkit.classify.pit import PitDecomposition, decompose, detect_pit, phi_hat
from pitkit.perm.isomorphism import pairs_equivalent, perm_isomorphic
from pitkit.perm.normal import normal_subgroups_up_to_index


@pytest.fixture(scope="module")
def psl225_phi():
    """r = 2 与 r = 3 的 C×M（次数 52 与 78）各自的 φ̂"""
    result = {}
    for r in (2, 3):
        c = scaled_projective_action(2, make_field(5, 2), r)
        d = decompose(c.centralizer_times_plinth, c.plinth)
        result[r] = (c, d, phi_hat(d))
    return result


# ==================== PSL(2,25) 测试 ====================

class TestPsl225Pairs:
    def test_degrees_and_orders(self, psl225_phi):
        """测试次数 52、78 与 C×M 的阶"""
        (c2, d2, _), (c3, d3, _) = psl225_phi[2], psl225_phi[3]
        assert (c2.action.degree, c3.action.degree) == (52, 78)
        assert (d2.group.order(), d3.group.order()) == (15600, 23400)
        assert (d2.r, d3.r) == (2, 3)
        assert d2.sigma_count == d3.sigma_count == 26

    def test_same_plinth_image(self, psl225_phi):
        """测试两个群的 M^Σ 置换同构（同为 PSL(2,25) 在 26 点上）"""
        m2 = psl225_phi[2][2].plinth_quotient
        m3 = psl225_phi[3][2].plinth_quotient
        assert m2.order() == m3.order() == 7800
        assert perm_isomorphic(m2, m3) is not None

    def test_r_has_index_two_and_three(self, psl225_phi):
        """测试 R_i 在 (M^Σ)_σ = C5²⋊C12 中指数为 i 且正规"""
        indices = set()
        for r in (2, 3):
            ph = psl225_phi[r][2]
            m_sigma = ph.plinth_quotient.stabilizer(ph.sigma)
            assert m_sigma.order() == 300
            assert ph.r_normal and ph.r_invariant
            index = m_sigma.order() // ph.r_sigma.order()
            indices.add(index)
            normals = normal_subgroups_up_to_index(m_sigma, 3)
            assert any(n.same_as(ph.r_sigma) for n in normals)
        assert {2, 3} <= indices

    def test_pairs_not_equivalent(self, psl225_phi):
        """测试 (M^Σ, R_2) 与 (M^Σ, R_3) 不等价"""
        p2, p3 = psl225_phi[2][2], psl225_phi[3][2]
        assert p2.r_sigma.order() == 150
        assert p3.r_sigma.order() == 100
        result = pairs_equivalent((p2.plinth_quotient, p2.r_sigma, p2.sigma),
                                  (p3.plinth_quotient, p3.r_sigma, p3.sigma))
        assert result is None


# ==================== 伸缩条件测试 ====================

class TestScaledDivisibility:
    def test_failing_case_has_no_transitive_minimal_normal(self):
        """测试 (d,q,r) = (3,4,3)：r ∤ (q-1)/(d,q-1)，⟨Z, SL⟩ 不是内传递群"""
        c = scaled_projective_action(3, make_field(2, 2), 3)
        group = c.centralizer_times_plinth
        assert group.degree == 63
        assert group.is_transitive()
        assert detect_pit(group) is None

    def test_passing_case_is_proper(self):
        """测试 (2,5,2)：r | (q-1)/(d,q-1)，得到真内传递群"""
        c = scaled_projective_action(2, make_field(5), 2)
        d = detect_pit(c.centralizer_times_plinth)
        assert isinstance(d, PitDecomposition)
        assert d.r == 2
