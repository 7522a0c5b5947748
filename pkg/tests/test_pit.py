"""
内传递识别、φ̂、秩 3 判据与分类流水线测试
"""
import pytest

from pitkit.actions.projective import scaled_projective_action
from pitkit.actions.ree import ree3_line7_action
from pitkit.algebra.field import make_field
from pitkit.classify.pipeline import classify_group, r_transitive_off_sigma, report_for
from pitkit.classify.pit import (
    InnatelyTransitiveMarker,
    PitDecomposition,
    cell_action_two_transitive,
    decompose,
    detect_pit,
    phi_hat,
)
from pitkit.classify.rank3 import is_line7_quotient, rank3_criteria
from pitkit.classify.signature import curated_name, quotient_signature
from pitkit.errors import NotTransitive, PreconditionFailed
from pitkit.perm.group import GeneratedGroup
from pitkit.perm.permutation import Permutation


@pytest.fixture(scope="module")
def psl25_construction():
    return scaled_projective_action(2, make_field(5), 2)


@pytest.fixture(scope="module")
def rank4_pit(psl25_construction):
    """C2 × PSL(2,5) 在 12 点上"""
    return detect_pit(psl25_construction.centralizer_times_plinth)


@pytest.fixture(scope="module")
def rank3_pit(psl25_construction):
    """ΓL(2,5)/Y 在 12 点上（阶 240）"""
    c = psl25_construction
    return decompose(c.normalizer, c.plinth, c.centralizer)


@pytest.fixture(scope="module")
def line7_pit():
    line7 = ree3_line7_action()
    return decompose(line7.normalizer, line7.omega.group)


# ==================== 识别测试 ====================

class TestDetectPit:
    def test_proper_innately_transitive(self, rank4_pit):
        """测试 C2 × PSL(2,5)：|C| = 2，|Σ| = 6"""
        assert isinstance(rank4_pit, PitDecomposition)
        assert rank4_pit.r == 2
        assert rank4_pit.sigma_count == 6
        assert rank4_pit.plinth.order() == 60
        assert rank4_pit.blocks.cell_size == 2

    def test_quasiprimitive(self, alt5):
        """测试 A5 在 5 点上拟本原，C 平凡"""
        found = detect_pit(alt5)
        assert isinstance(found, InnatelyTransitiveMarker)
        assert found.quasiprimitive
        assert not found.plinth_abelian
        assert found.plinth_order == 60

    def test_abelian_plinth(self, sym4):
        """测试 S4 的传递极小正规子群 V4 是交换的"""
        found = detect_pit(sym4)
        assert isinstance(found, InnatelyTransitiveMarker)
        assert found.plinth_abelian
        assert found.plinth_order == 4

    def test_not_innately_transitive(self, dihedral8):
        """测试 D8 的唯一极小正规子群不传递"""
        assert detect_pit(dihedral8) is None

    def test_intransitive_input(self):
        """测试不传递输入"""
        g = GeneratedGroup([Permutation([1, 0, 2])], 3)
        with pytest.raises(NotTransitive):
            detect_pit(g)


class TestPhiHat:
    def test_quotient_and_r(self, rank4_pit):
        """测试 φ̂(G) = (PSL(2,5), C5)"""
        hat = phi_hat(rank4_pit)
        assert hat.quotient.degree == 6
        assert hat.quotient.order() == 60
        assert hat.plinth_quotient.order() == 60
        assert hat.r_sigma.order() == 5
        assert hat.r_normal and hat.r_invariant

    def test_cell_action(self, rank4_pit):
        """测试长度 2 的块上作用自动 2-传递"""
        assert cell_action_two_transitive(rank4_pit)

    def test_r_transitive_off_sigma(self, rank4_pit):
        """测试 R^Σ 在 Σ∖{σ} 上传递"""
        assert r_transitive_off_sigma(rank4_pit)


# ==================== 秩 3 判据测试 ====================

class TestRank3Criteria:
    def test_rank4_group(self, rank4_pit):
        """测试秩 4 时五个判据一致为假"""
        result = rank3_criteria(rank4_pit)
        assert result.rank == 4
        assert result.applicable
        assert result.agree
        assert not any(result.criteria.values())

    def test_rank3_group(self, rank3_pit):
        """测试秩 3 时五个判据一致为真"""
        result = rank3_criteria(rank3_pit)
        assert result.rank == 3
        assert result.agree
        assert all(result.criteria.values())

    def test_line7_excluded(self, line7_pit):
        """测试 Ree(3) 商不适用判据，且 R 在 Σ∖{σ} 上不传递"""
        assert is_line7_quotient(line7_pit)
        assert not rank3_criteria(line7_pit).applicable
        assert not r_transitive_off_sigma(line7_pit)
        with pytest.raises(PreconditionFailed):
            rank3_criteria(line7_pit, strict=True)


# ==================== 流水线测试 ====================

class TestClassifyGroup:
    def test_report_rank4(self, psl25_construction):
        """测试次数 12、阶 120 的完整记录"""
        report = classify_group(psl25_construction.centralizer_times_plinth)
        assert (report.degree, report.order, report.r, report.sigma_count) == (12, 120, 2, 6)
        assert report.rank == 4
        assert report.special
        assert report.line_tag == 2
        assert report.proper and report.innately_transitive
        assert report.quotient_signature.name == "PSL(2,5)"
        assert report.verdict.p == 2
        assert report.criteria == {"a": False, "b": False, "c": False, "d": False, "e": False}

    def test_report_rank3(self, rank3_pit):
        """测试阶 240 的记录"""
        report = report_for(rank3_pit)
        assert (report.order, report.rank) == (240, 3)
        assert report.quotient_signature.name == "PGL(2,5)"
        assert report.quotient_signature.suborbits == [1, 5]

    def test_known_plinth(self, psl25_construction):
        """测试给定基柱时跳过识别"""
        c = psl25_construction
        report = classify_group(c.centralizer_times_plinth, plinth=c.plinth)
        assert report.r == 2 and report.rank == 4

    def test_quasiprimitive_report(self, alt5):
        """测试拟本原群的记录"""
        report = classify_group(alt5)
        assert report.innately_transitive
        assert not report.proper
        assert report.quasiprimitive
        assert report.special is None

    def test_not_innately_transitive_report(self, dihedral8):
        """测试非内传递群的记录"""
        report = classify_group(dihedral8)
        assert not report.innately_transitive
        assert report.rank == 3


class TestSignature:
    def test_curated_names(self, alt5, sym4):
        """测试按 (次数, 阶) 命名"""
        assert curated_name(alt5) == "A5"
        assert curated_name(sym4) is None

    def test_signature_fields(self, alt5):
        """测试签名字段"""
        signature = quotient_signature(alt5)
        assert (signature.degree, signature.order, signature.rank) == (5, 60, 2)
        assert signature.suborbits == [1, 4]
