"""
部分线性空间测试
"""
import pytest

from pitkit.classify.incidence import (
    IncidenceStructure,
    check_axioms,
    parse_design,
    pg32_full,
    pg32_structure,
    read_design,
    verify_pls,
    z14_group,
    z14_structure,
)
from pitkit.errors import NotPartialLinearSpace, ParseError
from pitkit.perm.group import GeneratedGroup
from pitkit.perm.permutation import Permutation


# ==================== 公理测试 ====================

class TestAxioms:
    def test_short_lines(self):
        """测试线长不超过 2"""
        s = IncidenceStructure.of(3, [[0, 1], [1, 2], [0, 2]])
        with pytest.raises(NotPartialLinearSpace) as exc:
            check_axioms(s)
        assert exc.value.axiom == "line_size"

    def test_no_lines(self):
        """测试没有线"""
        with pytest.raises(NotPartialLinearSpace) as exc:
            check_axioms(IncidenceStructure.of(4, []))
        assert exc.value.axiom == "line_size"

    def test_non_constant_replication(self):
        """测试各点所在线数不同"""
        s = IncidenceStructure.of(6, [[0, 1, 2], [0, 3, 4]])
        with pytest.raises(NotPartialLinearSpace) as exc:
            check_axioms(s)
        assert exc.value.axiom == "replication"

    def test_pair_on_two_lines(self):
        """测试一对点位于两条线上"""
        s = IncidenceStructure.of(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
        with pytest.raises(NotPartialLinearSpace) as exc:
            check_axioms(s)
        assert exc.value.axiom == "pair"
        assert exc.value.to_dict()["details"]["axiom"] == "pair"

    def test_linear_space_rejected(self):
        """测试 PG(3,2) 全部 35 条线构成线性空间"""
        s = pg32_full()
        assert len(s.lines) == 35
        with pytest.raises(NotPartialLinearSpace) as exc:
            check_axioms(s)
        assert exc.value.axiom == "non_collinear"


# ==================== 两个例子测试 ====================

class TestExamples:
    def test_z14(self):
        """测试 Z14 上的结构与阶 336 的秩 3 群"""
        s = z14_structure()
        g = z14_group(s)
        assert (s.point_count, len(s.lines), s.line_size, s.replication()) == (14, 14, 4, 4)
        assert g.order() == 336
        report = verify_pls(s, g)
        assert report.ok
        assert report.rank == 3
        assert report.to_dict()["group_order"] == 336

    def test_pg32_minus_spread(self):
        """测试 PG(3,2) 去掉展开后的 30 条线与 ΓL(2,4)"""
        s, g = pg32_structure()
        assert (s.point_count, len(s.lines)) == (15, 30)
        assert g.order() == 360
        report = verify_pls(s, g)
        assert report.ok
        assert report.line_size == 3
        assert report.replication == 6

    def test_unpreserving_generator_reported(self):
        """测试不保持线集的生成元"""
        s = z14_structure()
        shift = Permutation((x + 1) % 14 for x in range(14))
        swap = Permutation.from_cycles([[0, 1]], 14)
        report = verify_pls(s, GeneratedGroup([shift, swap], 14))
        assert not report.preserved
        assert report.unpreserving_generators == [1]
        assert not report.ok

    def test_degree_mismatch(self):
        """测试群次数与点数不符"""
        with pytest.raises(ValueError):
            verify_pls(z14_structure(), GeneratedGroup.trivial(7))


# ==================== 设计文件测试 ====================

class TestDesignFile:
    def test_parse(self):
        """测试解析设计文件"""
        s = parse_design("# fano\npoints 7\n0 1 3\n1 2 4\n2 3 5\n3 4 6\n4 5 0\n5 6 1\n6 0 2\n")
        assert s.point_count == 7
        assert len(s.lines) == 7
        assert parse_design(s.to_text()).lines == s.lines

    @pytest.mark.parametrize("text", [
        "",
        "# only comments\n",
        "lines 7\n0 1 2\n",
        "points x\n",
        "points 4\n0 1 a\n",
        "points 4\n0 1 4\n",
    ])
    def test_parse_errors(self, text):
        """测试格式错误"""
        with pytest.raises(ParseError):
            parse_design(text)

    def test_read_design(self, tmp_path):
        """测试从文件读取，名称取文件名"""
        path = tmp_path / "z14.design"
        path.write_text(z14_structure().to_text(), encoding="utf-8")
        s = read_design(path)
        assert s.name == "z14"
        assert s.lines == z14_structure().lines
