"""
置换与置换文件格式测试
"""
import pytest
from hypothesis import given, strategies as st

from pitkit.errors import ParseError
from pitkit.perm.permutation import (
    Permutation,
    format_permutations,
    parse_permutation,
    parse_permutation_file,
)


@st.composite
def perm_pairs(draw, max_degree=8):
    n = draw(st.integers(min_value=1, max_value=max_degree))
    p = draw(st.permutations(list(range(n))))
    q = draw(st.permutations(list(range(n))))
    return Permutation(p), Permutation(q)


# ==================== 运算测试 ====================

class TestPermutationArithmetic:
    def test_product_applies_left_factor_first(self):
        """测试 p*q 先作用 p 再作用 q"""
        p = Permutation.from_cycles([[0, 1]], 3)
        q = Permutation.from_cycles([[1, 2]], 3)
        assert (p * q).images == (2, 0, 1)
        assert (q * p).images == (1, 2, 0)

    def test_conjugate_relabels_points(self):
        """测试 x.conjugate(t) = t^-1 x t 把 i -> x(i) 变为 t(i) -> t(x(i))"""
        x = Permutation.from_cycles([[0, 1, 2]], 5)
        t = Permutation.from_cycles([[0, 3], [1, 4]], 5)
        c = x.conjugate(t)
        for i in range(5):
            assert c[t[i]] == t[x[i]]
        assert c.to_cycle_string() == "(2 3 4)"

    def test_commutator(self):
        """测试换位子 [a,b] = a^-1 b^-1 a b"""
        a = Permutation.from_cycles([[0, 1]], 3)
        b = Permutation.from_cycles([[1, 2]], 3)
        assert a.commutator(b) == a.inverse() * b.inverse() * a * b
        assert a.commutator(b).order() == 3

    def test_negative_power(self):
        """测试负指数幂"""
        p = Permutation.from_cycles([[0, 1, 2, 3]], 4)
        assert p ** -1 == p.inverse()
        assert p ** 4 == Permutation.identity(4)
        assert (p ** -3) == p

    @given(perm_pairs())
    def test_inverse_of_product(self, pair):
        """测试 (pq)^-1 = q^-1 p^-1"""
        p, q = pair
        assert (p * q).inverse() == q.inverse() * p.inverse()
        assert (p * p.inverse()).is_identity()

    @given(perm_pairs())
    def test_order_kills_element(self, pair):
        """测试 p^|p| 为恒等"""
        p, _ = pair
        assert (p ** p.order()).is_identity()


# ==================== 结构测试 ====================

class TestPermutationStructure:
    def test_cycles_and_cycle_type(self):
        """测试轮换分解与轮换型"""
        p = Permutation.from_cycles([[3, 4], [0, 1, 2]], 6)
        assert p.cycles() == [(0, 1, 2), (3, 4)]
        assert p.cycle_type() == (1, 2, 3)
        assert p.order() == 6
        assert p.support() == [0, 1, 2, 3, 4]
        assert p.fixed_points() == [5]

    def test_identity_string(self):
        """测试恒等置换的轮换记号"""
        assert Permutation.identity(4).to_cycle_string() == "()"
        assert Permutation.identity(4).order() == 1

    def test_hash_and_equality(self):
        """测试相同像元组的置换相等且哈希一致"""
        a = Permutation([1, 0, 2])
        b = Permutation.from_cycles([[0, 1]], 3)
        assert a == b
        assert len({a, b}) == 1


# ==================== 解析测试 ====================

class TestParsing:
    def test_parse_cycle_notation(self):
        """测试解析轮换记号"""
        p = parse_permutation("(0 1 2)(3 4)", 5)
        assert p.images == (1, 2, 0, 4, 3)

    def test_parse_cycle_notation_with_commas(self):
        """测试轮换中的逗号分隔"""
        assert parse_permutation("(0,2)", 3).images == (2, 1, 0)

    def test_parse_image_list(self):
        """测试解析像列表"""
        assert parse_permutation("1 2 0", 3).images == (1, 2, 0)

    @given(perm_pairs())
    def test_cycle_string_parses_back(self, pair):
        """测试轮换记号可解析回原置换"""
        p, _ = pair
        assert parse_permutation(p.to_cycle_string(), p.degree) == p

    def test_repeated_point_rejected(self):
        """测试轮换中重复的点"""
        with pytest.raises(ParseError):
            parse_permutation("(0 1)(1 2)", 3)

    def test_point_out_of_range(self):
        """测试越界的点"""
        with pytest.raises(ParseError):
            parse_permutation("(0 5)", 3)

    def test_image_list_not_bijective(self):
        """测试像列表不是双射"""
        with pytest.raises(ParseError):
            parse_permutation("0 0 1", 3)

    def test_image_list_wrong_length(self):
        """测试像列表长度不符"""
        with pytest.raises(ParseError):
            parse_permutation("1 0", 3)

    def test_garbage_rejected(self):
        """测试非整数内容"""
        with pytest.raises(ParseError):
            parse_permutation("(a b)", 3)
        with pytest.raises(ParseError):
            parse_permutation("", 3)


class TestPermutationFile:
    def test_parse_file_with_comments(self):
        """测试带注释的置换文件"""
        text = "# M\n\ndegree 4\n(0 1 2 3)\n1 0 2 3\n"
        degree, perms = parse_permutation_file(text)
        assert degree == 4
        assert [p.to_cycle_string() for p in perms] == ["(0 1 2 3)", "(0 1)"]

    def test_missing_header(self):
        """测试缺少 degree 头"""
        with pytest.raises(ParseError):
            parse_permutation_file("(0 1)\n")

    def test_no_generators(self):
        """测试没有生成元"""
        with pytest.raises(ParseError):
            parse_permutation_file("degree 3\n")

    def test_empty_file(self):
        """测试空文件"""
        with pytest.raises(ParseError):
            parse_permutation_file("# only a comment\n")

    def test_format_is_readable_by_parser(self):
        """测试导出格式可被解析"""
        perms = [Permutation([1, 2, 0]), Permutation([0, 2, 1])]
        text = format_permutations(3, perms)
        assert text == "degree 3\n1 2 0\n0 2 1\n"
        assert parse_permutation_file(text) == (3, perms)
