"""
有限域与矩阵测试
"""
import pytest
from hypothesis import given, settings, strategies as st

from pitkit.algebra.field import TABLE_FIELD_ORDER, FiniteField, least_irreducible, make_field
from pitkit.algebra.matrix import Matrix, SemilinearElement, format_matrices
from pitkit.errors import NotPrime

FIELDS = [(2, 1), (2, 2), (2, 3), (3, 2), (5, 1), (2, 4), (7, 2)]
LARGE_FIELDS = [(2, 11), (3, 7), (5, 5), (65537, 1)]


@st.composite
def field_elements(draw, count=3):
    q0, a = draw(st.sampled_from(FIELDS))
    f = make_field(q0, a)
    values = [draw(st.integers(min_value=0, max_value=f.q - 1)) for _ in range(count)]
    return f, values


# ==================== 域构造测试 ====================

class TestFieldConstruction:
    def test_orders(self):
        """测试域的阶与参数"""
        f = make_field(2, 3)
        assert (f.q0, f.a, f.q) == (2, 3, 8)
        assert list(f.elements) == list(range(8))

    def test_least_irreducible(self):
        """测试字典序最小的不可约多项式（低次在前）"""
        assert least_irreducible(2, 2) == (1, 1, 1)
        assert least_irreducible(2, 3) == (1, 1, 0, 1)
        assert least_irreducible(3, 2) == (1, 0, 1)
        assert least_irreducible(5, 1) == (0, 1)

    def test_primitive_element(self):
        """测试 ω 是本原元"""
        for q0, a in FIELDS:
            f = make_field(q0, a)
            assert f.element_order(f.omega) == f.q - 1
            assert f.dlog(f.omega) == 1

    def test_fields_are_cached(self):
        """测试同参数返回同一对象"""
        assert make_field(3, 2) is make_field(3, 2)

    def test_non_prime_characteristic(self):
        """测试特征不是素数"""
        with pytest.raises(NotPrime):
            FiniteField(6, 1)

    def test_invalid_degree_and_size(self):
        """测试扩张次数非法与阶超过 2^32"""
        with pytest.raises(ValueError):
            FiniteField(2, 0)
        with pytest.raises(ValueError):
            FiniteField(2, 33)

    def test_zero_has_no_inverse(self):
        """测试零元不可逆"""
        f = make_field(5)
        with pytest.raises(ZeroDivisionError):
            f.inv(0)
        with pytest.raises(ValueError):
            f.dlog(0)

    def test_format(self):
        """测试元素的显示"""
        f = make_field(2, 2)
        assert f.format(0) == "0"
        assert f.format(f.omega) == "w1"
        assert repr(f) == "GF(2^2)"


# ==================== 域公理测试 ====================

class TestFieldAxioms:
    @given(field_elements())
    def test_distributive(self, data):
        """测试分配律"""
        f, (x, y, z) = data
        assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))

    @given(field_elements())
    def test_inverses(self, data):
        """测试加法逆与乘法逆"""
        f, (x, _, _) = data
        assert f.add(x, f.neg(x)) == 0
        assert f.sub(x, x) == 0
        if x:
            assert f.mul(x, f.inv(x)) == 1
            assert f.exp(f.dlog(x)) == x

    @given(field_elements())
    def test_frobenius_is_automorphism(self, data):
        """测试 Frobenius 是域自同构，a 次后为恒等"""
        f, (x, y, _) = data
        assert f.frobenius(f.mul(x, y)) == f.mul(f.frobenius(x), f.frobenius(y))
        assert f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y))
        assert f.frobenius(x, f.a) == x

    @given(field_elements())
    def test_power(self, data):
        """测试幂运算与逐次乘法一致"""
        f, (x, _, _) = data
        assert f.pow(x, 3) == f.mul(x, f.mul(x, x))
        assert f.pow(x, 0) == 1


class TestConjugation:
    def test_conjugation_fixes_subfield(self):
        """测试 GF(q²) 上共轭的不动点恰为 GF(q)"""
        f = make_field(3, 2)
        fixed = [x for x in f.elements if f.conj(x) == x]
        assert len(fixed) == f.subfield_order == 3
        assert all(f.conj(f.conj(x)) == x for x in f.elements)

    def test_odd_degree_has_no_conjugation(self):
        """测试奇次扩张没有共轭"""
        with pytest.raises(ValueError):
            make_field(2, 3).conj(1)


# ==================== 大域测试 ====================

@st.composite
def large_field_elements(draw, count=3):
    q0, a = draw(st.sampled_from(LARGE_FIELDS))
    f = make_field(q0, a)
    values = [draw(st.integers(min_value=0, max_value=f.q - 1)) for _ in range(count)]
    return f, values


class TestLargeFields:
    def test_table_threshold(self):
        """测试超过查表上限的域不建表"""
        assert make_field(2, 10).tabulated
        for q0, a in LARGE_FIELDS:
            f = make_field(q0, a)
            assert f.q > TABLE_FIELD_ORDER
            assert not f.tabulated

    def test_primitive_element(self):
        """测试大域的本原元与离散对数"""
        for q0, a in LARGE_FIELDS:
            f = make_field(q0, a)
            assert f.element_order(f.omega) == f.q - 1
            assert f.pow(f.omega, f.q - 1) == 1
            assert f.dlog(f.omega) == 1
            assert f.exp(f.q - 2) == f.inv(f.omega)

    def test_reduction_by_modulus(self):
        """测试 x^{a-1} · x 按模多项式约化"""
        for q0, a in [(2, 11), (3, 7)]:
            f = make_field(q0, a)
            expected = sum(((-c) % q0) * q0 ** i for i, c in enumerate(f.modulus[:-1]))
            assert f.mul(q0 ** (a - 1), q0) == expected

    def test_frobenius_order(self):
        """测试 GF(3^7) 上 Frobenius 的阶为 7"""
        f = make_field(3, 7)
        x = f.omega
        assert f.frobenius(x, 7) == x
        assert all(f.frobenius(x, k) != x for k in range(1, 7))

    @settings(max_examples=100, deadline=None)
    @given(large_field_elements())
    def test_field_axioms(self, data):
        """测试大域的结合律、分配律与逆元"""
        f, (x, y, z) = data
        assert f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z))
        assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
        assert f.add(x, f.neg(x)) == 0
        assert f.sub(f.add(x, y), y) == x
        if x:
            assert f.mul(x, f.inv(x)) == 1
            assert f.exp(f.dlog(x)) == x
            assert f.element_order(x) * f.dlog(x) % (f.q - 1) == 0

    @settings(max_examples=100, deadline=None)
    @given(field_elements())
    def test_polynomial_path_matches_tables(self, data):
        """测试多项式基运算与查表结果一致"""
        f, (x, y, _) = data
        assert f._mul_poly(x, y) == f.mul(x, y)
        assert f._add_poly(x, y) == f.add(x, y)
        assert f._neg_poly(x) == f.neg(x)


# ==================== 矩阵测试 ====================

class TestMatrix:
    def test_determinant_and_inverse(self):
        """测试行列式与逆"""
        f = make_field(5)
        a = Matrix.of(f, [[1, 2], [3, 4]])
        assert a.det() == f.sub(4, 6 % 5)
        assert (a * a.inverse()).is_identity()
        assert (a.inverse() * a).is_identity()

    def test_singular_matrix(self):
        """测试奇异矩阵没有逆"""
        f = make_field(3)
        a = Matrix.of(f, [[1, 2], [2, 1]])
        assert a.det() == 0
        with pytest.raises(ZeroDivisionError):
            a.inverse()

    def test_non_square_rejected(self):
        """测试非方阵"""
        with pytest.raises(ValueError):
            Matrix.of(make_field(2), [[1, 0, 1], [0, 1, 0]])

    def test_row_vector_action(self):
        """测试行向量约定 v ↦ vA"""
        f = make_field(7)
        a = Matrix.of(f, [[1, 2], [0, 1]])
        assert a.act((1, 0)) == (1, 2)
        assert a.act((0, 1)) == (0, 1)
        b = Matrix.of(f, [[0, 1], [1, 0]])
        v = (3, 5)
        assert (a * b).act(v) == b.act(a.act(v))

    def test_semilinear_composition(self):
        """测试 (φ^i A)(φ^j B) 先作用左因子"""
        f = make_field(2, 2)
        a = SemilinearElement(1, Matrix.of(f, [[1, f.omega], [0, 1]]))
        b = SemilinearElement(1, Matrix.of(f, [[0, 1], [1, 1]]))
        for v in [(1, 0), (0, 1), (f.omega, 1), (1, f.omega)]:
            assert (a * b).act(v) == b.act(a.act(v))
        assert (a * b).frob == 0

    def test_format_matrices(self):
        """测试矩阵导出格式（离散对数，零记为 -1）"""
        f = make_field(3)
        text = format_matrices(f, [Matrix.diagonal(f, [f.omega, 1])])
        assert text == "3 1 2\n\n1 -1\n-1 0\n"
