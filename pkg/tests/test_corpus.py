"""
2-传递群样本：表格谓词与神谕对照测试
"""
import pytest

from pitkit.catalog.corpus import (
    CorpusGroup,
    abelianization_primes,
    compare_with_oracle,
    desk_corpus,
    linear_group,
    predicted_r_values,
    symmetric_group,
    unitary_group,
)


@pytest.fixture(scope="module")
def corpus():
    return {item.name: item for item in desk_corpus()}


# ==================== 样本构造测试 ====================

class TestCorpusGroups:
    def test_names_unique(self):
        """测试样本名称唯一"""
        names = [item.name for item in desk_corpus()]
        assert len(names) == len(set(names))

    def test_linear_groups(self):
        """测试 PSL / PGL / PΓL 的阶"""
        assert linear_group(2, 7).order() == 168
        assert linear_group(2, 7, diagonal=True).order() == 336
        assert linear_group(2, 2, 2, j=1).order() == 120
        assert linear_group(2, 2, 2, j=2).order() == 60

    def test_unitary_group(self):
        """测试 PSU(3,3) 与 PΓU(3,3)"""
        assert unitary_group(3, j=2).order() == 6048
        assert unitary_group(3, j=1).order() == 12096

    def test_symmetric_group(self):
        """测试 S5"""
        assert symmetric_group(5).order() == 120

    def test_abelianization_primes(self):
        """测试 |M_σ : M_σ'| 的素因子"""
        assert abelianization_primes(symmetric_group(5)) == [3]
        assert abelianization_primes(linear_group(2, 7)) == [3]
        assert abelianization_primes(linear_group(2, 5)) == [2]

    def test_prediction_without_line(self):
        """测试不属于任何行的样本没有预测"""
        item = CorpusGroup("anything", lambda: symmetric_group(5))
        assert predicted_r_values(item, [2, 3]) == []


# ==================== 对照测试 ====================

class TestOracleComparison:
    @pytest.mark.parametrize("name,special", [
        ("A5 on 5", []),
        ("S5 on 5", [3]),
        ("PSL(2,5) on 6", [2]),
        ("PGL(2,5) on 6", [2]),
        ("PSL(2,7) on 8", []),
        ("PSL(3,2) on 7", [2]),
        ("PGammaL(2,8) on 28", [2]),
    ])
    def test_predicate_agrees_with_oracle(self, corpus, name, special):
        """测试表格谓词与穷举神谕一致，特殊 R 唯一"""
        comparison = compare_with_oracle(corpus[name])
        assert comparison.oracle == special
        assert comparison.agree
        assert comparison.unique
        assert comparison.to_dict()["agree"]

    @pytest.mark.slow
    def test_whole_corpus(self, corpus):
        """测试全部非慢样本"""
        for item in corpus.values():
            if item.slow:
                continue
            comparison = compare_with_oracle(item)
            assert comparison.agree and comparison.unique, comparison.to_dict()

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["Sp(6,2) on 28", "Sp(6,2) on 36"])
    def test_symplectic_groups(self, corpus, name):
        """测试 Sp(6,2) 的两个 2-传递作用：O± 的指数 2 子群是唯一特殊 R，r = 2"""
        item = corpus[name]
        assert item.slow
        comparison = compare_with_oracle(item)
        assert comparison.candidates == [2]
        assert comparison.oracle == [2]
        assert comparison.predicted == [2]
        assert comparison.agree and comparison.unique, comparison.to_dict()
