"""
块系与块上商作用测试
"""
import pytest

from pitkit.errors import BlocksNotInvariant, NotTransitive
from pitkit.perm.blocks import BlockSystem, minimal_block, minimal_block_systems, quotient_on_blocks
from pitkit.perm.group import GeneratedGroup
from pitkit.perm.permutation import Permutation


def _c(points, degree):
    return Permutation.from_cycles([points], degree)


@pytest.fixture
def cyclic6():
    return GeneratedGroup([_c([0, 1, 2, 3, 4, 5], 6)], 6)


# ==================== 块系测试 ====================

class TestBlockSystem:
    def test_from_cells_is_canonical(self):
        """测试块按最小点排序、块内升序"""
        system = BlockSystem.from_cells([[3, 1], [2, 0]])
        assert system.blocks == ((0, 2), (1, 3))
        assert system.cell_index() == [0, 1, 0, 1]
        assert system.cell_of(3) == 1
        assert (system.cell_size, system.cell_count, system.degree) == (2, 2, 4)

    def test_trivial_systems(self):
        """测试平凡块系"""
        assert BlockSystem.from_cells([[0, 1, 2]]).is_trivial()
        assert BlockSystem.from_cells([[0], [1], [2]]).is_trivial()
        assert not BlockSystem.from_cells([[0, 1], [2, 3]]).is_trivial()

    def test_block_images(self):
        """测试元素在块上的像"""
        system = BlockSystem.from_cells([[0, 2], [1, 3]])
        assert system.block_images(_c([0, 1, 2, 3], 4).images) == (1, 0)
        assert system.block_images(_c([0, 1], 4).images) is None


class TestMinimalBlocks:
    def test_minimal_block_containing_pair(self, dihedral8):
        """测试含 {0,2} 的最小块"""
        system = minimal_block(dihedral8.raw_generators, 4, (0, 2))
        assert system.blocks == ((0, 2), (1, 3))

    def test_adjacent_vertices_generate_everything(self, dihedral8):
        """测试相邻顶点只在全集中同块"""
        assert minimal_block(dihedral8.raw_generators, 4, (0, 1)).cell_count == 1

    def test_dihedral_block_systems(self, dihedral8):
        """测试 D8 只有对角线块系"""
        systems = minimal_block_systems(dihedral8)
        assert [s.blocks for s in systems] == [((0, 2), (1, 3))]

    def test_primitive_group_has_no_blocks(self, sym4):
        """测试本原群没有非平凡块系"""
        assert minimal_block_systems(sym4) == []

    def test_cyclic_group_block_systems(self, cyclic6):
        """测试 C6 的两个极小块系按块长排序"""
        systems = minimal_block_systems(cyclic6)
        assert [s.blocks for s in systems] == [
            ((0, 3), (1, 4), (2, 5)),
            ((0, 2, 4), (1, 3, 5)),
        ]

    def test_intransitive_group_rejected(self):
        """测试不传递群"""
        with pytest.raises(NotTransitive):
            minimal_block_systems(GeneratedGroup([_c([0, 1], 3)], 3))


# ==================== 商作用测试 ====================

class TestQuotientOnBlocks:
    def test_quotient_and_kernel(self, dihedral8):
        """测试 D8 在对角线上的商为 C2，核为四阶"""
        system = BlockSystem.from_cells([[0, 2], [1, 3]])
        quotient = quotient_on_blocks(dihedral8, system)
        assert quotient.group.degree == 2
        assert quotient.group.order() == 2
        assert quotient.kernel.order() == 4
        assert quotient.project(_c([0, 1, 2, 3], 4)).images == (1, 0)
        assert len(quotient.pairs()) == len(dihedral8.generators)

    def test_non_invariant_partition(self, dihedral8):
        """测试不被保持的划分"""
        with pytest.raises(BlocksNotInvariant):
            quotient_on_blocks(dihedral8, BlockSystem.from_cells([[0, 1], [2, 3]]))

    def test_degree_mismatch(self, dihedral8):
        """测试块系次数不符"""
        with pytest.raises(BlocksNotInvariant):
            quotient_on_blocks(dihedral8, BlockSystem.from_cells([[0, 1]]))

    def test_project_rejects_non_preserving_element(self, dihedral8):
        """测试投影不保持块系的元素"""
        quotient = quotient_on_blocks(dihedral8, BlockSystem.from_cells([[0, 2], [1, 3]]))
        with pytest.raises(BlocksNotInvariant):
            quotient.project(_c([0, 1], 4))
