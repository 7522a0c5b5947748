"""
公共测试夹具
"""
import pytest

from pitkit.config import reset_settings
from pitkit.perm.group import GeneratedGroup
from pitkit.perm.permutation import Permutation


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """每个测试前后清除设置缓存，测试内可用 monkeypatch 改环境变量"""
    for name in ("PITKIT_COSET_CAP", "PITKIT_SMALL_GROUP_CAP", "PITKIT_ISO_BUDGET",
                 "PITKIT_LIFT_BUDGET", "PITKIT_INDEX_CAP", "PITKIT_DATA_DIR"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


def cycle(points, degree):
    return Permutation.from_cycles([points], degree)


@pytest.fixture
def sym4():
    return GeneratedGroup([cycle([0, 1], 4), cycle([0, 1, 2, 3], 4)], 4, name="S4")


@pytest.fixture
def dihedral8():
    """正方形的对称群 D8，作用在顶点 0..3 上"""
    return GeneratedGroup([cycle([0, 1, 2, 3], 4), cycle([1, 3], 4)], 4, name="D8")


@pytest.fixture
def alt5():
    return GeneratedGroup([cycle([0, 1, 2], 5), cycle([0, 1, 2, 3, 4], 5)], 5, name="A5")


@pytest.fixture
def db_url(tmp_path):
    return f"sqlite:///{tmp_path}/pitkit-test.db"
