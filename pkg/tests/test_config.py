"""
配置测试
"""
import pytest

from pitkit.config import BUNDLED_DATA_DIR, get_settings, reset_settings


class TestSettings:
    def test_defaults(self):
        """测试默认值"""
        settings = get_settings()
        assert settings.coset_cap == 1_000_000
        assert settings.index_cap == 512
        assert settings.data_dir == BUNDLED_DATA_DIR
        assert (BUNDLED_DATA_DIR / "catalog.yaml").exists()

    def test_env_overrides(self, monkeypatch, tmp_path):
        """测试环境变量覆盖"""
        monkeypatch.setenv("PITKIT_COSET_CAP", "2_000")
        monkeypatch.setenv("PITKIT_DATA_DIR", str(tmp_path))
        monkeypatch.setenv("PITKIT_LOG_LEVEL", "debug")
        reset_settings()
        settings = get_settings()
        assert settings.coset_cap == 2000
        assert settings.data_dir == tmp_path
        assert settings.log_level == "DEBUG"

    def test_cached(self):
        """测试设置被缓存"""
        assert get_settings() is get_settings()

    @pytest.mark.parametrize("raw", ["many", "0", "-5"])
    def test_invalid_integer(self, monkeypatch, raw):
        """测试非正整数被拒绝"""
        monkeypatch.setenv("PITKIT_INDEX_CAP", raw)
        reset_settings()
        with pytest.raises(ValueError):
            get_settings()

    def test_blank_uses_default(self, monkeypatch):
        """测试空字符串使用默认值"""
        monkeypatch.setenv("PITKIT_ISO_BUDGET", " ")
        reset_settings()
        assert get_settings().iso_budget == 100_000
