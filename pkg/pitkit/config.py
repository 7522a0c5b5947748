"""
运行时配置

从环境变量（以及可选的 .env 文件）读取各类上限与路径。
"""

import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv

BUNDLED_DATA_DIR = Path(__file__).resolve().parent / "data"


@dataclass(frozen=True)
class Settings:
    """全局设置（进程内只读）"""
    coset_cap: int = 1_000_000
    small_group_cap: int = 10_000
    iso_budget: int = 100_000
    lift_budget: int = 1_000_000
    index_cap: int = 512
    data_dir: Path = BUNDLED_DATA_DIR
    database_url: str = "sqlite:///./data/pitkit.db"
    log_level: str = "WARNING"


def _int_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.replace("_", ""))
    except ValueError:
        raise ValueError(f"环境变量 {name} 不是整数: {raw!r}")
    if value <= 0:
        raise ValueError(f"环境变量 {name} 必须为正: {value}")
    return value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """读取设置（首次调用时加载 .env）"""
    load_dotenv()
    data_dir = os.environ.get("PITKIT_DATA_DIR")
    return Settings(
        coset_cap=_int_env("PITKIT_COSET_CAP", 1_000_000),
        small_group_cap=_int_env("PITKIT_SMALL_GROUP_CAP", 10_000),
        iso_budget=_int_env("PITKIT_ISO_BUDGET", 100_000),
        lift_budget=_int_env("PITKIT_LIFT_BUDGET", 1_000_000),
        index_cap=_int_env("PITKIT_INDEX_CAP", 512),
        data_dir=Path(data_dir) if data_dir else BUNDLED_DATA_DIR,
        database_url=os.environ.get("DATABASE_URL", "sqlite:///./data/pitkit.db"),
        log_level=os.environ.get("PITKIT_LOG_LEVEL", "WARNING").upper(),
    )


def reset_settings() -> None:
    """清除缓存（测试中修改环境变量后使用）"""
    get_settings.cache_clear()
