"""
生成元数据导入
"""

import logging
from pathlib import Path
from typing import Optional, Union

from ..config import BUNDLED_DATA_DIR, get_settings
from ..errors import DataFileMissing, OrderMismatch
from ..perm.group import GeneratedGroup
from ..perm.permutation import read_permutation_file

logger = logging.getLogger(__name__)


def resolve_data_file(name: Union[str, Path]) -> Path:
    """相对路径依次在 PITKIT_DATA_DIR 与随包数据目录中查找"""
    path = Path(name)
    if path.is_absolute() or path.exists():
        return path
    for directory in (get_settings().data_dir, BUNDLED_DATA_DIR):
        candidate = directory / path
        if candidate.exists():
            return candidate
    return get_settings().data_dir / path


def ingest_generators(path: Union[str, Path], expected_order: Optional[int] = None,
                      name: Optional[str] = None) -> GeneratedGroup:
    """
    读取置换文件并构造群，给出期望阶时先校验

    Raises:
        DataFileMissing: 文件不存在
        ParseError: 文件格式错误
        OrderMismatch: 群阶与期望不符
    """
    path = resolve_data_file(path)
    if not path.exists():
        raise DataFileMissing(f"缺少生成元文件 {path.name}", {"path": str(path)})
    degree, perms = read_permutation_file(path)
    group = GeneratedGroup(perms, degree, name=name or path.stem)
    if expected_order is not None and group.order() != expected_order:
        raise OrderMismatch(
            f"{path.name} 生成的群阶为 {group.order()}，期望 {expected_order}",
            {"path": str(path), "order": group.order(), "expected": expected_order},
        )
    logger.info("导入 %s: 次数 %d, 阶 %d", path.name, degree, group.order())
    return group
