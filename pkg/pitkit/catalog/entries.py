"""
内置目录
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

import yaml
from pydantic import ValidationError

from ..errors import ParseError
from ..models import CatalogEntry
from .ingest import resolve_data_file

logger = logging.getLogger(__name__)

CATALOG_FILE = "catalog.yaml"


def load_catalog(path: Union[str, Path]) -> List[CatalogEntry]:
    """
    读取 YAML 目录

    Raises:
        ParseError: YAML 语法错误或条目字段不合法
    """
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except yaml.YAMLError as e:
        raise ParseError(f"目录文件 {path.name} 不是合法 YAML: {e}")
    entries = []
    for raw in data.get("entries", []):
        try:
            entries.append(CatalogEntry(**raw))
        except ValidationError as e:
            raise ParseError(f"目录条目 {raw.get('id')!r} 字段不合法", {"errors": e.errors()})
    ids = [e.id for e in entries]
    duplicated = sorted({i for i in ids if ids.count(i) > 1})
    if duplicated:
        raise ParseError(f"目录条目 id 重复: {duplicated}")
    logger.debug("读取目录 %s: %d 个条目", path, len(entries))
    return entries


def builtin_catalog() -> List[CatalogEntry]:
    """PITKIT_DATA_DIR 中的 catalog.yaml，没有时用随包版本"""
    return load_catalog(resolve_data_file(CATALOG_FILE))


def select_entries(entries: List[CatalogEntry], only: Optional[List[str]] = None,
                   include_slow: bool = False) -> List[CatalogEntry]:
    """按 id 筛选；显式指定的条目即使是慢条目也保留"""
    if only:
        wanted = set(only)
        unknown = wanted - {e.id for e in entries}
        if unknown:
            raise ParseError(f"目录中没有条目 {sorted(unknown)}")
        return [e for e in entries if e.id in wanted]
    return [e for e in entries if include_slow or not e.slow]
