"""
数据库连接管理

URL 取自设置中的 DATABASE_URL；引擎在首次使用时创建
"""

import logging
import os
from contextlib import contextmanager
from typing import Generator, Optional

from sqlalchemy import create_engine, event
from sqlalchemy.engine import Engine
from sqlalchemy.orm import Session, declarative_base, sessionmaker

from ..config import get_settings

logger = logging.getLogger(__name__)

Base = declarative_base()

_engine: Optional[Engine] = None
_session_factory: Optional[sessionmaker] = None


def _make_engine(url: str) -> Engine:
    if url.startswith("sqlite"):
        engine = create_engine(
            url,
            connect_args={"check_same_thread": False},
            echo=os.environ.get("SQL_DEBUG", "").lower() == "true",
        )

        # 启用 SQLite 外键约束
        @event.listens_for(engine, "connect")
        def set_sqlite_pragma(dbapi_connection, connection_record):
            cursor = dbapi_connection.cursor()
            cursor.execute("PRAGMA foreign_keys=ON")
            cursor.close()

        return engine
    return create_engine(url, pool_size=5, max_overflow=10)


def configure(url: Optional[str] = None) -> Engine:
    """(重新) 创建引擎与 Session 工厂"""
    global _engine, _session_factory
    url = url or get_settings().database_url
    if _engine is not None:
        _engine.dispose()
    _engine = _make_engine(url)
    _session_factory = sessionmaker(autocommit=False, autoflush=False, bind=_engine)
    return _engine


def get_engine() -> Engine:
    if _engine is None:
        configure()
    return _engine


def init_db(url: Optional[str] = None):
    """创建所有表"""
    url = url or (str(_engine.url) if _engine is not None else get_settings().database_url)
    if url.startswith("sqlite:///") and ":memory:" not in url:
        db_dir = os.path.dirname(url.replace("sqlite:///", ""))
        if db_dir:
            os.makedirs(db_dir, exist_ok=True)
    if _engine is None or str(_engine.url) != url:
        configure(url)

    from . import models  # noqa

    Base.metadata.create_all(bind=_engine)
    logger.info("数据库已初始化: %s", url)


@contextmanager
def session_scope() -> Generator[Session, None, None]:
    """
    会话上下文管理器

    Usage:
        with session_scope() as session:
            VerificationRepository(session).create_run(...)
    """
    get_engine()
    session = _session_factory()
    try:
        yield session
        session.commit()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()


def drop_all_tables():
    """删除所有表（仅用于测试）"""
    Base.metadata.drop_all(bind=get_engine())
