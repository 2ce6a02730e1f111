# verify_db/database.py
from contextlib import contextmanager
from typing import Iterator, Optional

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine
from sqlalchemy.orm import Session, declarative_base, sessionmaker
from sqlalchemy.pool import StaticPool

# Declarative base shared by all models
Base = declarative_base()

_engine: Optional[Engine] = None
_session_factory: Optional[sessionmaker] = None


def init_db(uri: str, echo: bool = False) -> Engine:
    """Bind the module-level engine and create all tables."""
    global _engine, _session_factory
    options = {}
    if uri.startswith("sqlite"):
        # harness workers share the engine
        options["connect_args"] = {"check_same_thread": False}
        if ":memory:" in uri:
            options["poolclass"] = StaticPool
    _engine = create_engine(uri, echo=echo, future=True, **options)
    _session_factory = sessionmaker(bind=_engine, expire_on_commit=False)
    Base.metadata.create_all(_engine)
    return _engine


def get_session() -> Session:
    """New session on the configured engine"""
    if _session_factory is None:
        raise RuntimeError("database not initialized, call init_db first")
    return _session_factory()


@contextmanager
def session_scope() -> Iterator[Session]:
    """Commit on success, roll back on error"""
    session = get_session()
    try:
        yield session
        session.commit()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()
