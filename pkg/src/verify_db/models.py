# verify_db/models.py
from datetime import datetime, timezone

from sqlalchemy import (
    Column,
    DateTime,
    ForeignKey,
    Index,
    Integer,
    String,
    Text,
)
from sqlalchemy.orm import relationship

from .database import Base


def _now() -> datetime:
    return datetime.now(timezone.utc)


class VerificationRun(Base):
    __tablename__ = "verification_run"

    id_run = Column(Integer, primary_key=True, autoincrement=True)
    scenario = Column(String(100), nullable=False)
    suite = Column(String(50), nullable=False)
    seed = Column(Integer, nullable=False)
    started_at = Column(DateTime, default=_now, nullable=False)
    passed = Column(Integer, default=0, nullable=False)
    failed = Column(Integer, default=0, nullable=False)
    skipped = Column(Integer, default=0, nullable=False)
    report_path = Column(String(300))

    checks = relationship("CheckRecord", back_populates="run", cascade="all, delete-orphan")

    __table_args__ = (
        Index("idx_run_suite", "suite", "started_at"),
        Index("idx_run_scenario", "scenario"),
    )


class CheckRecord(Base):
    __tablename__ = "check_record"

    id_check = Column(Integer, primary_key=True, autoincrement=True)
    id_run = Column(Integer, ForeignKey("verification_run.id_run"), nullable=False)
    check_id = Column(String(120), nullable=False)
    anchor = Column(String(200), nullable=False)
    inputs_digest = Column(String(64))
    status = Column(String(20), nullable=False)   # pass, fail, skipped
    counterexample = Column(Text)
    wall_time = Column(String(32))                # seconds, kept out of the structured report

    run = relationship("VerificationRun", back_populates="checks")

    __table_args__ = (
        Index("idx_check_run", "id_run"),
        Index("idx_check_status", "status"),
    )


class CachedValue(Base):
    __tablename__ = "cached_value"

    key_digest = Column(String(64), primary_key=True)
    operator = Column(String(80), nullable=False)
    value_text = Column(Text, nullable=False)
    created_at = Column(DateTime, default=_now, nullable=False)

    __table_args__ = (
        Index("idx_cache_operator", "operator"),
    )
