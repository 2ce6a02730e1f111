# verify_db/services/run_service.py

from typing import List, Optional

from sqlalchemy import delete, select
from sqlalchemy.orm import Session, selectinload

from ..models import CheckRecord, VerificationRun


class RunService:
    """Verification history: one run per suite execution, one record per check"""

    @staticmethod
    def record_run(session: Session, report, report_path: Optional[str] = None) -> VerificationRun:
        """Persist a harness Report together with its check records"""
        totals = report.totals()
        run = VerificationRun(
            scenario=report.scenario,
            suite=report.suite,
            seed=report.seed,
            passed=totals["pass"],
            failed=totals["fail"],
            skipped=totals["skipped"],
            report_path=report_path,
        )
        session.add(run)
        session.flush()
        for check in report.checks:
            session.add(
                CheckRecord(
                    id_run=run.id_run,
                    check_id=check.check_id,
                    anchor=check.anchor,
                    inputs_digest=check.inputs_digest,
                    status=check.status,
                    counterexample=check.counterexample,
                    wall_time=f"{check.wall_time:.3f}",
                )
            )
        session.flush()
        return run

    @staticmethod
    def get_run(session: Session, id_run: int, load_checks: bool = False) -> Optional[VerificationRun]:
        stmt = select(VerificationRun).where(VerificationRun.id_run == id_run)
        if load_checks:
            stmt = stmt.options(selectinload(VerificationRun.checks))
        return session.execute(stmt).scalar_one_or_none()

    @staticmethod
    def list_runs(
        session: Session,
        suite: Optional[str] = None,
        scenario: Optional[str] = None,
        limit: int = 20,
    ) -> List[VerificationRun]:
        """Most recent runs first, optionally filtered"""
        stmt = select(VerificationRun)
        if suite:
            stmt = stmt.where(VerificationRun.suite == suite)
        if scenario:
            stmt = stmt.where(VerificationRun.scenario == scenario)
        stmt = stmt.order_by(VerificationRun.started_at.desc(), VerificationRun.id_run.desc()).limit(limit)
        return list(session.execute(stmt).scalars().all())

    @staticmethod
    def failing_checks(session: Session, id_run: int) -> List[CheckRecord]:
        stmt = (
            select(CheckRecord)
            .where(CheckRecord.id_run == id_run, CheckRecord.status == "fail")
            .order_by(CheckRecord.check_id)
        )
        return list(session.execute(stmt).scalars().all())

    @staticmethod
    def delete_run(session: Session, id_run: int) -> bool:
        run = session.get(VerificationRun, id_run)
        if run is None:
            return False
        session.execute(delete(CheckRecord).where(CheckRecord.id_run == id_run))
        session.delete(run)
        session.flush()
        return True
