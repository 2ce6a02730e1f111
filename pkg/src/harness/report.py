# harness/report.py
"""Suite reports and their human and structured renderings."""
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from .checks import STATUSES, CheckResult

logger = logging.getLogger(__name__)

FORMATS = ("human", "structured")


@dataclass
class Report:
    scenario: str
    scenario_digest: str
    suite: str
    seed: int
    checks: List[CheckResult] = field(default_factory=list)

    def totals(self) -> Dict[str, int]:
        counts = {status: 0 for status in STATUSES}
        for check in self.checks:
            counts[check.status] += 1
        return counts

    @property
    def passed(self) -> bool:
        return self.totals()["fail"] == 0

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "scenario_digest": self.scenario_digest,
            "suite": self.suite,
            "seed": self.seed,
            "totals": self.totals(),
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        """Stable serialization: sorted keys, no timings."""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def to_human(self) -> str:
        totals = self.totals()
        lines = [
            f"suite {self.suite} on {self.scenario} (seed {self.seed})",
            f"scenario digest {self.scenario_digest[:16]}",
            "",
        ]
        if self.checks:
            width = max(len(c.check_id) for c in self.checks)
            lines.append(f"{'status':<8} {'check':<{width}}  anchor")
            lines.append(f"{'-' * 8} {'-' * width}  {'-' * 6}")
            for c in self.checks:
                lines.append(f"{c.status:<8} {c.check_id:<{width}}  {c.anchor}")
        else:
            lines.append("no checks")
        lines.append("")
        lines.append(f"{totals['pass']} passed, {totals['fail']} failed, {totals['skipped']} skipped")

        notes = [c for c in self.checks if c.status == "skipped" and c.note]
        if notes:
            lines.append("")
            lines.append("skipped:")
            lines.extend(f"  {c.check_id}: {c.note}" for c in notes)

        for c in self.failures():
            lines.append("")
            lines.append(f"counterexample for {c.check_id} ({c.anchor}):")
            lines.extend(f"  {line}" for line in (c.counterexample or "").splitlines())
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "structured":
            return self.to_json()
        if fmt == "human":
            return self.to_human()
        raise ValueError(f"unknown report format {fmt!r}, expected one of {', '.join(FORMATS)}")


def emit_report(report: Report, fmt: str = "structured", path: Optional[str] = None) -> Optional[Path]:
    """Write the rendered report to path; without a path the text goes to stdout."""
    text = report.render(fmt)
    if path is None:
        print(text, end="")
        return None
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    logger.debug(f"report written to {target}")
    return target
