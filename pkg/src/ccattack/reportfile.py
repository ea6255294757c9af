"""JSON report files: schema tag, config echo, intercepted bits and the attack report."""
from __future__ import annotations

import json
from pathlib import Path

from .attack import AttackConfig, AttackReport

SCHEMA = "ccattack-report/1"


class ReportFormatError(ValueError):
    pass


def dumps(config: AttackConfig, intercepted: str, report: AttackReport, *, timing: bool = False) -> str:
    """Stable text: sorted keys, and no wall clock unless ``timing``, so reruns are byte-identical."""
    doc = {
        "schema": SCHEMA,
        "config": config.to_dict(),
        "intercepted": intercepted,
        "report": report.to_dict(timing=timing),
    }
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def loads(text: str) -> tuple[AttackConfig, str, AttackReport]:
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ReportFormatError(f"unsupported schema {doc.get('schema')!r}")
    return AttackConfig.from_dict(doc["config"]), doc["intercepted"], AttackReport.from_dict(doc["report"])


def write(path, config: AttackConfig, intercepted: str, report: AttackReport, *, timing: bool = False) -> None:
    Path(path).write_text(dumps(config, intercepted, report, timing=timing))


def read(path) -> tuple[AttackConfig, str, AttackReport]:
    return loads(Path(path).read_text())
