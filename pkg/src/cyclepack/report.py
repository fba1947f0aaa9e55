"""Rendering and persistence of verification reports."""

import logging
import os
import tempfile
from pathlib import Path

from filelock import FileLock, Timeout

from cyclepack.exceptions import SummaryWriteError
from cyclepack.verifier import Outcome, VerificationReport

logger = logging.getLogger(__name__)

LOCK_TIMEOUT_SECONDS = 5


def summary_header(report: VerificationReport) -> str:
    """One comment line identifying the check, its seed and the outcome counts."""
    seed = "none" if report.seed is None else str(report.seed)
    counts = " ".join(f"{o.value}={report.count(o)}" for o in Outcome)
    return (
        f"# theorem={report.theorem.value} k={report.k} mode={report.mode.value} "
        f"seed={seed} total={report.total} {counts}"
    )


def render_machine(report: VerificationReport) -> list[str]:
    """
    Machine-readable lines: a header, then one tab-separated line per counterexample.

    Example:
        # theorem=T1 k=2 mode=exhaustive seed=none total=3 pass=3 ...
        E~~w<TAB>T1<TAB>δ=4 ≥ 4, but packer returned ...
    """
    lines = [summary_header(report)]
    for record in report.counterexamples:
        lines.append(f"{record.graph6}\t{report.theorem.value}\t{record.reason}")
    return lines


def render_text(report: VerificationReport, show_exceptional: bool = True) -> str:
    """Human-readable report."""
    seed = f", seed {report.seed}" if report.seed is not None else ""
    status = "PASSED" if report.passed else "FAILED"
    lines = [
        f"{report.theorem.value} (k={report.k}, {report.mode.value}{seed}): {status}",
        f"  graphs checked: {report.total}",
    ]
    for outcome in Outcome:
        if report.count(outcome):
            lines.append(f"  {outcome.value}: {report.count(outcome)}")
    for record in report.counterexamples:
        lines.append(f"  counterexample {record.graph6}: {record.reason}")
    if show_exceptional:
        for record in report.exceptional:
            lines.append(f"  exceptional {record.graph6}: {record.reason}")
    for record in report.skipped:
        lines.append(f"  skipped {record.graph6}: {record.reason}")
    return "\n".join(lines)


def write_summary(path: Path | str, report: VerificationReport) -> Path:
    """
    Append a report's machine-readable lines to a summary file.

    Several verification processes may share one summary file; each append
    happens under a file lock and replaces the file atomically.

    Args:
        path: Summary file (created if missing)
        report: Report to append

    Returns:
        The summary file path

    Raises:
        SummaryWriteError: If the lock cannot be acquired or the write fails
    """
    file_path = Path(path)
    lock_path = file_path.parent / f"{file_path.name}.lock"
    lines = render_machine(report)

    try:
        file_path.parent.mkdir(parents=True, exist_ok=True)
        with FileLock(lock_path, timeout=LOCK_TIMEOUT_SECONDS):
            existing = file_path.read_text(encoding="utf-8") if file_path.exists() else ""
            if existing and not existing.endswith("\n"):
                existing += "\n"
            with tempfile.NamedTemporaryFile(
                mode="w",
                encoding="utf-8",
                dir=file_path.parent,
                delete=False,
                suffix=".tmp",
            ) as tmp_file:
                tmp_file.write(existing)
                tmp_file.write("\n".join(lines) + "\n")
                tmp_path = tmp_file.name
            os.replace(tmp_path, file_path)
    except Timeout as e:
        logger.error(f"Lock timeout writing summary {file_path}")
        raise SummaryWriteError(
            "Lock timeout while writing summary; another process may hold it", str(file_path)
        ) from e
    except OSError as e:
        logger.error(f"Failed to write summary {file_path}: {e}")
        raise SummaryWriteError(f"Failed to write summary: {e}", str(file_path)) from e

    logger.info(
        f"Appended {report.theorem.value} summary ({len(report.counterexamples)} counterexamples) "
        f"to {file_path}"
    )
    return file_path
