import asyncio
import logging
import multiprocessing
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence

import pandas as pd

from audit.models import AuditMeta, AuditReport, TheoremReport
from audit.registry import resolve_suite_filter, suites_for
from enumeration import ConcreteGroup
from families import CorpusEntry
from kernel import DEFAULT_MAX_ORDER

logger = logging.getLogger(__name__)

VERDICT_COLUMNS = ["holds", "fails", "not-applicable", "error"]


def audit_group(g: ConcreteGroup, label: str, theorems: Sequence[str], max_order: int) -> List[TheoremReport]:
    """Run every suite covering ``theorems`` on one group."""
    reports = []
    for suite in suites_for(theorems, max_order):
        reports.extend(r for r in suite.run(g, label) if r.theorem in theorems)
    return reports


def _error_reports(label: str, theorems: Sequence[str], message: str) -> List[TheoremReport]:
    return [TheoremReport(theorem=t, label=label, verdict="error", message=message) for t in theorems]


def summarize(reports: Sequence[TheoremReport]) -> Dict[str, Dict[str, int]]:
    """Verdict counts per theorem id, every verdict column present."""
    if not reports:
        return {}
    df = pd.DataFrame([{"theorem": r.theorem, "verdict": r.verdict} for r in reports])
    counts = pd.crosstab(df["theorem"], df["verdict"]).reindex(columns=VERDICT_COLUMNS, fill_value=0)
    return {
        theorem: {verdict: int(n) for verdict, n in row.items()}
        for theorem, row in counts.sort_index().iterrows()
    }


def _audit_worker(conn, g: ConcreteGroup, label: str, theorems: Sequence[str], max_order: int):
    try:
        conn.send(("ok", audit_group(g, label, theorems, max_order)))
    except Exception as e:
        conn.send(("error", f"{type(e).__name__}: {str(e)}"))
    finally:
        conn.close()


def audit_in_subprocess(
    entry: CorpusEntry, theorems: Sequence[str], max_order: int, timeout: float
) -> List[TheoremReport]:
    """Audit one group in a child process that is terminated once ``timeout`` expires.

    Raises:
        TimeoutError: the child produced no result in time
        RuntimeError: the child raised, or died without a result
    """
    receiver, sender = multiprocessing.Pipe(duplex=False)
    process = multiprocessing.Process(
        target=_audit_worker,
        args=(sender, entry.group, entry.label, list(theorems), max_order),
        daemon=True,
    )
    process.start()
    sender.close()
    try:
        if not receiver.poll(timeout):
            raise TimeoutError(f"timed out after {timeout}s")
        status, payload = receiver.recv()
    except EOFError:
        raise RuntimeError("worker exited before reporting")
    finally:
        if process.is_alive():
            process.terminate()
        process.join()
        receiver.close()
    if status == "error":
        raise RuntimeError(payload)
    return payload


async def audit_corpus(
    corpus: Sequence[CorpusEntry],
    suite_filter: Optional[Sequence[str]] = None,
    jobs: int = 1,
    timeout: float = 30.0,
    max_order: int = DEFAULT_MAX_ORDER,
    batch_size: int = 16,
    corpus_caps: Optional[Dict[int, int]] = None,
) -> AuditReport:
    """Audit every corpus group against the selected theorem suites.

    Args:
        corpus: Labelled groups to audit
        suite_filter: Theorem ids to run; all of them when empty
        jobs: Groups audited at the same time, each in its own child process
        timeout: Per-group wall-clock limit in seconds; the child is terminated when it expires
        max_order: Subgroup lattice cap handed to every suite
        batch_size: Upper bound on groups submitted together; never more than ``jobs``
        corpus_caps: Per-prime order caps the corpus was built with, recorded in the report

    Returns:
        AuditReport with reports ordered by label, then theorem id
    """
    theorems = resolve_suite_filter(suite_filter)
    loop = asyncio.get_running_loop()
    step = max(1, min(batch_size, jobs))
    # one waiting thread per running child process
    executor = ThreadPoolExecutor(max_workers=step)
    reports: List[TheoremReport] = []

    async def process_entry(entry: CorpusEntry):
        try:
            result = await loop.run_in_executor(
                executor, audit_in_subprocess, entry, theorems, max_order, timeout
            )
            reports.extend(result)
            failing = [r.theorem for r in result if r.verdict == "fails"]
            logger.info(f"[{entry.label}] audited {len(result)} statements, fails: {failing or 'none'}")
        except TimeoutError:
            logger.error(f"[{entry.label}] audit timed out after {timeout}s")
            reports.extend(_error_reports(entry.label, theorems, f"timed out after {timeout}s"))
        except Exception as e:
            logger.error(f"[{entry.label}] Error auditing group: {str(e)}")
            reports.extend(_error_reports(entry.label, theorems, str(e)))

    try:
        for i in range(0, len(corpus), step):
            batch = corpus[i:i + step]
            await asyncio.gather(*(process_entry(entry) for entry in batch))
    finally:
        executor.shutdown(wait=True)

    reports.sort(key=lambda r: (r.label, r.theorem))
    meta = AuditMeta(
        corpus_caps={str(p): cap for p, cap in sorted((corpus_caps or {}).items())},
        suite_filter=list(suite_filter or []),
        corpus_size=len(corpus),
    )
    return AuditReport(meta=meta, reports=reports, summary=summarize(reports))


def run_all(corpus: Sequence[CorpusEntry], suite_filter: Optional[Sequence[str]] = None, jobs: int = 1, **kwargs) -> AuditReport:
    return asyncio.run(audit_corpus(corpus, suite_filter, jobs, **kwargs))
