"""Persistent, append-only query cache.

One record per line, four tab-separated fields, UTF-8:

    <ISO-8601 timestamp>\t<source_id>\t<canonical query>\t<count>

The canonical query is the multiset's terms joined by " AND " in
canonical order.  The file is append-only; for a (source_id, query)
pair the latest record wins, so replaying the file reconstructs a
snapshot bit-exactly.  A lock serializes appends (single writer, many
readers).
"""

from __future__ import annotations

import threading
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterator

from ..snapshot import FrequencySnapshot
from ..terms import TermMultiset


def _utc_now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


class CacheFile:
    """Replayable on-disk cache of provider counts."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._counts: dict[tuple[str, str], int] = {}
        if self.path.exists():
            for source_id, query, count in self._iter_records():
                self._counts[(source_id, query)] = count

    def _iter_records(self) -> Iterator[tuple[str, str, int]]:
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                parts = line.split("\t")
                if len(parts) != 4:
                    raise ValueError(f"{self.path}:{lineno}: expected 4 tab-separated fields")
                _, source_id, query, count = parts
                yield source_id, query, int(count)

    def get(self, source_id: str, x: TermMultiset) -> int | None:
        return self._counts.get((source_id, x.query))

    def append(self, source_id: str, x: TermMultiset, count: int, timestamp: str | None = None) -> None:
        if count < 0:
            raise ValueError(f"count must be nonnegative, got {count}")
        record = f"{timestamp or _utc_now()}\t{source_id}\t{x.query}\t{count}\n"
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(record)
            self._counts[(source_id, x.query)] = count

    def source_ids(self) -> tuple[str, ...]:
        return tuple(sorted({sid for sid, _ in self._counts}))

    def counts_for(self, source_id: str) -> dict[TermMultiset, int]:
        return {
            TermMultiset.from_query(query): count
            for (sid, query), count in self._counts.items()
            if sid == source_id
        }

    def snapshot(
        self,
        source_id: str,
        *,
        n: int | None = None,
        page_total_m: int | None = None,
        alpha: float | None = None,
    ) -> FrequencySnapshot:
        """Reconstruct the full snapshot recorded for one source."""
        return FrequencySnapshot.build(
            self.counts_for(source_id),
            n=n,
            page_total_m=page_total_m,
            alpha=alpha,
            source_id=source_id,
        )

    def __len__(self) -> int:
        return len(self._counts)
