"""Streaming count extraction from Google Books style n-gram files.

Input is the published tab-separated format, one record per line:

    <ngram> TAB <year> TAB <match_count> TAB <volume_count>

Occurrence counts f(x) come from 1-gram files (match_count summed over
years); co-occurrence counts f({x,y}) come from 5-gram files, adding a
line's match_count once for every requested unordered pair whose both
words appear anywhere in the 5-gram, however often they repeat.  Each
file is read in a single streaming pass.  Lines that do not fit the
format (wrong field count, non-integer numbers, wrong gram order for
the file) are skipped, counted, and reported; a missing file is an
error.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import MissingFile
from ..snapshot import FrequencySnapshot
from ..terms import Term, TermMultiset

log = logging.getLogger(__name__)


@dataclass
class NgramScan:
    """Counts extracted from n-gram files plus parse accounting."""

    singleton_counts: dict[TermMultiset, int]
    pair_counts: dict[TermMultiset, int]
    malformed_lines: int
    lines_read: int

    def snapshot(
        self,
        *,
        source_id: str = "ngram",
        n: int | None = None,
        alpha: float | None = None,
    ) -> FrequencySnapshot:
        counts = dict(self.singleton_counts)
        counts.update(self.pair_counts)
        return FrequencySnapshot.build(counts, n=n, alpha=alpha, source_id=source_id)


def _parse_line(line: str, expected_words: int) -> tuple[list[str], int] | None:
    parts = line.rstrip("\n").split("\t")
    if len(parts) < 3:
        return None
    words = parts[0].split(" ")
    if len(words) != expected_words or not all(words):
        return None
    try:
        int(parts[1])  # year
        match_count = int(parts[2])
    except ValueError:
        return None
    if match_count < 0:
        return None
    return [w.casefold() for w in words], match_count


def scan_ngram_files(
    onegram_paths: Sequence[str | Path],
    fivegram_paths: Sequence[str | Path],
    terms: Iterable[Term | str],
) -> NgramScan:
    """One streaming pass per file, collecting all singleton and pair counts."""
    wanted = [t if isinstance(t, Term) else Term(t) for t in terms]
    for t in wanted:
        if " " in t.text:
            raise ValueError(f"n-gram occurrence counts need single-word terms, got {t.text!r}")
    texts = {t.text for t in wanted}

    singles = {TermMultiset.of(t): 0 for t in wanted}
    pairs = {TermMultiset.of(a, b): 0 for a, b in combinations(sorted(set(wanted)), 2)}
    malformed = 0
    lines = 0

    for path in onegram_paths:
        for raw in _open_lines(path):
            lines += 1
            parsed = _parse_line(raw, expected_words=1)
            if parsed is None:
                malformed += 1
                continue
            (word,), match_count = parsed[0], parsed[1]
            if word in texts:
                singles[TermMultiset.of(word)] += match_count

    for path in fivegram_paths:
        for raw in _open_lines(path):
            lines += 1
            parsed = _parse_line(raw, expected_words=5)
            if parsed is None:
                malformed += 1
                continue
            words, match_count = parsed
            present = sorted(texts.intersection(words))
            for a, b in combinations(present, 2):
                pairs[TermMultiset.of(a, b)] += match_count

    if malformed:
        log.warning("skipped %d malformed n-gram line(s) out of %d", malformed, lines)
    return NgramScan(
        singleton_counts=singles,
        pair_counts=pairs,
        malformed_lines=malformed,
        lines_read=lines,
    )


def ngram_counts(
    onegram_paths: Sequence[str | Path],
    fivegram_paths: Sequence[str | Path],
    terms: Iterable[Term | str],
    *,
    source_id: str = "ngram",
    n: int | None = None,
    alpha: float | None = None,
) -> FrequencySnapshot:
    """Pairwise-complete snapshot over ``terms`` from n-gram files."""
    scan = scan_ngram_files(onegram_paths, fivegram_paths, terms)
    return scan.snapshot(source_id=source_id, n=n, alpha=alpha)


def _open_lines(path: str | Path):
    path = Path(path)
    if not path.exists():
        raise MissingFile(f"n-gram file {path} does not exist")
    with path.open(encoding="utf-8") as fh:
        yield from fh
