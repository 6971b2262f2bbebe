"""Deterministic local-corpus frequency provider.

Documents play the role of web pages: a multiset's count is the number
of documents containing every distinct term at least once (a page
counts once however often a term repeats on it), and the normalizer is
the total term-occurrence mass N = sum over vocabulary of posting-list
sizes, with the document total standing in for the page estimate M.

Corpora are read from a directory of plain-text files (one document
per file) or a JSON-lines file with {"id": ..., "text": ...} records.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from ..errors import DuplicateDocId, EmptyCorpus, MissingFile
from ..snapshot import FrequencySnapshot
from ..terms import Term, TermMultiset

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


def tokenize(text: str) -> list[str]:
    """Canonical tokens: case-folded maximal alphanumeric runs."""
    return [t.casefold() for t in _TOKEN_RE.findall(text)]


@dataclass(frozen=True)
class CorpusIndex:
    """Inverted index over an ingested corpus."""

    postings: Mapping[str, frozenset[str]]
    doc_total: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "postings", MappingProxyType(dict(self.postings)))

    @property
    def documents(self) -> int:
        return self.doc_total

    @property
    def normalizer_n(self) -> int:
        """Total occurrence mass: the sum of posting-list sizes."""
        return sum(len(docs) for docs in self.postings.values())

    def posting(self, term: Term) -> frozenset[str]:
        return self.postings.get(term.text, frozenset())


def ingest_corpus(docs: Iterable[tuple[str, str]]) -> CorpusIndex:
    """Build a CorpusIndex from (doc_id, text) pairs.

    Raises DuplicateDocId on a repeated id and EmptyCorpus when the
    stream yields nothing.
    """
    postings: dict[str, set[str]] = {}
    seen: set[str] = set()
    for doc_id, text in docs:
        if doc_id in seen:
            raise DuplicateDocId(f"document id {doc_id!r} appears more than once")
        seen.add(doc_id)
        for token in set(tokenize(text)):
            postings.setdefault(token, set()).add(doc_id)
    if not seen:
        raise EmptyCorpus("no documents to ingest")
    frozen = {t: frozenset(ids) for t, ids in postings.items()}
    return CorpusIndex(postings=frozen, doc_total=len(seen))


def corpus_count(index: CorpusIndex, x: TermMultiset) -> int:
    """Number of documents containing every distinct term of ``x``.

    Multiplicity never changes the count for this provider.  Terms must
    be single words; the posting index cannot answer phrase membership.
    """
    result: frozenset[str] | None = None
    for term in x.distinct:
        if " " in term.text:
            raise ValueError(
                f"the local-corpus provider indexes single words; got phrase {term.text!r}"
            )
        docs = index.posting(term)
        result = docs if result is None else result & docs
        if not result:
            return 0
    return len(result) if result is not None else 0


def corpus_snapshot(
    index: CorpusIndex,
    queries: Iterable[TermMultiset],
    *,
    source_id: str = "corpus",
    n: int | None = None,
) -> FrequencySnapshot:
    counts = {q: corpus_count(index, q) for q in queries}
    return FrequencySnapshot(
        counts=counts,
        normalizer_n=n if n is not None else index.normalizer_n,
        source_id=source_id,
        page_total_m=index.doc_total,
    )


def load_corpus(path: str | Path) -> Iterator[tuple[str, str]]:
    """Yield (doc_id, text) from a directory of .txt files or a JSONL file."""
    path = Path(path)
    if not path.exists():
        raise MissingFile(f"corpus path {path} does not exist")
    if path.is_dir():
        for doc in sorted(path.iterdir()):
            if doc.is_file():
                yield doc.name, doc.read_text(encoding="utf-8")
        return
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            record = json.loads(line)
            try:
                yield str(record["id"]), str(record["text"])
            except (TypeError, KeyError):
                raise ValueError(
                    f"{path}:{lineno}: expected a JSON object with 'id' and 'text'"
                ) from None
