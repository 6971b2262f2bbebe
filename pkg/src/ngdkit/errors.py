"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: provider/transport failures are
exit 2, data inconsistencies (a normalizer smaller than an observed
count, degenerate matrices, broken corpora) are exit 3.
"""

from __future__ import annotations


class NgdError(Exception):
    """Base class for every error raised by this package."""


class MissingCount(NgdError):
    """A required frequency count is absent from the snapshot or provider."""

    def __init__(self, query: str, source_id: str | None = None):
        self.query = query
        self.source_id = source_id
        where = f" in {source_id!r}" if source_id else ""
        super().__init__(f"no count recorded for query {query!r}{where}")


class InvalidNormalizer(NgdError):
    """The normalizer N is smaller than an observed count (or not positive)."""


class ProviderError(NgdError):
    """Base class for count-provider failures."""


class BudgetExhausted(ProviderError):
    """The daily query budget would be exceeded; the query was not issued."""


class TransportFailure(ProviderError):
    """The provider was unreachable after the configured retries."""


class ParseFailure(ProviderError):
    """A provider response did not contain a recognizable result count."""


class MissingFile(ProviderError):
    """An input file (n-gram shard, corpus, cache) does not exist."""


class DuplicateDocId(NgdError):
    """Two corpus documents share an id."""


class EmptyCorpus(NgdError):
    """Corpus ingestion received no documents."""


class AllEqualMatrix(NgdError):
    """Every off-diagonal distance is identical; the gap statistic is undefined."""
