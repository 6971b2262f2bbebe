"""Frequency snapshots: the immutable count tables distances are computed from.

A snapshot maps canonical term multisets to page/occurrence counts and
carries the normalizer N.  N defaults follow the usual estimation chain:
an explicit value wins, then a reported page total M (times the
terms-per-page factor alpha when one is supplied), then the largest
observed singleton count times ``DEFAULT_ALPHA``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Mapping

from .errors import InvalidNormalizer, MissingCount
from .terms import TermMultiset

# Average number of search terms on a page, used when only a page-total
# style estimate (largest singleton count) is available.
DEFAULT_ALPHA = 1000


class DenominatorVariant(Enum):
    """Which code lengths the distance denominator maximizes over."""

    MAX_SINGLETON = "max-singleton"
    MAX_LEAVE_ONE_OUT = "max-leave-one-out"


@dataclass(frozen=True)
class NgdOptions:
    denominator_variant: DenominatorVariant = DenominatorVariant.MAX_SINGLETON
    clamp_negative_numerator: bool = True
    log_base: int = 2

    def __post_init__(self) -> None:
        if self.log_base != 2:
            raise ValueError("the distance is defined with the binary logarithm")


DEFAULT_OPTIONS = NgdOptions()


def derive_normalizer(
    counts: Mapping[TermMultiset, int],
    n: int | None = None,
    page_total_m: int | None = None,
    alpha: float | None = None,
) -> int:
    """Resolve N: explicit value, then M (times alpha if given), then
    max singleton count times DEFAULT_ALPHA."""
    if n is not None:
        return int(n)
    if page_total_m is not None:
        return int(page_total_m * alpha) if alpha is not None else int(page_total_m)
    singles = [c for x, c in counts.items() if len(x) == 1]
    top = max(singles, default=0)
    if top <= 0:
        raise InvalidNormalizer(
            "cannot derive a normalizer: no positive singleton count and no explicit N or M"
        )
    return top * DEFAULT_ALPHA


@dataclass(frozen=True)
class FrequencySnapshot:
    """Immutable mapping from queried multisets to counts, plus the normalizer."""

    counts: Mapping[TermMultiset, int]
    normalizer_n: int
    source_id: str = "unknown"
    page_total_m: int | None = None
    terms_per_page_alpha: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", MappingProxyType(dict(self.counts)))
        if self.normalizer_n <= 0:
            raise InvalidNormalizer(f"normalizer N must be positive, got {self.normalizer_n}")
        for x, c in self.counts.items():
            if c < 0:
                raise ValueError(f"negative count {c} for {x.query!r}")

    @classmethod
    def build(
        cls,
        counts: Mapping[TermMultiset, int],
        *,
        n: int | None = None,
        page_total_m: int | None = None,
        alpha: float | None = None,
        source_id: str = "unknown",
    ) -> "FrequencySnapshot":
        return cls(
            counts=counts,
            normalizer_n=derive_normalizer(counts, n, page_total_m, alpha),
            source_id=source_id,
            page_total_m=page_total_m,
            terms_per_page_alpha=alpha,
        )

    def count(self, x: TermMultiset) -> int:
        try:
            return self.counts[x]
        except KeyError:
            raise MissingCount(x.query, self.source_id) from None

    def has(self, x: TermMultiset) -> bool:
        return x in self.counts

    def checked_count(self, x: TermMultiset) -> int:
        """Count of ``x`` validated against N (data errors are never silent)."""
        c = self.count(x)
        if c > self.normalizer_n:
            raise InvalidNormalizer(
                f"count {c} for {x.query!r} exceeds normalizer N={self.normalizer_n} "
                f"(source {self.source_id!r})"
            )
        return c
