"""Pure distance mathematics over frequency snapshots.

With f(x) the page count of a term, f(X) the count of the conjunctive
query for a multiset X, and N the normalizer:

    probability  g(X) = f(X) / N
    code length  G(X) = -log2 g(X)            (+inf when f(X) = 0)
    distance     NGD(X) = (max_x log2 f(x) - log2 f(X))
                          / (log2 N - min_x log2 f(x))

The default denominator maximizes singleton code lengths; the
leave-one-out variant maximizes G(X minus one occurrence) instead and
needs those sub-multiset counts in the snapshot.  Degenerate cases are
pinned down explicitly:

* f(X) = 0 yields exactly |X|-1 (the variant's range cap, 1, for the
  leave-one-out denominator) rather than an infinity.
* a negative numerator - live engines over-count repeated terms - is
  clamped to 0 and flagged, unless clamping is disabled.
* min f(x) = N makes the denominator vanish; the distance is defined
  as 0 and flagged as degenerate.

All functions are pure and safe for concurrent use.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .snapshot import DEFAULT_OPTIONS, DenominatorVariant, FrequencySnapshot, NgdOptions
from .terms import TermLike, TermMultiset

log = logging.getLogger(__name__)


def google_probability(x: TermMultiset, snap: FrequencySnapshot) -> Fraction:
    """f(X)/N as an exact rational."""
    f = snap.checked_count(x)
    return Fraction(f, snap.normalizer_n)


def google_code(x: TermMultiset, snap: FrequencySnapshot) -> float:
    """Code length log2 N - log2 f(X) in bits; +inf when f(X) = 0."""
    g = google_probability(x, snap)
    if g == 0:
        return math.inf
    return -math.log2(g)


@dataclass(frozen=True)
class NgdResult:
    """A distance value plus the diagnostics the computation can raise."""

    value: float
    clamped: bool = False
    degenerate: bool = False

    def __float__(self) -> float:
        return self.value


def ngd(
    x: TermMultiset,
    snap: FrequencySnapshot,
    opts: NgdOptions = DEFAULT_OPTIONS,
) -> NgdResult:
    """Normalized distance of a multiset of at least two terms.

    The result is invariant under permutation of the multiset: counts
    are reduced with integer max/min before any logarithm is taken.
    """
    if len(x) < 2:
        raise ValueError(f"ngd needs a multiset of size >= 2, got {x}")
    n = snap.normalizer_n
    f_x = snap.checked_count(x)
    singles = [snap.checked_count(TermMultiset.of(t)) for t in x.distinct]

    if f_x == 0:
        cap = _range_cap(x, opts)
        return NgdResult(value=float(cap))

    f_max = max(singles)
    if opts.denominator_variant is DenominatorVariant.MAX_LEAVE_ONE_OUT:
        f_den = min(snap.checked_count(x.without(t)) for t in x.distinct)
    else:
        f_den = min(singles)

    if f_den == 0:
        # Inconsistent data (f(X) > 0 under a zero count the denominator
        # maximizes over): the denominator diverges, the limit is 0.
        return NgdResult(value=0.0)
    if f_den == n:
        log.warning(
            "degenerate denominator for %s: smallest count equals N=%d", x.query, n
        )
        return NgdResult(value=0.0, degenerate=True)
    denominator = math.log2(Fraction(n, f_den))

    numerator = math.log2(Fraction(f_max, f_x))
    if numerator < 0 and opts.clamp_negative_numerator:
        return NgdResult(value=0.0, clamped=True)
    return NgdResult(value=numerator / denominator)


def ngd_pairwise(
    x: TermLike,
    y: TermLike,
    snap: FrequencySnapshot,
    opts: NgdOptions = DEFAULT_OPTIONS,
) -> NgdResult:
    """Distance between two terms; identical to ``ngd`` on the pair multiset."""
    return ngd(TermMultiset.of(x, y), snap, opts)


def _range_cap(x: TermMultiset, opts: NgdOptions) -> int:
    if opts.denominator_variant is DenominatorVariant.MAX_LEAVE_ONE_OUT:
        return 1
    return len(x) - 1
