"""Search terms and finite multisets of them.

A term is a word or quoted phrase as it would be submitted to a search
engine.  Terms are canonicalized on construction (case-folded, internal
whitespace collapsed) so that equality and ordering are well defined.
A :class:`TermMultiset` is the argument of every distance in this
package; repeated terms are kept because engines count them
differently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

QUERY_JOINER = " AND "


def canonical_text(text: str) -> str:
    """Case-fold and collapse internal whitespace; reject empty input."""
    folded = " ".join(text.casefold().split())
    if not folded:
        raise ValueError("a term must contain at least one non-space character")
    return folded


@dataclass(frozen=True, order=True)
class Term:
    """A single search term in canonical form."""

    text: str

    def __init__(self, text: str):
        object.__setattr__(self, "text", canonical_text(text))

    def __str__(self) -> str:
        return self.text


TermLike = Union[Term, str]


def _as_term(value: TermLike) -> Term:
    return value if isinstance(value, Term) else Term(value)


@dataclass(frozen=True)
class TermMultiset:
    """A finite nonempty multiset of terms, stored in canonical order.

    Two multisets built from the same terms in any order compare equal;
    duplicates are kept adjacent.  Instances are hashable and usable as
    snapshot keys.
    """

    items: tuple[Term, ...]

    def __init__(self, items: Iterable[TermLike]):
        terms = tuple(sorted(_as_term(t) for t in items))
        if not terms:
            raise ValueError("a term multiset must be nonempty")
        object.__setattr__(self, "items", terms)

    @classmethod
    def of(cls, *items: TermLike) -> "TermMultiset":
        return cls(items)

    @classmethod
    def from_query(cls, query: str) -> "TermMultiset":
        """Inverse of :attr:`query` (terms joined by ``" AND "``)."""
        return cls(query.split(QUERY_JOINER))

    @property
    def query(self) -> str:
        """Canonical query string: term texts joined by ``" AND "``.

        Unambiguous because canonical term text is case-folded and can
        never contain the upper-case joiner.
        """
        return QUERY_JOINER.join(t.text for t in self.items)

    @property
    def distinct(self) -> tuple[Term, ...]:
        seen: dict[Term, None] = {}
        for t in self.items:
            seen.setdefault(t)
        return tuple(seen)

    def without(self, term: TermLike) -> "TermMultiset":
        """Remove one occurrence of ``term`` (the leave-one-out multiset)."""
        term = _as_term(term)
        items = list(self.items)
        try:
            items.remove(term)
        except ValueError:
            raise KeyError(f"{term.text!r} is not in the multiset") from None
        return TermMultiset(items)

    def union(self, other: Union["TermMultiset", Iterable[TermLike]]) -> "TermMultiset":
        extra = other.items if isinstance(other, TermMultiset) else tuple(other)
        return TermMultiset(self.items + tuple(_as_term(t) for t in extra))

    def add(self, term: TermLike) -> "TermMultiset":
        return TermMultiset(self.items + (_as_term(term),))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.items)

    def __contains__(self, term: object) -> bool:
        if isinstance(term, str):
            term = Term(term)
        return term in self.items

    def __str__(self) -> str:
        return "{" + ", ".join(t.text for t in self.items) + "}"
