"""Degree sequences: parsing, formatting, laying off and graphicality.

Sequences are kept non-increasing.  Positions in the public API are
1-based (``d(1)`` is the largest term), matching the usual ``d_1 >= ... >= d_n``
convention in the degree-sequence literature.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, groupby
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "DegreeSequence",
    "SequenceParseError",
    "LayOffError",
    "SequenceStats",
    "parse_sequence",
    "format_sequence",
    "sequence_stats",
    "lay_off",
    "is_graphic",
    "path_cycle_check",
    "enumerate_graphic",
]

_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


class SequenceParseError(ValueError):
    """Raised for a malformed token in a sequence literal."""

    def __init__(self, token: str, reason: str):
        super().__init__(f"bad sequence token {token!r}: {reason}")
        self.token = token


class LayOffError(ValueError):
    """A lay-off would push a term below zero (or past the end of the sequence)."""


@dataclass(frozen=True)
class DegreeSequence:
    """An immutable non-increasing sequence of nonnegative integers.

    Terms passed in any order are sorted on construction, so
    ``DegreeSequence([2, 3, 3]) == DegreeSequence([3, 3, 2])``.
    """

    terms: tuple[int, ...]

    def __init__(self, terms: Iterable[int] = ()):
        terms = tuple(int(x) for x in terms)
        if any(x < 0 for x in terms):
            raise ValueError(f"negative term in {terms}")
        object.__setattr__(self, "terms", tuple(sorted(terms, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> DegreeSequence:
        return parse_sequence(text)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __getitem__(self, index):
        return self.terms[index]

    def __str__(self) -> str:
        return format_sequence(self)

    def __repr__(self) -> str:
        return f"DegreeSequence({format_sequence(self)!r})"

    @property
    def n(self) -> int:
        return len(self.terms)

    def d(self, j: int) -> int:
        """Term at 1-based position ``j``."""
        if not 1 <= j <= len(self.terms):
            raise IndexError(f"position {j} outside 1..{len(self.terms)}")
        return self.terms[j - 1]

    @property
    def sigma(self) -> int:
        return sum(self.terms)

    @property
    def is_positive(self) -> bool:
        return all(x >= 1 for x in self.terms)


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``"6,6,4^3,3^2"`` style text into a sorted :class:`DegreeSequence`.

    Tokens are separated by commas and/or whitespace; ``r^t`` repeats ``r``
    ``t`` times.  Surrounding parentheses are tolerated.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    terms: list[int] = []
    for token in re.split(r"[\s,]+", body.strip()):
        if not token:
            continue
        match = _TOKEN.match(token)
        if match is None:
            if token.startswith("-"):
                raise SequenceParseError(token, "negative degree")
            raise SequenceParseError(token, "expected d or d^t")
        value = int(match.group(1))
        count = 1 if match.group(2) is None else int(match.group(2))
        if count == 0:
            raise SequenceParseError(token, "exponent must be at least 1")
        terms.extend([value] * count)
    return DegreeSequence(terms)


def format_sequence(seq: DegreeSequence | Iterable[int]) -> str:
    parts = []
    for value, run in groupby(seq):
        count = sum(1 for _ in run)
        parts.append(str(value) if count == 1 else f"{value}^{count}")
    return " ".join(parts)


class SequenceStats(NamedTuple):
    sigma: int
    m: int
    h: int
    n: int


def sequence_stats(seq: DegreeSequence) -> SequenceStats:
    """Sum, largest positive term, smallest positive term and length.

    ``m`` and ``h`` are 0 when the sequence has no positive term.
    """
    positive = [x for x in seq if x > 0]
    return SequenceStats(
        sigma=seq.sigma,
        m=max(positive, default=0),
        h=min(positive, default=0),
        n=len(seq),
    )


def _lay_off_terms(terms: tuple[int, ...], k: int) -> tuple[int, ...]:
    # terms is non-increasing; k is 1-based
    n = len(terms)
    dk = terms[k - 1]
    out = list(terms)
    if dk >= k:
        if dk + 1 > n:
            raise LayOffError(f"d_{k}={dk} exceeds the {n - 1} other terms")
        targets = [*range(0, k - 1), *range(k, dk + 1)]
    else:
        targets = range(0, dk)
    for j in targets:
        if out[j] == 0:
            raise LayOffError(f"laying off d_{k}={dk} drives d_{j + 1} below zero")
        out[j] -= 1
    del out[k - 1]
    out.sort(reverse=True)
    return tuple(out)


def lay_off(seq: DegreeSequence, k: int | None = None) -> DegreeSequence:
    """Residual sequence from laying off the term at 1-based position ``k``.

    The ``d_k`` largest other terms are each reduced by one, position ``k`` is
    removed and the result re-sorted.  ``k`` defaults to ``n`` (the smallest
    term).

    Raises:
        IndexError: ``k`` outside ``1..n``.
        LayOffError: some term would become negative, i.e. ``seq`` is not
            graphic.
    """
    n = len(seq)
    if k is None:
        k = n
    if not 1 <= k <= n:
        raise IndexError(f"lay-off position {k} outside 1..{n}")
    return DegreeSequence(_lay_off_terms(seq.terms, k))


def _erdos_gallai_raw(terms: tuple[int, ...]) -> bool:
    n = len(terms)
    total = sum(terms)
    if total % 2:
        return False
    if n and terms[0] > n - 1:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += terms[k - 1]
        rhs = k * (k - 1)
        for x in terms[k:]:
            rhs += x if x < k else k
        if prefix > rhs:
            return False
    return True


_erdos_gallai = lru_cache(maxsize=1 << 16)(_erdos_gallai_raw)


@lru_cache(maxsize=1 << 16)
def _kleitman_wang(terms: tuple[int, ...]) -> bool:
    while terms:
        try:
            terms = _lay_off_terms(terms, len(terms))
        except LayOffError:
            return False
    return True


def is_graphic(seq: DegreeSequence | Iterable[int], method: str = "erdos_gallai") -> bool:
    """True iff ``seq`` is the degree sequence of a simple graph.

    ``method`` is ``"erdos_gallai"`` (inequality test) or ``"kleitman_wang"``
    (repeatedly lay off the last term until the sequence is empty).
    """
    if isinstance(seq, DegreeSequence):
        terms = seq.terms
    else:
        terms = tuple(sorted(seq, reverse=True))
    if method == "erdos_gallai":
        return _erdos_gallai(terms)
    if method == "kleitman_wang":
        return _kleitman_wang(terms)
    raise ValueError(f"unknown graphicality method {method!r}")


def path_cycle_check(seq: DegreeSequence | Iterable[int]) -> str:
    """``"applies_and_graphic"`` when 1 <= m <= 2, h == 1 and the sum is even.

    Sequences with all positive terms in {1, 2}, at least one 1, and an even
    sum are always graphic (a union of paths and cycles); otherwise the
    result is ``"not_applicable"``.
    """
    if not isinstance(seq, DegreeSequence):
        seq = DegreeSequence(seq)
    stats = sequence_stats(seq)
    if 1 <= stats.m <= 2 and stats.h == 1 and stats.sigma % 2 == 0:
        return "applies_and_graphic"
    return "not_applicable"


def iter_graphic_terms(n: int, positive_only: bool = True) -> Iterator[tuple[int, ...]]:
    """Raw-tuple version of :func:`enumerate_graphic` for hot loops."""
    if n < 1:
        raise ValueError("n must be at least 1")
    low = 1 if positive_only else 0
    for terms in combinations_with_replacement(range(n - 1, low - 1, -1), n):
        if _erdos_gallai_raw(terms):
            yield terms


def enumerate_graphic(n: int, positive_only: bool = True) -> Iterator[DegreeSequence]:
    """Every graphic n-term sequence, in lexicographically decreasing order."""
    for terms in iter_graphic_terms(n, positive_only):
        yield DegreeSequence(terms)
