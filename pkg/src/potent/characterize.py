"""Closed-form tests for potentially H-graphic sequences.

Four predicates, one per target: ``K23``, ``K5minusP4``, ``K33`` and
``K6minusC6``.  Each is a conjunction of numbered conditions; every
condition is evaluated and each failure is reported as a
:class:`ConditionId` carrying the family parameters it matched, so verdicts
can be audited condition by condition.

Parametric exceptional families are described by :class:`Family` objects:
a builder that writes out the family member for given parameters, the
printed parameter ranges, and a derivation that reads candidate parameters
straight off a sequence.  :func:`match_exceptional_family` uses the
derivation; :func:`brute_force_match` walks the full ranges and is kept as
an independent check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .sequence import DegreeSequence, is_graphic

__all__ = [
    "DomainError",
    "ConditionId",
    "PotentialVerdict",
    "Family",
    "FAMILIES",
    "EXCEPTIONS",
    "expand_entry",
    "match_exceptional_family",
    "brute_force_match",
    "is_potentially_k23",
    "is_potentially_k5p4",
    "is_potentially_k33",
    "is_potentially_k6c6",
    "predicate_for",
    "MIN_ORDER",
]


class DomainError(ValueError):
    """Input outside a predicate's domain (not graphic, a zero term, n too small)."""


@dataclass(frozen=True)
class ConditionId:
    theorem: str
    condition: int
    bindings: tuple[tuple[str, int], ...] = ()

    @classmethod
    def of(cls, theorem: str, condition: int, bindings: dict | None = None) -> ConditionId:
        return cls(theorem, condition, tuple(sorted((bindings or {}).items())))

    @property
    def params(self) -> dict[str, int]:
        return dict(self.bindings)

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "condition": self.condition, "bindings": self.params}

    def __str__(self) -> str:
        extra = ", ".join(f"{k}={v}" for k, v in self.bindings)
        return f"{self.theorem}/{self.condition}" + (f" [{extra}]" if extra else "")


@dataclass(frozen=True)
class PotentialVerdict:
    violated: tuple[ConditionId, ...] = ()

    @property
    def potential(self) -> bool:
        return not self.violated

    def __bool__(self) -> bool:
        return self.potential

    def conditions(self) -> list[int]:
        return [c.condition for c in self.violated]

    def to_json(self) -> dict:
        return {"potential": self.potential, "violated": [c.to_json() for c in self.violated]}


# -- sequence templates -------------------------------------------------------

_TERM = re.compile(r"^\s*([^\^]+?)\s*(?:\^\s*\{?([^}]+?)\}?)?\s*$")


def _eval(expr: str, n: int) -> int:
    expr = expr.replace(" ", "").strip("()")
    if not re.fullmatch(r"[-+]?(n|\d+)([-+](n|\d+))*", expr):
        raise ValueError(f"unsupported template expression {expr!r}")
    total = 0
    for sign, atom in re.findall(r"([-+]?)(n|\d+)", expr):
        value = n if atom == "n" else int(atom)
        total += -value if sign == "-" else value
    return total


@lru_cache(maxsize=4096)
def expand_entry(template: str, n: int) -> tuple[int, ...] | None:
    """Expand a template like ``"n-1, 4^2, 3^4, 1^{n-7}"`` at order ``n``.

    Returns None when the template has no member of length ``n`` (a negative
    repeat count, the wrong length, or terms out of non-increasing order).
    """
    terms: list[int] = []
    for part in template.split(","):
        m = _TERM.match(part)
        value = _eval(m.group(1), n)
        count = 1 if m.group(2) is None else _eval(m.group(2), n)
        if count < 0 or value < 0:
            return None
        terms.extend([value] * count)
    if len(terms) != n or any(a < b for a, b in zip(terms, terms[1:])):
        return None
    return tuple(terms)


def _runs(*parts: tuple[int, int]) -> tuple[int, ...] | None:
    out: list[int] = []
    for value, count in parts:
        if count < 0:
            return None
        out.extend([value] * count)
    return tuple(out)


# -- parametric families ------------------------------------------------------


@dataclass(frozen=True)
class Family:
    """A printed parametric shape.

    ``build(n, b)`` writes out the member for bindings ``b`` (None if a run
    length is negative); ``ranges(n)`` yields every binding allowed by the
    printed ranges; ``derive(terms)`` yields the candidate bindings read off
    a sequence.  A derived binding counts only if it is in range and
    rebuilds the sequence exactly.
    """

    key: str
    build: Callable[[int, dict], tuple[int, ...] | None]
    ranges: Callable[[int], Iterable[dict]]
    derive: Callable[[tuple[int, ...]], Iterable[dict]]
    in_range: Callable[[int, dict], bool]
    bound: Callable[[int, dict], bool] | None = field(default=None)

    def __str__(self) -> str:
        return self.key


def _count(terms: tuple[int, ...], value: int, start: int = 0) -> int:
    return sum(1 for x in terms[start:] if x == value)


def _heads2(n: int) -> Iterator[tuple[int, int]]:
    for d1 in range(n):
        for d2 in range(d1 + 1):
            yield d1, d2


def _head_tail_family(key: str, middle: tuple[int, ...], slack: int) -> Family:
    # (d1, d2, <middle>, 2^t, 1^{n - 2 - len(middle) - t}) implies d1 + d2 <= n + t + slack
    fixed = 2 + len(middle)

    def build(n, b):
        ones = n - fixed - b["t"]
        if ones < 0 or b["t"] < 0:
            return None
        return (b["d1"], b["d2"], *middle) + (2,) * b["t"] + (1,) * ones

    def ranges(n):
        for d1, d2 in _heads2(n):
            for t in range(0, n - fixed + 1):
                yield {"d1": d1, "d2": d2, "t": t}

    def derive(terms):
        if len(terms) < fixed:
            return []
        return [{"d1": terms[0], "d2": terms[1], "t": _count(terms, 2, fixed)}]

    return Family(
        key,
        build,
        ranges,
        derive,
        in_range=lambda n, b: n > b["d1"] >= b["d2"] and 0 <= b["t"] <= n - fixed,
        bound=lambda n, b: b["d1"] + b["d2"] <= n + b["t"] + slack,
    )


def _k33_family8(t: int) -> Family:
    # (n-i, k+i, 4^t, 2^{k-t}, 1^{n-2-k}), i = 1..[(n-k)/2], k = t..n-2i
    def build(n, b):
        i, k = b["i"], b["k"]
        return _runs((n - i, 1), (k + i, 1), (4, t), (2, k - t), (1, n - 2 - k))

    def in_range(n, b):
        i, k = b["i"], b["k"]
        return 1 <= i <= (n - k) // 2 and t <= k <= n - 2 * i

    def ranges(n):
        for k in range(t, n + 1):
            for i in range(1, (n - k) // 2 + 1):
                if k <= n - 2 * i:
                    yield {"i": i, "k": k}

    def derive(terms):
        n = len(terms)
        if n < 2:
            return []
        i = n - terms[0]
        return [{"i": i, "k": terms[1] - i}]

    return Family(f"K33/8/t={t}", build, ranges, derive, in_range)


def _k6c6_family6() -> Family:
    # (d1, d2, d3, 3^k, 2^t, 1^{n-3-k-t}) implies d1 + d2 + d3 <= n + 2k + t + 1
    def build(n, b):
        k, t = b["k"], b["t"]
        if k < 0 or t < 0 or n - 3 - k - t < 0:
            return None
        return (b["d1"], b["d2"], b["d3"]) + (3,) * k + (2,) * t + (1,) * (n - 3 - k - t)

    def ranges(n):
        for d1, d2 in _heads2(n):
            for d3 in range(d2 + 1):
                for k in range(n - 2):
                    for t in range(n - 2 - k):
                        yield {"d1": d1, "d2": d2, "d3": d3, "k": k, "t": t}

    def derive(terms):
        if len(terms) < 3:
            return []
        return [{
            "d1": terms[0],
            "d2": terms[1],
            "d3": terms[2],
            "k": _count(terms, 3, 3),
            "t": _count(terms, 2, 3),
        }]

    return Family(
        "K6minusC6/6",
        build,
        ranges,
        derive,
        in_range=lambda n, b: (
            n > b["d1"] >= b["d2"] >= b["d3"] and b["k"] >= 0 and b["t"] >= 0 and b["k"] + b["t"] <= n - 3
        ),
        bound=lambda n, b: b["d1"] + b["d2"] + b["d3"] <= n + 2 * b["k"] + b["t"] + 1,
    )


def _k6c6_family8() -> Family:
    # (n-i, k, t, 3^t, 2^{k-i-t-1}, 1^{n-2-k+i}),
    # i = 1..[(n-t-1)/2], k = i+t+1..n-i, t = 4..k-i-1
    def build(n, b):
        i, k, t = b["i"], b["k"], b["t"]
        return _runs((n - i, 1), (k, 1), (t, 1), (3, t), (2, k - i - t - 1), (1, n - 2 - k + i))

    def in_range(n, b):
        i, k, t = b["i"], b["k"], b["t"]
        return 1 <= i <= (n - t - 1) // 2 and i + t + 1 <= k <= n - i and 4 <= t <= k - i - 1

    def ranges(n):
        for t in range(4, n + 1):
            for i in range(1, (n - t - 1) // 2 + 1):
                for k in range(i + t + 1, n - i + 1):
                    yield {"i": i, "k": k, "t": t}

    def derive(terms):
        if len(terms) < 3:
            return []
        return [{"i": len(terms) - terms[0], "k": terms[1], "t": terms[2]}]

    return Family("K6minusC6/8", build, ranges, derive, in_range)


def _k5p4_family2() -> Family:
    # (n-1, k, 2^t, 1^{n-2-t}), k, t = 3..n-2, k and t of different parity
    def build(n, b):
        return _runs((n - 1, 1), (b["k"], 1), (2, b["t"]), (1, n - 2 - b["t"]))

    def in_range(n, b):
        k, t = b["k"], b["t"]
        return 3 <= k <= n - 2 and 3 <= t <= n - 2 and (k - t) % 2 == 1

    def ranges(n):
        for k in range(3, n - 1):
            for t in range(3, n - 1):
                if (k - t) % 2:
                    yield {"k": k, "t": t}

    def derive(terms):
        if len(terms) < 2:
            return []
        return [{"k": terms[1], "t": _count(terms, 2, 2)}]

    return Family("K5minusP4/2", build, ranges, derive, in_range)


def _k5p4_family3() -> Family:
    # (n-k, k+i, 2^i, 1^{n-i-2}), i = 3..n-2k, k = 1..[(n-1)/2]-1
    def build(n, b):
        k, i = b["k"], b["i"]
        return _runs((n - k, 1), (k + i, 1), (2, i), (1, n - i - 2))

    def in_range(n, b):
        k, i = b["k"], b["i"]
        return 1 <= k <= (n - 1) // 2 - 1 and 3 <= i <= n - 2 * k

    def ranges(n):
        for k in range(1, (n - 1) // 2):
            for i in range(3, n - 2 * k + 1):
                yield {"k": k, "i": i}

    def derive(terms):
        if len(terms) < 2:
            return []
        k = len(terms) - terms[0]
        return [{"k": k, "i": terms[1] - k}]

    return Family("K5minusP4/3", build, ranges, derive, in_range)


FAMILIES: dict[str, Family] = {
    f.key: f
    for f in (
        _head_tail_family("K33/6/a", (3, 3, 3, 3), 2),
        _head_tail_family("K33/6/b", (4, 4, 3, 3), 2),
        _head_tail_family("K33/7", (4, 3, 3, 3, 3), 3),
        _k33_family8(5),
        _k33_family8(6),
        _k6c6_family6(),
        _head_tail_family("K6minusC6/7", (3, 3, 3, 3), 2),
        _k6c6_family8(),
        _k5p4_family2(),
        _k5p4_family3(),
    )
}


def match_exceptional_family(seq: DegreeSequence | tuple[int, ...], family: Family | str) -> list[dict]:
    """Every binding under which ``seq`` is the family member, in range.

    Parameters are read off the sequence (a run length, ``n - d_1`` and so
    on), then range-checked and confirmed by rebuilding the member.
    """
    if isinstance(family, str):
        family = FAMILIES[family]
    terms = tuple(seq)
    n = len(terms)
    found = []
    for b in family.derive(terms):
        if family.in_range(n, b) and family.build(n, b) == terms and b not in found:
            found.append(b)
    return found


def brute_force_match(seq: DegreeSequence | tuple[int, ...], family: Family | str) -> list[dict]:
    """Same answer as :func:`match_exceptional_family`, by scanning every in-range binding."""
    if isinstance(family, str):
        family = FAMILIES[family]
    terms = tuple(seq)
    n = len(terms)
    return [b for b in family.ranges(n) if family.build(n, b) == terms]


# -- explicit exception tables ------------------------------------------------

EXCEPTIONS: dict[str, tuple[str, ...]] = {
    "K23": (
        "3^2, 2^4",
        "3^2, 2^5",
        "4^3, 2^3",
        "n-1, 3^5, 1^{n-6}",
        "n-1, 3^6, 1^{n-7}",
    ),
    "K5minusP4": (
        "3^2, 2^4",
        "3^2, 2^5",
    ),
    "K33": (
        "5^4, 3^2, 2",
        "4^6",
        "3^6, 2",
        "6^4, 3^4",
        "4^2, 3^6",
        "4, 3^6, 2",
        "3^6, 2^2",
        "3^8",
        "3^7, 1",
        "4, 3^8",
        "4, 3^7, 1",
        "3^8, 2",
        "3^7, 2, 1",
        "3^9, 1",
        "3^8, 1^2",
        "n-1, 4^2, 3^4, 1^{n-7}",
        "n-1, 4^2, 3^5, 1^{n-8}",
        "n-1, 5^3, 3^3, 1^{n-7}",
        "n-2, 4, 3^5, 1^{n-7}",
        "n-2, 4, 3^6, 1^{n-8}",
        "n-3, 3^6, 1^{n-7}",
        "n-3, 3^7, 1^{n-8}",
    ),
    "K6minusC6": (
        "3^6, 2",
        "4^2, 3^6",
        "4, 3^6, 2",
        "3^6, 2^2",
        "3^8",
        "3^7, 1",
        "4, 3^8",
        "4, 3^7, 1",
        "3^8, 2",
        "3^7, 2, 1",
        "3^9, 1",
        "3^8, 1^2",
        "n-1, 4^2, 3^4, 1^{n-7}",
        "n-1, 4^2, 3^5, 1^{n-8}",
        "n-2, 4, 3^5, 1^{n-7}",
        "n-2, 4, 3^6, 1^{n-8}",
        "n-3, 3^6, 1^{n-7}",
        "n-3, 3^7, 1^{n-8}",
    ),
}


def _exception_hits(theorem: str, condition: int, terms: tuple[int, ...]) -> list[ConditionId]:
    n = len(terms)
    return [
        ConditionId.of(theorem, condition, {"entry": j})
        for j, template in enumerate(EXCEPTIONS[theorem], start=1)
        if expand_entry(template, n) == terms
    ]


# -- predicates ---------------------------------------------------------------

MIN_ORDER = {"K23": 5, "K5minusP4": 5, "K33": 6, "K6minusC6": 6}


def _prepare(seq: DegreeSequence | Iterable[int], theorem: str) -> tuple[int, ...]:
    if not isinstance(seq, DegreeSequence):
        seq = DegreeSequence(seq)
    terms = seq.terms
    if len(terms) < MIN_ORDER[theorem]:
        raise DomainError(f"{theorem} test needs n >= {MIN_ORDER[theorem]}, got n={len(terms)}")
    if terms[-1] == 0:
        raise DomainError(f"({seq}) has a zero term")
    if not is_graphic(terms):
        raise DomainError(f"({seq}) is not graphic")
    return terms


def _family_hits(theorem: str, condition: int, family_key: str, terms, extra=None) -> list[ConditionId]:
    family = FAMILIES[family_key]
    n = len(terms)
    hits = []
    for b in match_exceptional_family(terms, family):
        if family.bound is None or not family.bound(n, b):
            hits.append(ConditionId.of(theorem, condition, {**b, **(extra or {})}))
    return hits


def _k23_k5p4_head(theorem: str, terms) -> list[ConditionId]:
    d = (None,) + terms
    if d[2] >= 3 and d[5] >= 2:
        return []
    return [ConditionId.of(theorem, 1)]


def is_potentially_k23(seq) -> PotentialVerdict:
    """Whether some realization of ``seq`` contains K_{2,3}.

    Raises:
        DomainError: ``seq`` is not graphic, has a zero term, or n < 5.
    """
    th = "K23"
    terms = _prepare(seq, th)
    n = len(terms)
    d = (None,) + terms
    out = _k23_k5p4_head(th, terms)
    if d[1] == n - 1 and d[2] == 3 and d[5] != 3:
        out.append(ConditionId.of(th, 2))
    out += _exception_hits(th, 3, terms)
    return PotentialVerdict(tuple(out))


def is_potentially_k5p4(seq) -> PotentialVerdict:
    """Whether some realization of ``seq`` contains K5 minus a 4-edge path.

    Raises:
        DomainError: ``seq`` is not graphic, has a zero term, or n < 5.
    """
    th = "K5minusP4"
    terms = _prepare(seq, th)
    out = _k23_k5p4_head(th, terms)
    out += _family_hits(th, 2, "K5minusP4/2", terms)
    out += _family_hits(th, 3, "K5minusP4/3", terms)
    out += _exception_hits(th, 4, terms)
    return PotentialVerdict(tuple(out))


def _cubic_common(th: str, terms, cond3: Callable[[tuple], bool], cond4: Callable[[tuple], bool]):
    # conditions (1)-(5), shared shape between the two cubic targets
    n = len(terms)
    d = (None,) + terms
    out = []
    if d[6] < 3:
        out.append(ConditionId.of(th, 1))
    for i in (1, 2):
        if d[1] == n - i and d[4 - i] < 4:
            out.append(ConditionId.of(th, 2, {"i": i}))
    if d[2] == n - 1 and not cond3(d):
        out.append(ConditionId.of(th, 3))
    for i in range(3, n - 3):
        if d[1] + d[2] == 2 * n - i and d[n - i + 3] == 1 and not cond4(d):
            out.append(ConditionId.of(th, 4, {"i": i}))
    for i in range(4, n - 2):
        if d[1] + d[2] == 2 * n - i and d[n - i + 4] == 1 and not d[3] >= 4:
            out.append(ConditionId.of(th, 5, {"i": i}))
    return out


def is_potentially_k33(seq) -> PotentialVerdict:
    """Whether some realization of ``seq`` contains K_{3,3}.

    Conditions 1-5 are degree thresholds, 6-7 cap ``d1 + d2`` on three
    sparse shapes, 8 excludes two parametric families and 9 an explicit list.

    Raises:
        DomainError: ``seq`` is not graphic, has a zero term, or n < 6.
    """
    th = "K33"
    terms = _prepare(seq, th)
    strong = lambda d: d[3] >= 5 or d[6] >= 4  # noqa: E731
    out = _cubic_common(th, terms, strong, strong)
    out += _family_hits(th, 6, "K33/6/a", terms, {"shape": 1})
    out += _family_hits(th, 6, "K33/6/b", terms, {"shape": 2})
    out += _family_hits(th, 7, "K33/7", terms)
    out += _family_hits(th, 8, "K33/8/t=5", terms, {"t": 5})
    out += _family_hits(th, 8, "K33/8/t=6", terms, {"t": 6})
    out += _exception_hits(th, 9, terms)
    return PotentialVerdict(tuple(out))


def is_potentially_k6c6(seq) -> PotentialVerdict:
    """Whether some realization of ``seq`` contains K6 minus a Hamiltonian cycle.

    Raises:
        DomainError: ``seq`` is not graphic, has a zero term, or n < 6.
    """
    th = "K6minusC6"
    terms = _prepare(seq, th)
    d4_big = lambda d: d[4] >= 4  # noqa: E731
    out = _cubic_common(th, terms, d4_big, d4_big)
    out += _family_hits(th, 6, "K6minusC6/6", terms)
    out += _family_hits(th, 7, "K6minusC6/7", terms)
    out += _family_hits(th, 8, "K6minusC6/8", terms)
    out += _exception_hits(th, 9, terms)
    return PotentialVerdict(tuple(out))


_PREDICATES = {
    "K23": is_potentially_k23,
    "K5minusP4": is_potentially_k5p4,
    "K33": is_potentially_k33,
    "K6minusC6": is_potentially_k6c6,
}


def predicate_for(target) -> Callable[[DegreeSequence], PotentialVerdict]:
    """The closed-form test for a named target (tag string or TargetPattern)."""
    tag = getattr(target, "tag", target)
    if tag not in _PREDICATES:
        from .graph import target_pattern

        tag = target_pattern(tag).tag
    return _PREDICATES[tag]
