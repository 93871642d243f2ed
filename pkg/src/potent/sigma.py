"""sigma(H, n) by brute force, and the known closed forms for the cubic targets.

sigma(H, n) is the smallest even s such that every positive graphic n-term
sequence with sum >= s is potentially H-graphic.  A single pass over the
positive graphic sequences finds the largest sum of a sequence that is
*not* potentially H-graphic; sigma is that sum plus two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characterize import predicate_for
from .graph import TargetPattern, target_pattern
from .oracle import DEFAULT_CAP, oracle_search
from .sequence import DegreeSequence, iter_graphic_terms

__all__ = [
    "SigmaResult",
    "FormulaCheck",
    "sigma_value",
    "extremal_sequence",
    "closed_form",
    "check_sigma_formula",
]


@dataclass(frozen=True)
class SigmaResult:
    target: TargetPattern
    n: int
    sigma: int
    extremal: DegreeSequence | None
    method: str
    sequences_scanned: int
    degenerate: bool = False

    def to_json(self) -> dict:
        return {
            "target": self.target.tag,
            "n": self.n,
            "sigma": self.sigma,
            "extremal": None if self.extremal is None else str(self.extremal),
            "method": self.method,
            "sequences_scanned": self.sequences_scanned,
        }


def sigma_value(
    target: TargetPattern | str,
    n: int,
    method: str = "predicate",
    mode: str = "exhaustive",
    cap: int = DEFAULT_CAP,
) -> SigmaResult:
    """Scan every positive graphic n-term sequence and return sigma(target, n).

    ``method`` picks the decision procedure: ``"predicate"`` (closed-form
    conditions) or ``"oracle"`` (realization search in ``mode``).  Among the
    non-potential sequences of maximum sum the lexicographically largest is
    reported as ``extremal``.  If every sequence is potential the result is
    flagged ``degenerate`` and sigma is the smallest even sum seen.
    """
    target = target_pattern(target)
    if n < target.order:
        raise ValueError(f"n={n} is smaller than the target's {target.order} vertices")
    if method == "predicate":
        predicate = predicate_for(target)

        def potential(terms):
            return predicate(DegreeSequence(terms)).potential

    elif method == "oracle":
        if n > cap:
            raise ValueError(f"oracle scan needs n <= {cap}")

        def potential(terms):
            return oracle_search(DegreeSequence(terms), target, mode, cap).potential

    else:
        raise ValueError(f"unknown method {method!r}")

    best = -1
    extremal = None
    smallest = None
    scanned = 0
    # lexicographically decreasing order, so the first maximizer seen is the largest
    for terms in iter_graphic_terms(n, positive_only=True):
        scanned += 1
        total = sum(terms)
        if smallest is None or total < smallest:
            smallest = total
        if total <= best:
            continue
        if not potential(terms):
            best = total
            extremal = DegreeSequence(terms)
    if extremal is None:
        return SigmaResult(target, n, smallest + smallest % 2, None, method, scanned, degenerate=True)
    return SigmaResult(target, n, best + 2, extremal, method, scanned)


def extremal_sequence(target: TargetPattern | str, n: int) -> DegreeSequence:
    """The standard non-potential sequence of near-maximal sum.

    K33: ``((n-1)^2, 4^3, 3^{n-5})`` for odd n and ``((n-1)^2, 4^3, 3^{n-6}, 2)``
    for even n (n >= 11).  K6minusC6: ``((n-1)^3, 3^{n-3})`` (n >= 6).
    """
    tag = target_pattern(target).tag
    if tag == "K33":
        if n < 11:
            raise ValueError("the K33 extremal sequence is defined for n >= 11")
        if n % 2:
            return DegreeSequence([n - 1] * 2 + [4] * 3 + [3] * (n - 5))
        return DegreeSequence([n - 1] * 2 + [4] * 3 + [3] * (n - 6) + [2])
    if tag == "K6minusC6":
        if n < 6:
            raise ValueError("the K6minusC6 extremal sequence is defined for n >= 6")
        return DegreeSequence([n - 1] * 3 + [3] * (n - 3))
    raise ValueError(f"no extremal sequence for target {tag}")


def closed_form(target: TargetPattern | str, n: int) -> int | None:
    """Known sigma(target, n), or None outside the range where it is established."""
    tag = target_pattern(target).tag
    if tag == "K33" and n >= 11:
        return 5 * n - 3 if n % 2 else 5 * n - 4
    if tag == "K6minusC6" and n >= 6:
        return 6 * n - 10
    return None


@dataclass(frozen=True)
class FormulaCheck:
    holds: bool | None
    expected: int | None
    result: SigmaResult
    note: str = ""

    def __bool__(self) -> bool:
        return bool(self.holds)


def check_sigma_formula(target: TargetPattern | str, n: int) -> FormulaCheck:
    """Compare the predicate-based sigma with the closed form.

    For K33 with n < 11 no closed form is asserted: ``holds`` is None and
    the computed value is still returned.
    """
    result = sigma_value(target, n, "predicate")
    expected = closed_form(target, n)
    if expected is None:
        return FormulaCheck(None, None, result, "formula not asserted for this n")
    return FormulaCheck(result.sigma == expected, expected, result)
