"""
Closed-form tests and their audit trail
=======================================

Each predicate evaluates every numbered condition and reports all
violations, with the parameters of any family match.
"""

# %%
from potent import (
    is_potentially_k5p4,
    is_potentially_k6c6,
    is_potentially_k23,
    is_potentially_k33,
    match_exceptional_family,
    oracle_potential,
    parse_sequence,
)

cases = [
    (is_potentially_k23, "6 3^5 1"),
    (is_potentially_k5p4, "5 3 2^4"),
    (is_potentially_k33, "4^6"),
    (is_potentially_k33, "6^2 4^3 3^2"),
    (is_potentially_k6c6, "6^3 3^4"),
    (is_potentially_k6c6, "3^6 2^3"),
]
for pred, text in cases:
    verdict = pred(parse_sequence(text))
    shown = ", ".join(map(str, verdict.violated)) or "-"
    print(f"{pred.__name__:22} ({text:>12})  potential={verdict.potential!s:5}  violated: {shown}")

# %%
# Family parameters are read straight off the sequence and then checked
# against the printed ranges.
print(match_exceptional_family(parse_sequence("8 8 4^5 2 1 1"), "K33/8/t=5"))
print(match_exceptional_family(parse_sequence("3^6"), "K33/6/a"))

# %%
# The oracle agrees with every verdict above.
for pred, text in cases:
    target = {"is_potentially_k23": "k23", "is_potentially_k5p4": "k5p4",
              "is_potentially_k33": "k33", "is_potentially_k6c6": "k6c6"}[pred.__name__]
    found = oracle_potential(parse_sequence(text), target, mode="top_degree") is not None
    print(text, found == pred(parse_sequence(text)).potential)
