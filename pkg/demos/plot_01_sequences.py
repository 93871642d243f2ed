"""
Degree sequences, graphicality and laying off
=============================================

A degree sequence is kept sorted in non-increasing order, and positions
are 1-based, so ``seq.d(1)`` is the largest term.
"""

# %%
# Parsing accepts plain lists and the exponent shorthand ``r^t``.
from potent import DegreeSequence, is_graphic, lay_off, parse_sequence, sequence_stats

seq = parse_sequence("6,6,4^3,3^2")
print(seq.terms)
print(seq)  # formatted back in exponent notation
print(sequence_stats(seq))

# %%
# Two independent graphicality tests: the Erdos-Gallai inequalities and
# the Kleitman-Wang recursion.  They always agree.
for text in ["3^6", "3^7", "3 1", "4 4 1^4", "5^4 3^2 2"]:
    s = parse_sequence(text)
    print(f"{text:>10}  EG={is_graphic(s)!s:5}  KW={is_graphic(s, 'kleitman_wang')}")

# %%
# Laying off d_k deletes that term and removes one from d_k of the others.
# If d_k >= k the term skips itself; otherwise the d_k largest terms drop.
print(lay_off(DegreeSequence([3] * 6), 6))  # d_k < k branch
print(lay_off(DegreeSequence([3] * 4), 1))  # d_k >= k branch

# %%
# Repeatedly laying off the last term decides graphicality: the chain
# reaches the empty sequence exactly when the start is graphic.
s = parse_sequence("4^2 3^2 2^2")
while len(s):
    print(s)
    s = lay_off(s)
