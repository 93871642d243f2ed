"""
The threshold sigma(H, n)
=========================

sigma(H, n) is the smallest even sum that forces every positive graphic
n-term sequence to be potentially H-graphic.
"""

# %%
from potent import closed_form, extremal_sequence, sigma_value

for n in range(6, 11):
    r = sigma_value("K6minusC6", n)
    print(f"n={n:2}  sigma={r.sigma}  6n-10={closed_form('K6minusC6', n)}  extremal=({r.extremal})")

# %%
# For K_{3,3} the closed form is claimed from n = 11 on; smaller n are data.
for n in (8, 9, 10, 11):
    r = sigma_value("K33", n)
    print(f"n={n:2}  sigma={r.sigma}  closed form={closed_form('K33', n)}")

# %%
# The standard extremal sequences fall two short of sigma.
for target, n in (("K33", 11), ("K33", 12), ("K6minusC6", 7)):
    s = extremal_sequence(target, n)
    print(target, n, s, s.sigma)

# %%
# The same threshold from the oracle instead of the predicate.
print(sigma_value("K6minusC6", 7, method="oracle", mode="top_degree").sigma)
