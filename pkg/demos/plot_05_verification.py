"""
Predicate against oracle over a whole range
===========================================

``verify_range`` runs the closed-form test and the oracle on every
positive graphic sequence in a range and lists any disagreement along
with its certificate.  The JSON report leaves out timing, so reruns are
byte-identical.
"""

# %%
import json

from potent import verify_range

for target, lo, hi in (("K23", 5, 6), ("K5minusP4", 5, 6), ("K33", 6, 7), ("K6minusC6", 6, 7)):
    report = verify_range(target, lo, hi)
    print(f"{target:10} n={lo}..{hi}: {report.sequences_tested} sequences, "
          f"{len(report.mismatches)} mismatches, {report.elapsed:.2f}s")

# %%
# The same check from the command line:
#
#     potent verify --target k33 --n-min 6 --n-max 9 --workers 4 --format json
print(json.dumps(verify_range("K33", 6, 6).to_json(), sort_keys=True))
