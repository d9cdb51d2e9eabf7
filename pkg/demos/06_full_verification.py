"""Run every verification suite with a small sample size and print the report."""

from orbitclosure.paperdata import PaperData
from orbitclosure.verifier import SuiteConfig, check_set_equalities, run_all

report = run_all(SuiteConfig(trials=100, axiom_trials=50))
print(report.to_text())

# A deliberately broken copy of the data: one sign in S3 flipped.
broken = PaperData.default().with_flipped_s3_sign(0, 0)
bad = check_set_equalities(SuiteConfig(primes=(3,), data=broken))
print("with a flipped sign:", "PASS" if bad.passed else "FAIL")
for c in bad.failures()[:2]:
    print("  ", c.id, c.counterexample)
