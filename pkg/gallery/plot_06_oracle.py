"""
Checking the formulas by brute force
====================================

The oracle reflects one root at a time and searches subsets exhaustively.
The sweep compares it with every closed formula on all small weights.
"""

from superweights.oracle import run_verification_suite

report = run_verification_suite(2, 2, 3)
print(report.checked, "checks,", len(report.mismatches), "mismatches")
for label, count in sorted(report.by_label.items()):
    print(f"  {label:20s} {count}")
