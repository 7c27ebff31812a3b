"""Rerun every stored worked example and print each assertion.

Some stored lists disagree with what the computation produces; those lines
print FAIL with the computed value next to the stored one.

Run with ``python3 demos/worked_examples.py``.
"""

from latvert.reproduce import REGISTRY, run

for name in REGISTRY:
    print(f"[{name}]")
    for check in run(name):
        status = "PASS" if check.passed else "FAIL"
        print(f"  {status}  {check.name}" + (f"\n        {check.detail}" if check.detail else ""))
