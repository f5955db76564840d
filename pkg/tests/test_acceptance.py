"""Acceptance gate: one test per headline criterion.

Each test runs the corresponding verification suite and prints a single
pass/fail line; a failure message lists the offending checks.
"""

import pytest

from deccrystal.suites import run_suite

CRITERIA = [
    ("1 golden insertion", "golden-insertion"),
    ("2 single-step insertion goldens", "insertion-steps"),
    ("3 insertion is a bijection", "bijection"),
    ("4 insertion is equivariant", "equivariance"),
    ("5 unique extreme vertices", "highest-lowest"),
    ("6 characters are Schur P/Q", "characters"),
    ("7 crystal axioms hold", "axioms"),
    ("8 reinsertion is idempotent", "idempotence"),
    ("9 rewriting matches insertion", "plactic"),
    ("10 rank law holds", "rank"),
    ("11 insertion product is a monoid", "monoid"),
]


@pytest.mark.parametrize("label,suite", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(label, suite):
    results = run_suite(suite)
    failures = [f"{name}: {detail}" for name, ok, detail in results if not ok]
    status = "PASS" if not failures else "FAIL"
    print(f"{status} criterion {label} "
          f"({len(results) - len(failures)}/{len(results)} checks)")
    assert not failures, "; ".join(failures)
