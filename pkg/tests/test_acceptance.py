"""Acceptance gate: every criterion at its stated (exact) tolerance.

Run with -s to see one pass/fail line per criterion."""

import pytest

from tamesym.acceptance import CRITERIA


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, fn):
    details = fn(quick=False)
    failures = [d["check"] for d in details if not d["ok"]]
    line = f"{'PASS' if not failures else 'FAIL'}  {name}  ({len(details)} checks)"
    print(line)
    assert not failures, f"{name}: {failures[:10]}"
