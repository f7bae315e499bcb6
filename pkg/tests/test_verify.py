"""Suite plumbing and the desk-scale 'all' run."""
import time

import pytest

from bklkit.verify import run_suite


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_all_suite_desk_scale_under_budget():
    t0 = time.time()
    s = run_suite("all", max_rank=2, max_window=3)
    elapsed = time.time() - t0
    failures = [r for r in s.results if not r.ok]
    assert not failures, failures[:3]
    assert elapsed < 60, f"'all' at rank 2 took {elapsed:.0f}s"


def test_results_carry_details():
    s = run_suite("rank2", max_rank=2, max_window=6)
    assert all(r.detail for r in s.results)
