import pytest

from kgamma.verify import SUITES, run_suite


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suite_passes(suite):
    results = run_suite(suite)
    assert results
    failures = [r for r in results if not r.ok]
    assert not failures, failures


def test_all_runs_every_module_suite():
    names = {r.name.split(".")[0] for r in run_suite("all")}
    assert names == {"shapes", "tableaux", "insertion", "gamma", "oracle", "grassmann"}
