import pytest

from lubanski import registry
from lubanski.outcome import all_passed

FX = registry.default_fixtures()


def test_suites_cover_every_check():
    assert {c.suite for c in registry.CHECKS} == set(registry.SUITES)
    ids = [c.check_id for c in registry.CHECKS]
    assert len(ids) == len(set(ids))
    assert registry.checks_for(["all"]) == registry.checks_for(list(registry.SUITES))


@pytest.mark.parametrize("check", registry.checks_for(["all"]), ids=lambda c: c.check_id)
def test_check_passes_at_default_fixtures(check):
    outcomes = check.run(FX)
    assert outcomes
    assert all_passed(outcomes), [o.label for o in outcomes if not o.passed]


def test_families_are_known():
    from lubanski.wave_systems import FAMILIES
    for check in registry.CHECKS:
        assert set(check.families) <= set(FAMILIES)
