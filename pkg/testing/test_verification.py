import pytest

from model.errors import IdentityViolation
from model.verification import SUITES, _expect, audit_notes, run_suites


def test_suite_names_are_unique_and_ordered():
    names = [name for name, _ in SUITES]
    assert len(names) == len(set(names)) >= 10
    assert names.index("f2 antisymmetry") < names.index("f closed forms")


def test_expect_raises_with_identity():
    with pytest.raises(IdentityViolation) as info:
        _expect("g sum identity", False, "n=3")
    assert info.value.identity == "g sum identity"
    assert str(info.value) == "g sum identity: n=3"


def test_fast_level_passes():
    results = run_suites('fast')
    assert [r.suite for r in results if not r.passed] == []


@pytest.mark.slow
def test_full_level_passes():
    assert all(r.passed for r in run_suites('full'))


def test_audit_notes():
    notes = audit_notes()
    assert "A_(n,3)" in notes[0]
    assert "61/20" in notes[1] and "95/12" in notes[1]
