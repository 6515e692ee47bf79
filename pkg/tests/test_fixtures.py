import pytest

from thetacrit import fixtures

SMALL = (3, 5, 7, 9, 11, 13)


@pytest.mark.parametrize("d", sorted(fixtures.FIXTURES))
def test_counts(d):
    assert len(fixtures.entries(d)) == fixtures.PRINTED_COUNTS[d]


def test_printed_counts():
    assert [fixtures.PRINTED_COUNTS[d] for d in SMALL] == [4, 6, 8, 15, 20, 18]


def test_completeness_flags():
    for d, ents in fixtures.FIXTURES.items():
        for e in ents:
            assert e.list_complete == (d <= 9)
    assert {e.completeness for e in fixtures.entries(11)} == {"probable"}
    assert {e.completeness for e in fixtures.entries(17)} == {"partial"}


@pytest.mark.parametrize("d", sorted(fixtures.FIXTURES))
def test_realisation(d):
    for r in fixtures.realize_list(d):
        assert r.ok, (r.entry.value, r.entry.expected_provenance)
        if r.realized:
            assert r.expected_route_found, (r.entry.value, r.tags)
            assert r.best_residual <= 1e-9


def test_values_are_distinct_except_d15():
    for d in fixtures.FIXTURES:
        n = fixtures.distinct_values(d)
        assert n == len(fixtures.entries(d)) if d != 15 else n == 46


def test_misprints_fail_integrality_as_printed():
    mis = [e for ents in fixtures.FIXTURES.values() for e in ents if e.misprint]
    assert {(e.d, e.printed) for e in mis} == {(13, "±i√13"), (17, "±i√17"), (13, "±1 ± 3i√2")}
    assert all(fixtures.printed_fails_integrality(e) for e in mis)
    # the corrected readings pass the same test
    for e in mis:
        assert fixtures._is_algebraic_integer((e.exact - 1) / 2)


def test_every_entry_satisfies_integrality():
    for ents in fixtures.FIXTURES.values():
        for e in ents:
            assert fixtures._is_algebraic_integer((e.exact - 1) / 2), e.value


def test_every_entry_bounded_by_d():
    for d, ents in fixtures.FIXTURES.items():
        for e in ents:
            assert abs(e.number) <= d + 1e-12


def test_higher_genus_block_examples_present():
    pii = {e.display for e in fixtures.entries(11) if e.expected_provenance == "higher_genus"}
    assert len(pii) == 8
    assert "1 + √5 + i√(5 - 2√5)" in pii


def test_unknown_d():
    with pytest.raises(KeyError):
        fixtures.entries(19)
    with pytest.raises(ValueError):
        fixtures.FixtureEntry(3, "1", "1", "bogus", "complete")
