import pytest

from toricphases import catalog
from toricphases.errors import ValidationError
from toricphases.secondary import enumerate_phases

TABLE = [
    ("X(5)", "P4(11111)"), ("X(6)", "P4(11112)"), ("X(8)", "P4(11114)"), ("X(10)", "P4(11125)"),
    ("X(2,4)", "P5(111111)"), ("X(3,3)", "P5(111111)"), ("X(3,4)", "P5(111112)"), ("X(2,6)", "P5(111113)"),
    ("X(4,4)", "P5(111122)"), ("X(2,12)", "P5(111146)"), ("X(4,6)", "P5(111223)"), ("X(6,6)", "P5(112233)"),
    ("X(2,2,3)", "P6(1111111)"), ("X(2,2,2,2)", "P7(11111111)"),
]


def test_catalog_matches_table():
    assert [(e.name, e.ambient) for e in catalog.ENTRIES] == TABLE
    assert catalog.names() == [name for name, _ in TABLE]


@pytest.mark.parametrize("name", [n for n, _ in TABLE])
def test_entries_are_calabi_yau_threefolds(name):
    m = catalog.model(name)
    assert m.dimX == 3 and m.k == 1
    assert sum(w for (w,) in m.weights) == sum(d for (d,) in m.degrees)
    assert len(enumerate_phases(m)) == 2


def test_x10_charges():
    m = catalog.model("X(10)")
    assert m.charges == ((1,), (1,), (1,), (2,), (5,), (-10,))


def test_aliases_and_spellings():
    assert catalog.entry("quintic").name == "X(5)"
    assert catalog.entry("bicubic").name == "X(3,3)"
    assert catalog.entry("X5").name == "X(5)"
    assert catalog.entry("x(2, 2, 3)").name == "X(2,2,3)"
    with pytest.raises(ValidationError):
        catalog.entry("X(7)")


@pytest.mark.parametrize("name", [n for n, _ in TABLE])
def test_fermat_sections_have_the_right_degree(name):
    m = catalog.model(name)
    for G, d in zip(catalog.fermat_sections(m), m.degrees):
        assert G.degree() == (d, 0)
