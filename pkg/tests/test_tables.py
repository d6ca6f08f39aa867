import pytest

from chromabound.catalog import canonical_name
from chromabound.tables import NA, TIME, TableRow, build_table, table_csv, table_json

from published_tables import TABLE_T2, TABLE_T3

ROW_BUDGET = 30.0


@pytest.fixture(scope="module")
def table2():
    return {canonical_name(r.name): r for r in build_table(2, list(TABLE_T2), ROW_BUDGET)}


@pytest.fixture(scope="module")
def table3():
    return {canonical_name(r.name): r for r in build_table(3, list(TABLE_T3), ROW_BUDGET)}


def check_row(row: TableRow, published: tuple):
    closed, inertial, upper, exact, _ = published
    assert row.hoffman_closed == closed
    assert row.wilf == upper
    if inertial is not None:
        assert row.inertial1 == inertial
    if exact is not None:
        assert row.exact == exact
    elif row.exact != TIME:  # the published run timed out; a value found here must respect the bounds
        assert max(row.hoffman_closed, row.inertial1) <= row.exact <= row.wilf


@pytest.mark.parametrize("name", sorted(TABLE_T2))
def test_t2_rows_match_published(name, table2):
    check_row(table2[name], TABLE_T2[name])


@pytest.mark.parametrize("name", sorted(TABLE_T3))
def test_t3_rows_match_published(name, table3):
    check_row(table3[name], TABLE_T3[name])


def test_t2_tight_rows_match_bold_set(table2):
    solved = [n for n, v in TABLE_T2.items() if v[3] is not None]
    assert {n for n in solved if table2[n].tight} == {n for n in solved if TABLE_T2[n][4]}


def test_tight_flag_definition(table2, table3):
    for row in list(table2.values()) + list(table3.values()):
        lower = [b for b in (row.hoffman_closed, row.inertial1) if isinstance(b, int)]
        assert row.tight == (isinstance(row.exact, int) and row.exact in lower)


def test_output_is_deterministic():
    names = ["Petersen", "Golomb", "Octahedron", "Frucht"]
    a, b = build_table(2, names, 20), build_table(2, names, 20)
    assert table_csv(a) == table_csv(b) and table_json(a) == table_json(b)
    assert table_csv(a).splitlines()[0] == "name,hoffman_closed,inertial1,wilf,exact,tight"


def test_row_sentinels():
    row = TableRow("x", NA, 3, 10, TIME)
    assert row.cells() == ["x", "n/a", "3", "10", "time", ""] and not row.tight
    with pytest.raises(ValueError):
        build_table(4, ["Petersen"])
