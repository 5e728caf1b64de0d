import pytest

from tripledimer import fixtures as F
from tripledimer.skein import reduction_matrix


@pytest.mark.parametrize("types", list(F.PRINTED_TABLES))
def test_printed_tables(types):
    assert F.table_in_printed_order(types) == F.PRINTED_TABLES[types][1]


@pytest.mark.parametrize("types", list(F.FIGURE_CLASSES))
def test_figure_classes_are_a_bijection(types):
    assert sorted(F.FIGURE_CLASSES[types]) == reduction_matrix(types).classes


@pytest.mark.parametrize("types", list(F.PRINTED_TABLES))
def test_printed_columns_are_a_permutation(types):
    cols = F.printed_column_map(types)
    assert sorted(cols) == list(range(len(reduction_matrix(types).partitions)))


def test_oracle_fixtures_are_small():
    for name in F.ORACLE_FIXTURES:
        assert len(F.fixture_graph(name).edges) <= 30


def test_four_node_weights():
    g = F.four_node({"a": 2, "e": "3/4"})
    assert g.edges["a"].weight == 2 and str(g.edges["e"].weight) == "3/4"
    assert g.type_vector == "wbwb"
    assert F.two_by_three().type_vector == "wwbb"
