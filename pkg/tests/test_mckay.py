import pytest

from rootforge import mckay, roots
from rootforge.errors import IdentityViolation, NoMatch, UnknownName


@pytest.mark.parametrize(
    "label,expect,nodes",
    [("2T", "affine E6", 7), ("2O", "affine E7", 8), ("2I", "affine E8", 9)],
)
def test_binary_polyhedral_graphs(label, expect, nodes):
    graph = mckay.mckay_graph(label)
    assert len(graph.nodes) == nodes
    assert mckay.match_affine(graph) == expect
    assert mckay.marks_kernel_check(graph)


@pytest.mark.parametrize(
    "label,expect",
    [
        ("C2", "affine A1"),
        ("C5", "affine A4"),  # odd order: McKay graph only, no root-system partner
        ("C8", "affine A7"),
        ("C12", "affine A11"),
        ("Dic2", "affine D4"),
        ("Dic3", "affine D5"),
        ("Dic6", "affine D8"),
    ],
)
def test_cyclic_and_dicyclic_graphs(label, expect):
    graph = mckay.mckay_graph(label)
    assert mckay.match_affine(graph) == expect
    assert mckay.marks_kernel_check(graph)


def test_graph_adjacency_is_symmetric():
    for label in ("2T", "2O", "2I", "C6", "Dic4"):
        g = mckay.mckay_graph(label)
        n = len(g.nodes)
        for i in range(n):
            for j in range(n):
                assert g.adjacency[i][j] == g.adjacency[j][i]
                assert g.adjacency[i][j] >= 0


def test_trivial_node_removal_gives_ordinary_e_series():
    for label, kind in (("2T", "E6"), ("2O", "E7"), ("2I", "E8")):
        g = mckay.mckay_graph(label)
        cartan = mckay.ordinary_cartan_after_trivial_removal(g)
        ref = mckay.ordinary_diagram(kind)
        want = tuple(
            tuple(2 if i == j else -ref[i][j] for j in range(len(ref)))
            for i in range(len(ref))
        )
        assert roots._label_match(cartan, want)


def test_e8_cartan_cross_checked_against_root_catalog():
    g = mckay.mckay_graph("2I")
    cartan = mckay.ordinary_cartan_after_trivial_removal(g)
    ref, _ = roots.catalog("E8")
    refC = tuple(
        tuple(int(float(c)) for c in row) for row in roots.cartan_matrix(list(ref))
    )
    assert roots._label_match(cartan, refC)


@pytest.mark.parametrize(
    "label,expect",
    [
        ("2T", (12, 12, 12)),
        ("2O", (18, 18, 18)),
        ("2I", (30, 30, 30)),
        ("C6", (6, 6, 6)),
        ("C10", (10, 10, 10)),
        ("Dic3", (8, 8, 8)),
        ("Dic5", (12, 12, 12)),
    ],
)
def test_coxeter_number_identity(label, expect):
    assert mckay.coxeter_number_identity(label) == expect


@pytest.mark.parametrize(
    "label,orders,ade",
    [
        ("H3", (2, 3, 5), "E8"),
        ("B3", (2, 3, 4), "E7"),
        ("A3", (2, 3, 3), "E6"),
        ("I2(4)", (4,), "A4"),
        ("I2(9)", (9,), "A9"),
        ("A1xI2(3)", (2, 2, 3), "D5"),
        ("A1xI2(8)", (2, 2, 8), "D10"),
    ],
)
def test_leg_triples(label, orders, ade):
    got_orders, got_ade, legs = mckay.leg_triple_correspondence(label)
    assert got_orders == orders
    assert got_ade == ade
    assert legs.legs == orders


def test_leg_triple_unknown():
    with pytest.raises(UnknownName):
        mckay.leg_triple_correspondence("D4")


def test_dot_output():
    dot = mckay.mckay_dot(mckay.mckay_graph("2T"))
    assert dot.startswith("graph mckay_2T {")
    assert dot.count(" -- ") == 6  # tree on 7 nodes


def test_chi2_values_follow_scalar_parts():
    table = mckay.complex_table("2T")
    # chi2 on the identity and on -1
    assert table.fundamental[0] == 2
    assert table.fundamental[1] == -2
