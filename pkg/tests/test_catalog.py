import networkx as nx
import pytest

from chromabound.catalog import canonical_name, display_name, named, names
from chromabound.constructions import SrgParams, srg_parameters
from chromabound.errors import GraphError

from conftest import to_nx

# (n, m, girth, diameter) from standard references
KNOWN = {
    "Petersen": (10, 15, 5, 2), "Heawood": (14, 21, 6, 3), "Pappus": (18, 27, 6, 4),
    "Nauru": (24, 36, 6, 4), "Desargues": (20, 30, 6, 5), "Moebius-Kantor": (16, 24, 6, 4),
    "Frucht": (12, 18, 3, 4), "Gray": (54, 81, 8, 6), "Dyck": (32, 48, 6, 5),
    "Thomsen": (6, 9, 4, 2), "Octahedron": (6, 12, 3, 2), "Dodecahedron": (20, 30, 5, 5),
    "Franklin": (12, 18, 4, 3), "Clebsch": (16, 40, 4, 2), "Folkman": (20, 40, 4, 4),
    "Hexahedron": (8, 12, 4, 3), "Truncated Tetrahedron": (12, 18, 3, 3),
    "Ellingham-Horton 54": (54, 81, 6, 10), "Golomb": (10, 18, 3, 3), "Moser spindle": (7, 11, 3, 2),
    "Durer": (12, 18, 3, 4), "Bidiakis cube": (12, 18, 4, 3), "Tietze": (12, 18, 3, 3),
    "Wagner": (8, 12, 4, 2), "Markstroem": (24, 36, 3, 6), "Sousselier": (16, 27, 5, 3),
    "Flower Snark": (20, 30, 5, 4), "Grotzsch": (11, 20, 4, 2), "Krackhardt Kite": (10, 18, 3, 4),
    "Herschel": (11, 18, 4, 4), "Coxeter": (28, 42, 7, 4), "McGee": (24, 36, 7, 4),
    "Robertson": (19, 38, 5, 3), "Meredith": (70, 140, 4, 8), "Tutte-Coxeter": (30, 45, 8, 4),
    "Foster": (90, 135, 10, 8), "Icosahedron": (12, 30, 3, 3), "Shrikhande": (16, 48, 3, 2),
    "Hoffman-Singleton": (50, 175, 5, 2),
}

NETWORKX = {
    "Petersen": nx.petersen_graph, "Heawood": nx.heawood_graph, "Pappus": nx.pappus_graph,
    "Desargues": nx.desargues_graph, "Moebius-Kantor": nx.moebius_kantor_graph, "Frucht": nx.frucht_graph,
    "Dodecahedron": nx.dodecahedral_graph, "Octahedron": nx.octahedral_graph, "Hexahedron": nx.cubical_graph,
    "Truncated Tetrahedron": nx.truncated_tetrahedron_graph, "Icosahedron": nx.icosahedral_graph,
    "Krackhardt Kite": nx.krackhardt_kite_graph, "Thomsen": lambda: nx.complete_bipartite_graph(3, 3),
    "Tutte-Coxeter": lambda: nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5),
    "Nauru": lambda: nx.LCF_graph(24, [5, -9, 7, -7, 9, -5], 4),
    "Dyck": lambda: nx.LCF_graph(32, [5, -5, 13, -13], 8),
    "Franklin": lambda: nx.LCF_graph(12, [5, -5], 6),
    "Foster": lambda: nx.LCF_graph(90, [17, -9, 37, -37, 9, -17], 15),
}

SRG = {
    "Petersen": (10, 3, 0, 1), "Clebsch": (16, 5, 0, 2), "Shrikhande": (16, 6, 2, 2),
    "Hoffman-Singleton": (50, 7, 0, 1), "Thomsen": (6, 3, 0, 3), "Octahedron": (6, 4, 2, 4),
}


def test_catalog_is_complete():
    assert set(KNOWN) == set(names())


@pytest.mark.parametrize("name", names())
def test_structure(name):
    h = to_nx(named(name))
    assert (h.number_of_nodes(), h.number_of_edges(), nx.girth(h), nx.diameter(h)) == KNOWN[name]


@pytest.mark.parametrize("name", sorted(NETWORKX))
def test_isomorphic_to_reference_construction(name):
    assert nx.is_isomorphic(to_nx(named(name)), NETWORKX[name]())


@pytest.mark.parametrize("name", names())
def test_strongly_regular_parameters(name):
    p = srg_parameters(named(name))
    if name in SRG:
        assert p == SrgParams(*SRG[name])
    elif p is not None:
        pytest.fail(f"{name} unexpectedly strongly regular: {p}")


def test_name_lookup():
    assert canonical_name("Möbius–Kantor") == "Moebius-Kantor"
    assert canonical_name("petersen graph") == "Petersen"
    assert canonical_name("Dürer") == "Durer"
    assert display_name("K33") == "Thomsen graph"
    g = named("Petersen")
    assert (g.n, g.m, set(g.degrees)) == (10, 15, {3})
    assert nx.is_isomorphic(to_nx(named("Thomsen")), nx.complete_bipartite_graph(3, 3))
    with pytest.raises(GraphError) as info:
        named("no such graph")
    assert "Petersen" in str(info.value)
