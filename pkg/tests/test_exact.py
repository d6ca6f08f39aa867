import pytest

from chromabound.catalog import named, names
from chromabound.constructions import EdgeColouring, complete, cycle, six_colouring_cycles
from chromabound.errors import GraphError
from chromabound.exact import (
    BUDGET_ENV,
    Status,
    brute_force_chi,
    chromatic_number,
    colouring_from_result,
    default_budget,
    dsatur,
    exact_chi_t,
    exact_chi_t_prime,
    greedy_clique,
    is_proper_vertex_colouring,
    validate_colouring,
)
from chromabound.graph import Graph, line_graph, max_degree, power_graph


def test_validate_examples():
    h, c = six_colouring_cycles(8, 8)
    assert validate_colouring(h, c)
    path3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    check = validate_colouring(path3, EdgeColouring(1, (0, 0)))
    assert not check and check.witness == ((0, 1), (1, 2), 0)
    g = named("Petersen")
    assert validate_colouring(g, EdgeColouring(3, tuple(range(g.m))))
    with pytest.raises(GraphError):
        validate_colouring(g, EdgeColouring(1, (0, 1)))


def test_exact_examples():
    assert exact_chi_t_prime(named("Petersen"), 2).value == 5
    assert exact_chi_t_prime(cycle(8), 2).value == 4
    assert brute_force_chi(power_graph(line_graph(cycle(8)), 2), 8) == 4
    assert exact_chi_t_prime(complete(3), 1).value == 3
    assert exact_chi_t_prime(Graph(3), 2).value == 0
    with pytest.raises(GraphError):
        exact_chi_t_prime(cycle(4), 0)


def test_brute_force_examples():
    assert brute_force_chi(cycle(6), 6) == 2
    assert brute_force_chi(line_graph(complete(4)), 6) == 3
    assert brute_force_chi(cycle(5), 6) == 3
    with pytest.raises(GraphError):
        brute_force_chi(cycle(15), 3)
    with pytest.raises(ValueError):
        brute_force_chi(complete(4), 3)


def test_heuristics_bracket():
    for name in ("Petersen", "Frucht", "Golomb", "Clebsch"):
        gp = power_graph(line_graph(named(name)), 2)
        clique = greedy_clique(gp)
        assert all(gp.has_edge(a, b) for i, a in enumerate(clique) for b in clique[i + 1:])
        colours = dsatur(gp)
        assert is_proper_vertex_colouring(gp, colours)
        res = chromatic_number(gp)
        assert len(clique) <= res.value <= max(colours) + 1


def test_result_invariants_and_timeout():
    res = exact_chi_t_prime(named("Petersen"), 2)
    assert res.status is Status.EXACT and res.lower == res.upper == res.value
    assert res.display() == "5" and res.to_dict()["status"] == "Exact"
    slow = exact_chi_t_prime(named("Hoffman-Singleton"), 2, budget=0.5)
    assert slow.status is Status.TIMED_OUT and slow.value is None
    assert slow.lower <= slow.upper and slow.display() == "time"


def test_returned_colourings_validate():
    for name in ("Petersen", "Heawood", "Frucht", "Moser spindle"):
        g = named(name)
        for t in (1, 2, 3):
            res = exact_chi_t_prime(g, t)
            c = colouring_from_result(g, t, res)
            assert validate_colouring(g, c) and c.num_colours == res.value


def test_vertex_version():
    assert exact_chi_t(cycle(5), 1).value == 3
    assert exact_chi_t(named("Petersen"), 2).value == brute_force_chi(power_graph(named("Petersen"), 2), 10)


def test_determinism():
    g = named("Dyck")
    a, b = exact_chi_t_prime(g, 2), exact_chi_t_prime(g, 2)
    assert a.value == b.value and a.colouring == b.colouring


def test_budget_environment(monkeypatch):
    monkeypatch.delenv(BUDGET_ENV, raising=False)
    assert default_budget() == 300.0
    monkeypatch.setenv(BUDGET_ENV, "12.5")
    assert default_budget() == 12.5
    monkeypatch.setenv(BUDGET_ENV, "soon")
    with pytest.raises(ValueError):
        default_budget()


@pytest.mark.parametrize("t", [1, 2, 3])
def test_agrees_with_brute_force_on_corpus(corpus, t):
    for g in corpus:
        gp = power_graph(line_graph(g), t)
        res = exact_chi_t_prime(g, t)
        assert res.solved
        assert res.value == brute_force_chi(gp, gp.n), g.edges


@pytest.mark.parametrize("name", names())
def test_vizing(name):
    g = named(name)
    res = exact_chi_t_prime(g, 1, budget=10)
    if not res.solved:
        pytest.skip("chromatic index not reached within the test budget")
    assert res.value in (max_degree(g), max_degree(g) + 1)
