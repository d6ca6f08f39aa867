from __future__ import annotations

import functools
import os
import socket

import networkx as nx
import pytest

from chromabound.graph import Graph

NO_NETWORK_ENV = "CHROMABOUND_NO_NETWORK"


def _refuse(*args, **kwargs):
    raise OSError("network access is disabled for this test run")


def pytest_configure(config):
    if os.environ.get(NO_NETWORK_ENV):
        socket.socket.connect = _refuse
        socket.socket.connect_ex = _refuse
        socket.create_connection = _refuse


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((pos[u], pos[v]) for u, v in h.edges()))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def _dedupe(graphs):
    buckets: dict[str, list[nx.Graph]] = {}
    for h in graphs:
        key = nx.weisfeiler_lehman_graph_hash(h)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(h, other) for other in bucket):
            bucket.append(h)
    return [h for bucket in buckets.values() for h in bucket]


@functools.lru_cache(maxsize=1)
def small_connected_corpus() -> tuple[Graph, ...]:
    """Every connected graph with 1 to 8 edges, up to isomorphism.

    Such graphs have at most 9 vertices: the atlas covers up to 7; on 8
    vertices only trees and unicyclic graphs fit; on 9 only trees.
    """
    out = [h for h in nx.graph_atlas_g()
           if 1 <= h.number_of_edges() <= 8 and nx.is_connected(h)]
    trees8 = list(nx.nonisomorphic_trees(8))
    out += trees8
    unicyclic = []
    for tree in trees8:
        for u, v in nx.non_edges(tree):
            h = tree.copy()
            h.add_edge(u, v)
            unicyclic.append(h)
    out += _dedupe(unicyclic)
    out += list(nx.nonisomorphic_trees(9))
    return tuple(from_nx(h) for h in out)


@pytest.fixture(scope="session")
def corpus() -> tuple[Graph, ...]:
    return small_connected_corpus()
