"""Labeled trees and the caterpillar view of a tree."""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Tuple

import networkx as nx

from catpoly.exceptions import TreeError

Edge = Tuple[int, int]


def _normalize_edges(edges: Iterable[Iterable[int]]) -> Tuple[Edge, ...]:
    normalized = []
    for edge in edges:
        u, v = (int(x) for x in edge)
        normalized.append((u, v) if u < v else (v, u))
    return tuple(sorted(normalized))


@dataclass(frozen=True)
class Tree:
    """Simple tree on vertices 0..vertex_count-1."""
    vertex_count: int
    edges: Tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise TreeError(f"a tree needs at least one vertex, got {n}")
        edges = _normalize_edges(self.edges)
        object.__setattr__(self, 'edges', edges)
        if len(edges) != n - 1:
            raise TreeError(f"a tree on {n} vertices has {n - 1} edges, got {len(edges)}")
        for u, v in edges:
            if u == v:
                raise TreeError(f"self-loop at vertex {u}")
            if u < 0 or v >= n:
                raise TreeError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
        if len(set(edges)) != len(edges):
            raise TreeError("duplicate edge")
        if n > 1 and not nx.is_connected(self.to_networkx()):
            raise TreeError("graph is disconnected (and therefore contains a cycle)")

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], vertex_count: Optional[int] = None) -> 'Tree':
        edges = _normalize_edges(edges)
        if vertex_count is None:
            vertex_count = 1 + max((v for _, v in edges), default=0)
        return cls(vertex_count, edges)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'Tree':
        """Build from a networkx graph, relabeling nodes to 0..n-1 in sorted node order."""
        labels = {node: i for i, node in enumerate(sorted(graph.nodes))}
        return cls(graph.number_of_nodes(), tuple((labels[u], labels[v]) for u, v in graph.edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        adj = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)

    def leaves(self) -> Tuple[int, ...]:
        return tuple(v for v in range(self.vertex_count) if len(self.adjacency[v]) == 1)


@dataclass(frozen=True)
class CaterpillarView:
    """Spine v_1..v_k of a caterpillar with the number of leaves hanging from each spine vertex.

    ``orientation`` is ``'forward'`` when the spine is listed starting from its
    smaller-labelled endpoint and ``'reversed'`` otherwise.
    """
    spine: Tuple[int, ...]
    leaf_counts: Tuple[int, ...]
    orientation: str = 'forward'

    @property
    def proper(self) -> bool:
        return all(c >= 1 for c in self.leaf_counts)

    @property
    def composition(self) -> Tuple[int, ...]:
        """Component sizes of T restricted to its leaf edges, in spine order."""
        return tuple(c + 1 for c in self.leaf_counts)

    @property
    def spine_edges(self) -> Tuple[Edge, ...]:
        return tuple((min(a, b), max(a, b)) for a, b in zip(self.spine, self.spine[1:]))
