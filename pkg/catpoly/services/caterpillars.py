"""Caterpillars, the restricted U^L-polynomial, and the Phi/Psi correspondence.

A caterpillar here is a tree whose internal vertices induce a path with at least two
vertices. Stars and paths on three or fewer vertices are therefore *not* caterpillars,
which is narrower than the definition used in most graph libraries.
"""
import logging
from collections import Counter
from typing import Iterator, List, Optional, Tuple

from networkx.utils import UnionFind

from catpoly.exceptions import CompositionError, NotACaterpillarError
from catpoly.models.polynomials import PartitionPolynomial
from catpoly.models.tree import CaterpillarView, Tree
from catpoly.services.compositions import (
    Composition,
    enumerate_compositions,
    format_composition,
    lex_less,
    reverse_class_rep,
)
from catpoly.services.lclass import reverse_classes

logger = logging.getLogger(__name__)


def caterpillar_view(tree: Tree) -> Optional[CaterpillarView]:
    """Spine and leaf counts of a caterpillar, or None when the tree is not one.

    Of the two spine directions, the one whose composition is lexicographically smaller
    is returned; palindromic spines start from the smaller-labelled endpoint.
    """
    if tree.vertex_count < 4:
        return None
    adj = tree.adjacency
    internal = {v for v in range(tree.vertex_count) if len(adj[v]) >= 2}
    if len(internal) < 2:
        return None
    internal_nbrs = {v: [u for u in adj[v] if u in internal] for v in internal}
    if any(len(nbrs) > 2 for nbrs in internal_nbrs.values()):
        return None
    ends = sorted(v for v, nbrs in internal_nbrs.items() if len(nbrs) == 1)
    if len(ends) != 2:
        return None

    spine = [ends[0]]
    previous = -1
    while len(spine) < len(internal):
        step = [u for u in internal_nbrs[spine[-1]] if u != previous]
        previous = spine[-1]
        spine.append(step[0])
    leaf_counts = [len(adj[v]) - len(internal_nbrs[v]) for v in spine]

    forward = tuple(c + 1 for c in leaf_counts)
    backward = forward[::-1]
    if forward != backward and lex_less(backward, forward):
        return CaterpillarView(tuple(reversed(spine)), tuple(reversed(leaf_counts)), 'reversed')
    return CaterpillarView(tuple(spine), tuple(leaf_counts), 'forward')


def require_caterpillar(tree: Tree) -> CaterpillarView:
    view = caterpillar_view(tree)
    if view is None:
        raise NotACaterpillarError("internal vertices do not induce a path with at least two vertices")
    return view


def u_restricted(tree: Tree) -> PartitionPolynomial:
    """U^L_T: sum of x_{lambda(A)} over edge sets A that contain every leaf edge."""
    view = require_caterpillar(tree)
    spine_edges = view.spine_edges
    spine_set = set(spine_edges)
    leaf_edges = [e for e in tree.edges if e not in spine_set]
    vertices = range(tree.vertex_count)
    terms: Counter = Counter()
    for mask in range(1 << len(spine_edges)):
        components = UnionFind(vertices)
        for u, v in leaf_edges:
            components.union(u, v)
        for i, (u, v) in enumerate(spine_edges):
            if mask >> i & 1:
                components.union(u, v)
        sizes = Counter(components[v] for v in vertices).values()
        terms[tuple(sorted(sizes, reverse=True))] += 1
    return PartitionPolynomial(terms)


def phi(tree: Tree) -> Composition:
    """Reverse-class representative of the proper caterpillar's spine composition."""
    view = require_caterpillar(tree)
    if not view.proper:
        raise NotACaterpillarError(f"caterpillar is not proper: leaf counts {view.leaf_counts}")
    return reverse_class_rep(view.composition)


def caterpillar_from_sequence(beta: Composition) -> Tree:
    """Path v_0..v_{k-1} with beta_i - 1 leaves on v_i; leaves numbered after the spine."""
    k = len(beta)
    edges = [(i, i + 1) for i in range(k - 1)]
    next_label = k
    for i, part in enumerate(beta):
        for _ in range(part - 1):
            edges.append((i, next_label))
            next_label += 1
    return Tree(next_label, tuple(edges))


def psi(beta: Composition) -> Tree:
    """Proper caterpillar with spine composition beta."""
    if len(beta) < 2:
        raise CompositionError(f"psi needs at least two parts, got {format_composition(beta)}")
    if min(beta) < 2:
        raise CompositionError(f"psi needs every part >= 2, got {format_composition(beta)}")
    return caterpillar_from_sequence(beta)


def proper_caterpillar_compositions(n: int) -> List[Composition]:
    """Reverse-class representatives of parts->=2 compositions of n with length >= 2."""
    if n < 4:
        return []
    return sorted(reverse_classes(c for c in enumerate_compositions(n, 2) if len(c) >= 2))


def enumerate_proper_caterpillars(n: int) -> Iterator[Tree]:
    """One proper caterpillar per isomorphism class on n vertices."""
    for beta in proper_caterpillar_compositions(n):
        yield psi(beta)


def caterpillar_compositions(n: int) -> List[Composition]:
    """Spine compositions (proper or not) of all caterpillars on n vertices, up to reversal.

    The end parts are at least 2 because both spine ends are internal vertices.
    """
    if n < 4:
        return []
    return sorted(reverse_classes(
        c for c in enumerate_compositions(n) if len(c) >= 2 and c[0] >= 2 and c[-1] >= 2
    ))


def enumerate_caterpillars(n: int) -> Iterator[Tree]:
    """One caterpillar per isomorphism class on n vertices, improper ones included."""
    for beta in caterpillar_compositions(n):
        yield caterpillar_from_sequence(beta)
