"""Trees and simple graphs: parsing, canonical codes, U-polynomials and enumeration."""
import logging
import random
from collections import Counter, defaultdict
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx
from networkx.utils import UnionFind

from catpoly.exceptions import CapExceededError, TreeError
from catpoly.models.polynomials import GraphUPolynomial, Partition, PartitionPolynomial
from catpoly.models.tree import Edge, Tree
from catpoly.utils.caps import enforce_cap

logger = logging.getLogger(__name__)

GraphLike = Union[Tree, nx.Graph]


# ---------------------------------------------------------------------------
# Edge-list files
# ---------------------------------------------------------------------------

def parse_tree(text: str) -> Tree:
    """Parse an edge list: one ``u v`` pair per line, '#' comments and blank lines ignored.

    Non-contiguous labels are compacted to 0..n-1 (sorted order) with a warning.
    """
    edges: List[Edge] = []
    seen = set()
    components = UnionFind()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2 or not all(t.isascii() and t.isdecimal() for t in tokens):
            raise TreeError(f"expected two non-negative integers, got {raw.strip()!r}", line=lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise TreeError(f"self-loop at vertex {u}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise TreeError(f"duplicate edge {u} {v}", line=lineno)
        if components[u] == components[v]:
            raise TreeError(f"edge {u} {v} closes a cycle", line=lineno)
        components.union(u, v)
        seen.add(key)
        edges.append(key)

    if not edges:
        raise TreeError("no edges found; single-vertex and empty graphs are not accepted")

    labels = sorted({x for e in edges for x in e})
    if labels[-1] != len(labels) - 1:
        logger.warning(f"Vertex labels are not contiguous 0..{len(labels) - 1}; compacting {len(labels)} labels")
        remap = {old: new for new, old in enumerate(labels)}
        edges = [(remap[u], remap[v]) for u, v in edges]

    n = len(labels)
    if len(edges) != n - 1:
        raise TreeError(f"graph is disconnected: {n} vertices but {len(edges)} edges")
    return Tree(n, tuple(edges))


def format_tree(tree: Tree) -> str:
    """Edge list in the format read by parse_tree."""
    return '\n'.join(f"{u} {v}" for u, v in tree.edges)


def relabel(tree: Tree, perm: Sequence[int]) -> Tree:
    """Apply ``perm[old] = new`` to every vertex label."""
    if sorted(perm) != list(range(tree.vertex_count)):
        raise TreeError("relabeling must be a permutation of the vertex set")
    return Tree(tree.vertex_count, tuple((perm[u], perm[v]) for u, v in tree.edges))


def single_vertex_tree() -> Tree:
    return Tree(1, ())


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniformly random labeled tree on n vertices via a random Pruefer sequence."""
    if n <= 1:
        return single_vertex_tree()
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return Tree.from_networkx(nx.from_prufer_sequence(sequence))


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------

def tree_centers(tree: Tree) -> List[int]:
    """One or two centers, found by repeatedly stripping leaves."""
    n = tree.vertex_count
    if n <= 2:
        return list(range(n))
    deg = [len(nbrs) for nbrs in tree.adjacency]
    layer = [v for v in range(n) if deg[v] == 1]
    removed = len(layer)
    while removed < n:
        next_layer = []
        for u in layer:
            for v in tree.adjacency[u]:
                deg[v] -= 1
                if deg[v] == 1:
                    next_layer.append(v)
        removed += len(next_layer)
        layer = next_layer
    return sorted(layer)


def _rooted_order(tree: Tree, root: int) -> Tuple[List[int], List[int]]:
    """Parents and a BFS order from root."""
    parent = [-1] * tree.vertex_count
    order = [root]
    seen = {root}
    for u in order:
        for v in tree.adjacency[u]:
            if v not in seen:
                seen.add(v)
                parent[v] = u
                order.append(v)
    return parent, order


def rooted_codes(tree: Tree, root: int) -> List[str]:
    """AHU parenthesis code of every subtree when the tree hangs from root."""
    parent, order = _rooted_order(tree, root)
    children: List[List[str]] = [[] for _ in range(tree.vertex_count)]
    codes = [''] * tree.vertex_count
    for v in reversed(order):
        codes[v] = '(' + ''.join(sorted(children[v])) + ')'
        if parent[v] >= 0:
            children[parent[v]].append(codes[v])
    return codes


def canonical_code(tree: Tree) -> str:
    """Isomorphism-invariant code: lexicographic minimum of the AHU codes at the centers."""
    return min(rooted_codes(tree, c)[c] for c in tree_centers(tree))


# ---------------------------------------------------------------------------
# U-polynomials
# ---------------------------------------------------------------------------

def _as_graph(graph: GraphLike) -> nx.Graph:
    if isinstance(graph, Tree):
        return graph.to_networkx()
    if graph.is_multigraph() or graph.is_directed():
        raise TreeError("U-polynomials are defined here for simple undirected graphs only")
    if nx.number_of_selfloops(graph):
        raise TreeError("graph has self-loops; only simple graphs are supported")
    return graph


def u_polynomial_bruteforce(graph: GraphLike, include_y: bool = True, force: bool = False) -> GraphUPolynomial:
    """Sum over every edge subset A of x_{lambda(A)} (y-1)^{|A| - r(A)}.

    Cost is 2^|E| subset evaluations. With ``include_y=False`` every term is recorded with
    exponent 0 (the evaluation at y = 2).
    """
    g = _as_graph(graph)
    nodes = list(g.nodes)
    edges = list(g.edges)
    enforce_cap('MAX_BRUTEFORCE_EDGES', len(edges), f"2^{len(edges)} edge subsets", force=force)
    n = len(nodes)
    terms: Counter = Counter()
    for mask in range(1 << len(edges)):
        components = UnionFind(nodes)
        chosen = 0
        for i, (u, v) in enumerate(edges):
            if mask >> i & 1:
                components.union(u, v)
                chosen += 1
        sizes = Counter(components[v] for v in nodes).values()
        rank = n - len(sizes)
        ypow = chosen - rank if include_y else 0
        terms[(tuple(sorted(sizes, reverse=True)), ypow)] += 1
    return GraphUPolynomial(terms)


def _insert_part(detached: Partition, part: int) -> Partition:
    return tuple(sorted(detached + (part,), reverse=True))


def u_polynomial_tree(tree: Tree) -> PartitionPolynomial:
    """U_T by subtree convolution.

    Each vertex carries a table keyed by (size of the component containing it, sorted sizes
    of components already cut off below it). Merging a child either cuts the child edge
    (the child's component becomes a detached part) or keeps it (the sizes add).
    Children are merged in AHU-code order.
    """
    n = tree.vertex_count
    if n == 1:
        return PartitionPolynomial.monomial((1,))
    root = tree_centers(tree)[0]
    parent, order = _rooted_order(tree, root)
    codes = rooted_codes(tree, root)
    tables: List[Optional[Dict[Tuple[int, Partition], int]]] = [None] * n
    for v in reversed(order):
        table: Dict[Tuple[int, Partition], int] = {(1, ()): 1}
        kids = sorted((c for c in tree.adjacency[v] if c != parent[v]), key=lambda c: (codes[c], c))
        for child in kids:
            child_table = tables[child]
            tables[child] = None
            merged: Dict[Tuple[int, Partition], int] = defaultdict(int)
            for (s1, d1), k1 in table.items():
                for (s2, d2), k2 in child_table.items():
                    weight = k1 * k2
                    below = tuple(sorted(d1 + d2, reverse=True)) if d2 else d1
                    merged[(s1, _insert_part(below, s2))] += weight
                    merged[(s1 + s2, below)] += weight
            table = merged
        tables[v] = table
    result: Counter = Counter()
    for (s, detached), count in tables[root].items():
        result[_insert_part(detached, s)] += count
    return PartitionPolynomial(result)


def chromatic_p_expansion(tree: Tree) -> PartitionPolynomial:
    """Power-sum coefficients of the chromatic symmetric function of a tree.

    [p_lambda] X_T = (-1)^(n - len(lambda)) c_lambda(T).
    """
    n = tree.vertex_count
    return u_polynomial_tree(tree).map_coefficients(lambda lam, c: c if (n - len(lam)) % 2 == 0 else -c)


def leaf_count(tree: Tree) -> int:
    return len(tree.leaves())


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def enumerate_free_trees(n: int, force: bool = False) -> Iterator[Tree]:
    """One tree per isomorphism class on n vertices (WROM level-sequence generation)."""
    if n < 1:
        raise TreeError(f"tree order must be positive, got {n}")
    enforce_cap('MAX_TREE_N', n, "see OEIS A000055 for the class count", force=force)
    if n <= 2:
        yield single_vertex_tree() if n == 1 else Tree(2, ((0, 1),))
        return
    for graph in nx.nonisomorphic_trees(n):
        yield Tree.from_networkx(graph)


def prufer_free_trees(n: int, max_n: int = 9) -> List[Tree]:
    """Independent oracle: decode every Pruefer sequence and keep one tree per canonical code.

    Cost is n^(n-2) decodings, so this refuses n above ``max_n``.
    """
    if n > max_n:
        raise CapExceededError(f"Pruefer oracle needs {n}^{n - 2} decodings; refusing n={n} > {max_n}")
    if n <= 1:
        return [single_vertex_tree()]
    found: Dict[str, Tree] = {}
    for sequence in product(range(n), repeat=n - 2):
        tree = Tree.from_networkx(nx.from_prufer_sequence(list(sequence)))
        found.setdefault(canonical_code(tree), tree)
    return [found[code] for code in sorted(found)]
