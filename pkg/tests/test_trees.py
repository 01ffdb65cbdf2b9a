import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from catpoly.exceptions import CapExceededError, TreeError
from catpoly.models.polynomials import PartitionPolynomial
from catpoly.models.tree import Tree
from catpoly.services.trees import (
    canonical_code,
    chromatic_p_expansion,
    enumerate_free_trees,
    format_tree,
    leaf_count,
    parse_tree,
    prufer_free_trees,
    random_tree,
    relabel,
    tree_centers,
    u_polynomial_bruteforce,
    u_polynomial_tree,
)
from catpoly.services.verify import FREE_TREE_COUNTS

K2 = Tree.from_edges([(0, 1)])
P3 = Tree.from_edges([(0, 1), (1, 2)])

random_trees = st.builds(
    lambda n, seed: random_tree(n, random.Random(seed)),
    st.integers(min_value=1, max_value=9),
    st.integers(min_value=0, max_value=2 ** 32),
)


# --- parsing ---

def test_parse_simple_trees(path4):
    assert parse_tree('0 1') == K2
    assert parse_tree('0 1\n1 2\n2 3') == path4


def test_parse_ignores_comments_and_blank_lines(path4):
    assert parse_tree('# a path\n0 1\n\n1 2  # middle\n2 3\n') == path4


@pytest.mark.parametrize('text,line,fragment', [
    ('0 1\n1 2\n0 2', 3, 'cycle'),
    ('0 1\n1 1', 2, 'self-loop'),
    ('0 1\n1 0', 2, 'duplicate'),
    ('0 1\nx y', 2, 'expected two'),
    ('0 1 2', 1, 'expected two'),
    ('0 1\n1 ²', 2, 'expected two'),
])
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(TreeError) as excinfo:
        parse_tree(text)
    assert excinfo.value.line == line
    assert fragment in str(excinfo.value)
    assert str(excinfo.value).startswith(f"line {line}:")


def test_parse_rejects_disconnected_and_empty():
    with pytest.raises(TreeError, match='disconnected'):
        parse_tree('0 1\n2 3')
    with pytest.raises(TreeError):
        parse_tree('# nothing\n')


def test_parse_compacts_labels(caplog):
    tree = parse_tree('0 1\n1 5')
    assert tree == P3
    assert 'compacting' in caplog.text


def test_format_round_trip(path5):
    assert parse_tree(format_tree(path5)) == path5


def test_tree_validation():
    with pytest.raises(TreeError):
        Tree(3, ((0, 1),))
    with pytest.raises(TreeError):
        Tree(3, ((0, 1), (0, 1)))
    with pytest.raises(TreeError):
        Tree(4, ((0, 1), (1, 2), (0, 2)))


# --- canonical form ---

def test_centers(path4, path5, star5):
    assert tree_centers(path4) == [1, 2]
    assert tree_centers(path5) == [2]
    assert tree_centers(star5) == [0]


def test_canonical_code_of_path4(path4):
    assert canonical_code(path4) == '((())())'


@given(random_trees, st.randoms(use_true_random=False))
def test_canonical_code_survives_relabeling(tree, rng):
    perm = list(range(tree.vertex_count))
    rng.shuffle(perm)
    other = relabel(tree, perm)
    assert canonical_code(other) == canonical_code(tree)
    assert u_polynomial_tree(other) == u_polynomial_tree(tree)


def test_canonical_codes_match_isomorphism():
    trees = list(enumerate_free_trees(7))
    codes = {canonical_code(t) for t in trees}
    assert len(codes) == len(trees) == 11
    for i, a in enumerate(trees):
        for b in trees[i + 1:]:
            assert not nx.is_isomorphic(a.to_networkx(), b.to_networkx())


# --- U-polynomials ---

def test_bruteforce_small_graphs():
    assert u_polynomial_bruteforce(K2).canonical_key() == '1*x[2]+1*x[1.1]'
    assert u_polynomial_bruteforce(P3).canonical_key() == '1*x[3]+2*x[2.1]+1*x[1.1.1]'


def test_bruteforce_triangle_keeps_y():
    poly = u_polynomial_bruteforce(nx.cycle_graph(3))
    assert poly.canonical_key() == '3*x[3]+1*x[3]*(y-1)^1+3*x[2.1]+1*x[1.1.1]'


def test_bruteforce_rejects_multigraphs_and_loops():
    with pytest.raises(TreeError):
        u_polynomial_bruteforce(nx.MultiGraph([(0, 1), (0, 1)]))
    with pytest.raises(TreeError):
        u_polynomial_bruteforce(nx.Graph([(0, 1), (1, 1)]))


def test_bruteforce_edge_cap():
    with pytest.raises(CapExceededError, match='MAX_BRUTEFORCE_EDGES'):
        u_polynomial_bruteforce(nx.complete_graph(8))


def test_u_polynomial_of_path4(path4):
    expected = PartitionPolynomial({(4,): 1, (3, 1): 2, (2, 2): 1, (2, 1, 1): 3, (1, 1, 1, 1): 1})
    assert u_polynomial_tree(path4) == expected
    assert u_polynomial_tree(path4).mass() == 8


def test_u_polynomial_separates_path_and_star():
    star4 = Tree.from_edges([(0, 1), (0, 2), (0, 3)])
    assert u_polynomial_tree(star4) == PartitionPolynomial({(4,): 1, (3, 1): 3, (2, 1, 1): 3, (1, 1, 1, 1): 1})


def test_single_vertex():
    assert u_polynomial_tree(Tree(1)) == PartitionPolynomial.monomial((1,))


@settings(max_examples=60)
@given(random_trees)
def test_tree_dp_matches_bruteforce(tree):
    fast = u_polynomial_tree(tree)
    assert fast == u_polynomial_bruteforce(tree).x_part()
    assert fast.mass() == 2 ** (tree.vertex_count - 1)
    assert u_polynomial_bruteforce(tree).max_y_power() == 0


def test_chromatic_signs():
    assert chromatic_p_expansion(K2).canonical_key(symbol='p') == '-1*p[2]+1*p[1.1]'
    expansion = chromatic_p_expansion(P3)
    assert expansion.coefficient((3,)) == 1
    assert expansion.coefficient((2, 1)) == -2
    assert expansion.coefficient((1, 1, 1)) == 1


@given(random_trees)
def test_chromatic_sign_law(tree):
    n = tree.vertex_count
    for lam, c in chromatic_p_expansion(tree).items():
        assert (c > 0) == ((n - len(lam)) % 2 == 0)


def test_leaf_count(star5):
    assert leaf_count(K2) == 2
    assert leaf_count(star5) == 4


# --- enumeration ---

@pytest.mark.parametrize('n', range(1, 11))
def test_free_tree_counts(n):
    assert sum(1 for _ in enumerate_free_trees(n)) == FREE_TREE_COUNTS[n]


def test_free_tree_enumeration_is_capped():
    with pytest.raises(CapExceededError, match='CATPOLY_MAX_TREE_N'):
        list(enumerate_free_trees(40))


@pytest.mark.parametrize('n', range(1, 7))
def test_prufer_oracle_agrees(n):
    assert sorted(canonical_code(t) for t in prufer_free_trees(n)) == sorted(
        canonical_code(t) for t in enumerate_free_trees(n)
    )


def test_prufer_oracle_refuses_large_n():
    with pytest.raises(CapExceededError):
        prufer_free_trees(12)


@pytest.mark.slow
def test_prufer_oracle_at_eight():
    assert len(prufer_free_trees(8)) == 23


@pytest.mark.slow
@pytest.mark.parametrize('n', range(11, 15))
def test_free_tree_counts_large(n):
    trees = list(enumerate_free_trees(n))
    assert len(trees) == FREE_TREE_COUNTS[n]
    assert len({canonical_code(t) for t in trees}) == len(trees)
