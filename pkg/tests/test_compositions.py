import pytest
from hypothesis import given, strategies as st

from catpoly.exceptions import CompositionError
from catpoly.models.polynomials import PartitionPolynomial
from catpoly.services.compositions import (
    circ,
    coarsenings,
    concat,
    enumerate_compositions,
    first_difference_index,
    format_composition,
    is_coarsening,
    is_palindrome,
    is_prefix,
    l_polynomial,
    leaf_functional,
    lex_less,
    near_concat,
    odot_power,
    parse_composition,
    partition_type,
    prefix,
    reverse,
    reverse_class_rep,
)

from conftest import compositions


@pytest.mark.parametrize('text,expected', [
    ('2,5,3', (2, 5, 3)),
    (' [1, 2] ', (1, 2)),
    ('(4)', (4,)),
    ('1 1 2', (1, 1, 2)),
])
def test_parse_composition(text, expected):
    assert parse_composition(text) == expected


@pytest.mark.parametrize('text', ['', '2,0,1', '2,-1', 'a,b', '[]', '2,,x'])
def test_parse_composition_rejects_garbage(text):
    with pytest.raises(CompositionError):
        parse_composition(text)


def test_format_composition():
    assert format_composition((2, 5, 3)) == '2,5,3'


def test_prefix_helpers():
    assert prefix((2, 5, 3), 2) == (2, 5)
    assert is_prefix((2, 5), (2, 5, 3))
    assert is_prefix((2, 5, 3), (2, 5, 3))
    assert not is_prefix((2, 5, 3), (2, 5))


@given(compositions)
def test_reverse_is_an_involution(beta):
    assert reverse(reverse(beta)) == beta
    assert is_palindrome(beta) == (reverse(beta) == beta)


def test_reverse_class_rep():
    assert reverse_class_rep((3, 2)) == (2, 3)
    assert reverse_class_rep((2, 3)) == (2, 3)
    assert reverse_class_rep((1, 2, 1)) == (1, 2, 1)


@given(compositions)
def test_reverse_class_rep_is_shared(beta):
    assert reverse_class_rep(beta) == reverse_class_rep(reverse(beta))


def test_concatenations():
    assert concat((1, 2), (3,)) == (1, 2, 3)
    assert near_concat((1, 2), (3, 1)) == (1, 5, 1)


@given(compositions, compositions)
def test_concatenation_sizes(a, b):
    assert sum(concat(a, b)) == sum(near_concat(a, b)) == sum(a) + sum(b)
    assert len(near_concat(a, b)) == len(a) + len(b) - 1


def test_odot_power():
    assert odot_power((1, 2), 1) == (1, 2)
    assert odot_power((1, 2), 3) == (1, 3, 3, 2)
    assert odot_power((2,), 3) == (6,)
    with pytest.raises(CompositionError):
        odot_power((1, 2), 0)


@given(compositions, st.integers(min_value=1, max_value=5))
def test_odot_power_shape(alpha, i):
    result = odot_power(alpha, i)
    assert sum(result) == i * sum(alpha)
    assert len(result) == i * len(alpha) - (i - 1)


def test_circ():
    assert circ((2,), (2, 3)) == (2, 5, 3)
    assert circ((1, 2), (2, 3)) == (2, 3, 2, 5, 3)
    assert circ((1, 1), (2, 3)) == (2, 3, 2, 3)


@given(compositions, compositions)
def test_circ_size_is_multiplicative(beta, alpha):
    assert sum(circ(beta, alpha)) == sum(beta) * sum(alpha)


def test_coarsenings_follow_gap_masks():
    assert list(coarsenings((1, 2, 3))) == [(1, 2, 3), (3, 3), (1, 5), (6,)]


@given(compositions)
def test_coarsenings_are_coarsenings(beta):
    found = list(coarsenings(beta))
    assert len(found) == 2 ** (len(beta) - 1)
    assert beta in found and (sum(beta),) in found
    assert all(is_coarsening(alpha, beta) for alpha in found)


def test_is_coarsening():
    assert is_coarsening((5, 3), (2, 3, 3))
    assert is_coarsening((2, 6), (2, 3, 3))
    assert not is_coarsening((3, 5), (2, 3, 3))
    assert not is_coarsening((4,), (2, 3))


def test_partition_type():
    assert partition_type((2, 5, 3)) == (5, 3, 2)


def test_l_polynomial_examples():
    assert l_polynomial((2, 2)).canonical_key() == '1*x[4]+1*x[2.2]'
    assert l_polynomial((2, 5, 3)).canonical_key() == '1*x[10]+1*x[8.2]+1*x[7.3]+1*x[5.3.2]'
    assert l_polynomial((1,)) == PartitionPolynomial.monomial((1,))


@given(compositions)
def test_l_polynomial_mass_and_reversal(beta):
    poly = l_polynomial(beta)
    assert poly.mass() == 2 ** (len(beta) - 1)
    assert poly == l_polynomial(reverse(beta))
    assert poly.coefficient(partition_type(beta)) >= 1


def test_lex_order_with_prefix_clause():
    assert lex_less((1, 2), (1, 2, 1))
    assert not lex_less((1, 2, 1), (1, 2))
    assert lex_less((1, 3), (2,))
    assert first_difference_index((1, 2), (1, 2, 1)) == 3
    assert first_difference_index((2, 3), (3, 2)) == 1
    assert first_difference_index((1, 1, 2), (1, 2, 1)) == 2


def test_lex_order_is_strict():
    with pytest.raises(CompositionError):
        lex_less((1, 2), (1, 2))
    with pytest.raises(CompositionError):
        first_difference_index((1, 2), (1, 2))


def test_enumeration_is_lexicographic():
    assert list(enumerate_compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert list(enumerate_compositions(6, 2, start=(2,))) == [(2, 2, 2), (2, 4)]


@pytest.mark.parametrize('n', range(1, 11))
def test_enumeration_counts(n):
    assert len(list(enumerate_compositions(n))) == 2 ** (n - 1)


def test_parts_at_least_two_follow_fibonacci():
    counts = [len(list(enumerate_compositions(n, 2))) for n in range(2, 13)]
    assert counts[:2] == [1, 1]
    assert all(counts[i] == counts[i - 1] + counts[i - 2] for i in range(2, len(counts)))


def test_enumeration_rejects_bad_arguments():
    with pytest.raises(CompositionError):
        list(enumerate_compositions(0))


def test_leaf_functional():
    assert leaf_functional((2, 3)) == 3
    assert leaf_functional((2, 5, 3)) == 7


def _small_compositions(max_size):
    return [beta for n in range(1, max_size + 1) for beta in enumerate_compositions(n)]


def _leaf_identities_hold(alpha, gamma):
    n_alpha, n_gamma = leaf_functional(alpha), leaf_functional(gamma)
    return (
        leaf_functional(concat(gamma, alpha)) == n_gamma + n_alpha
        and leaf_functional(near_concat(gamma, alpha)) == n_gamma + n_alpha + 1
        and leaf_functional(circ(alpha, gamma)) == n_gamma * sum(alpha) + n_alpha
    )


@given(compositions, compositions)
def test_leaf_functional_under_products(alpha, gamma):
    assert _leaf_identities_hold(alpha, gamma)


def test_leaf_functional_under_products_up_to_size_eight():
    small = _small_compositions(8)
    assert len(small) == 255
    bad = [(a, g) for a in small for g in small if not _leaf_identities_hold(a, g)]
    assert bad == []


@given(compositions, compositions)
def test_reverse_commutes_with_circ(alpha, gamma):
    assert reverse(circ(alpha, gamma)) == circ(reverse(alpha), reverse(gamma))


def test_reverse_commutes_with_circ_up_to_size_six():
    small = _small_compositions(6)
    assert all(reverse(circ(a, g)) == circ(reverse(a), reverse(g)) for a in small for g in small)


@given(compositions, compositions, compositions)
def test_circ_is_associative(a, b, c):
    assert circ(circ(a, b), c) == circ(a, circ(b, c))


def test_circ_is_associative_up_to_size_four():
    small = _small_compositions(4)
    assert all(circ(circ(a, b), c) == circ(a, circ(b, c)) for a in small for b in small for c in small)
