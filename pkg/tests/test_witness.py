import pytest
from pydantic import ValidationError

from catpoly.exceptions import HypothesisError
from catpoly.services.caterpillars import psi
from catpoly.services.compositions import circ, is_palindrome, is_proper, l_polynomial, leaf_functional, lex_less, reverse
from catpoly.services.trees import u_polynomial_bruteforce
from catpoly.services.witness import normalize_triple, sample_triples, split_for_witness, witness_theorem


def test_smallest_witness():
    data = witness_theorem((1, 1), (2,), (2, 3))
    assert (data.a, data.b, data.delta1, data.delta2) == (1, 2, 7, 3)
    assert data.lambda_witness == (6, 3, 1)
    assert data.rho1 == (2, 3, 2)
    assert data.rho2 == (2, 5)
    assert (data.coeff_S, data.coeff_T) == (4, 5)
    assert data.coeff_L_delta == 1


def test_smallest_witness_against_edge_subsets():
    sigma = psi(circ((1, 1), (2, 3)))
    tau = psi(circ((2,), (2, 3)))
    assert u_polynomial_bruteforce(sigma).x_part().coefficient((6, 3, 1)) == 4
    assert u_polynomial_bruteforce(tau).x_part().coefficient((6, 3, 1)) == 5


def test_longer_prefix_witness():
    data = witness_theorem((2, 3), (3, 2), (2, 3))
    assert data.rho1 == (2, 5, 3, 2)
    assert data.rho2 == (2, 5, 5)
    assert (leaf_functional(data.rho1), leaf_functional(data.rho2)) == (8, 9)
    assert (data.coeff_S, data.coeff_T) == (8, 9)
    assert data.lambda_witness == (13, 11, 1)


@pytest.mark.parametrize('alpha,beta,gamma,hypothesis', [
    ((2,), (1, 1), (3, 2), 'gamma-lex-below-reverse'),
    ((2,), (1, 1), (2, 3), 'alpha-lex-below-beta'),
    ((1, 1), (2,), (2, 2), 'gamma-not-palindrome'),
    ((1, 1), (1, 1), (2, 3), 'alpha-ne-beta'),
    ((1,), (2,), (2, 3), 'same-size'),
    ((1, 1), (2,), (1, 3), 'proper'),
])
def test_strict_mode_names_the_failed_hypothesis(alpha, beta, gamma, hypothesis):
    with pytest.raises(HypothesisError) as excinfo:
        witness_theorem(alpha, beta, gamma)
    assert excinfo.value.hypothesis == hypothesis
    assert f"'{hypothesis}'" in str(excinfo.value)


def test_normalize_triple():
    assert normalize_triple((2,), (1, 1), (3, 2)) == ((1, 1), (2,), (2, 3))
    assert normalize_triple((1, 2), (3,), (3, 2)) == ((2, 1), (3,), (2, 3))


def test_normalized_witness_matches_canonical_triple():
    assert witness_theorem((2,), (1, 1), (3, 2), normalize=True) == witness_theorem((1, 1), (2,), (2, 3))


def test_split_for_witness():
    alpha = circ((1, 2), (2, 3))
    beta = circ((2, 1), (2, 3))
    assert alpha == (2, 3, 2, 5, 3)
    assert l_polynomial(alpha) == l_polynomial(beta)
    assert split_for_witness(alpha, beta) == ((1, 2), (2, 1), (2, 3))
    # beta given reversed still splits against the same gamma
    assert split_for_witness(alpha, reverse(beta))[2] == (2, 3)

    data = witness_theorem(*split_for_witness(alpha, beta))
    assert data.rho1 == (2, 3, 2)
    assert data.rho2 == (2, 5)
    assert data.coeff_S != data.coeff_T


def test_split_rejects_reverse_pairs_and_unrelated_compositions():
    with pytest.raises(HypothesisError, match='not-reverse-equivalent'):
        split_for_witness((2, 3, 2, 5, 3), (3, 5, 2, 3, 2))
    with pytest.raises(HypothesisError, match='same-symmetry-class'):
        split_for_witness((2, 5, 3), (2, 3, 2, 3))


def test_sample_triples_are_valid_and_reproducible():
    triples = sample_triples(25, max_size=30, seed=7)
    assert triples == sample_triples(25, max_size=30, seed=7)
    for alpha, beta, gamma in triples:
        assert is_proper(gamma) and not is_palindrome(gamma)
        assert alpha != beta and sum(alpha) == sum(beta)
        assert sum(alpha) * sum(gamma) <= 30


def test_sampled_triples_produce_witnesses():
    for alpha, beta, gamma in sample_triples(20, max_size=30, seed=11):
        data = witness_theorem(alpha, beta, gamma, normalize=True)
        assert lex_less(data.gamma, reverse(data.gamma))
        assert leaf_functional(data.rho2) == leaf_functional(data.rho1) + 1
        assert data.coeff_S != data.coeff_T


def test_witness_data_rejects_inconsistent_fields():
    data = witness_theorem((1, 1), (2,), (2, 3))
    fields = data.model_dump()
    fields['delta2'] = 4
    with pytest.raises(ValidationError):
        type(data)(**fields)


def test_witness_rendering():
    data = witness_theorem((1, 1), (2,), (2, 3))
    text = data.to_text()
    assert 'lambda: 6,3,1' in text
    assert '[x_lambda]U_S: 4' in text
    assert data.to_json().startswith('{"alpha":[1,1],"beta":[2],"gamma":[2,3],')
