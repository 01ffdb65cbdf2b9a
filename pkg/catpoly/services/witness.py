"""Distinguishing the caterpillars Psi(alpha o gamma) and Psi(beta o gamma).

Given a triple with gamma not a palindrome, alpha and beta distinct of equal size, the
partition lambda = (delta1, delta2, 1) sorted is a coefficient on which the U-polynomials
of the two caterpillars differ. The coefficients equal the leaf counts of Psi(rho1) and
Psi(rho2), and those leaf counts differ by exactly one.
"""
import logging
import random
from typing import List, Tuple

from catpoly.exceptions import HypothesisError, TheoremViolation
from catpoly.models.reports import WitnessData
from catpoly.services.caterpillars import psi
from catpoly.services.compositions import (
    Composition,
    circ,
    concat,
    first_difference_index,
    format_composition,
    is_palindrome,
    is_proper,
    l_polynomial,
    lex_less,
    near_concat,
    reverse,
)
from catpoly.services.factorization import irreducible_factorization, recompose
from catpoly.services.trees import leaf_count, u_polynomial_tree

logger = logging.getLogger(__name__)

Triple = Tuple[Composition, Composition, Composition]


def normalize_triple(alpha: Composition, beta: Composition, gamma: Composition) -> Triple:
    """Reverse all three if gamma is above its reverse, then order alpha below beta.

    Reversal maps Psi(alpha o gamma) to an isomorphic caterpillar, so the pair of trees
    being compared is unchanged.
    """
    if gamma != reverse(gamma) and lex_less(reverse(gamma), gamma):
        alpha, beta, gamma = reverse(alpha), reverse(beta), reverse(gamma)
    if alpha != beta and lex_less(beta, alpha):
        alpha, beta = beta, alpha
    return alpha, beta, gamma


def _check_hypotheses(alpha: Composition, beta: Composition, gamma: Composition, normalize: bool) -> Triple:
    if is_palindrome(gamma):
        raise HypothesisError('gamma-not-palindrome', f"gamma = {format_composition(gamma)} is a palindrome")
    if alpha == beta:
        raise HypothesisError('alpha-ne-beta', f"alpha and beta are both {format_composition(alpha)}")
    if sum(alpha) != sum(beta):
        raise HypothesisError('same-size', f"|alpha| = {sum(alpha)} but |beta| = {sum(beta)}")
    if not is_proper(gamma):
        raise HypothesisError('proper', f"gamma = {format_composition(gamma)} has a part equal to 1")
    if normalize:
        return normalize_triple(alpha, beta, gamma)
    if not lex_less(gamma, reverse(gamma)):
        raise HypothesisError(
            'gamma-lex-below-reverse',
            f"gamma = {format_composition(gamma)} is not below its reverse; pass --normalize",
        )
    if not lex_less(alpha, beta):
        raise HypothesisError(
            'alpha-lex-below-beta',
            f"alpha = {format_composition(alpha)} is not below beta = {format_composition(beta)}; pass --normalize",
        )
    return alpha, beta, gamma


def witness_theorem(
    alpha: Composition,
    beta: Composition,
    gamma: Composition,
    normalize: bool = False,
) -> WitnessData:
    """Build the separating partition for Psi(alpha o gamma) versus Psi(beta o gamma).

    Raises:
        HypothesisError: an input hypothesis fails (in strict mode this includes the two
            lexicographic ordering hypotheses)
        TheoremViolation: the computed coefficients disagree with the leaf counts
    """
    alpha, beta, gamma = _check_hypotheses(tuple(alpha), tuple(beta), tuple(gamma), normalize)
    n = sum(alpha)
    g = sum(gamma)

    k_ab = first_difference_index(alpha, beta)
    k_g = first_difference_index(gamma, reverse(gamma))
    a = sum(alpha[:k_ab])
    b = sum(gamma[:k_g])
    delta1 = a * g + b
    delta2 = n * g - delta1
    lam = tuple(sorted((1, delta1 - 1, delta2), reverse=True))

    head = circ(alpha[:k_ab], gamma)
    rho1 = concat(head, gamma[:k_g])
    rho2 = near_concat(head, gamma[:k_g])

    sigma = circ(alpha, gamma)
    tau = circ(beta, gamma)
    coeff_s = u_polynomial_tree(psi(sigma)).coefficient(lam)
    coeff_t = u_polynomial_tree(psi(tau)).coefficient(lam)
    coeff_l = l_polynomial(sigma).coefficient(tuple(sorted((delta1, delta2), reverse=True)))

    label = f"alpha={format_composition(alpha)} beta={format_composition(beta)} gamma={format_composition(gamma)}"
    expected_s = leaf_count(psi(rho1))
    expected_t = leaf_count(psi(rho2))
    if coeff_s != expected_s or coeff_t != expected_t:
        logger.error(f"Witness mismatch for {label}: got ({coeff_s}, {coeff_t}), leaf counts ({expected_s}, {expected_t})")
        raise TheoremViolation(
            f"{label}: coefficients ({coeff_s}, {coeff_t}) differ from leaf counts ({expected_s}, {expected_t})"
        )
    if coeff_s == coeff_t:
        raise TheoremViolation(f"{label}: coefficient of x_{lam} is {coeff_s} on both sides")
    if coeff_l != 1:
        raise TheoremViolation(f"{label}: L-coefficient at ({delta1},{delta2}) is {coeff_l}, expected 1")

    logger.debug(f"Witness for {label}: lambda={lam} coefficients {coeff_s} != {coeff_t}")
    return WitnessData(
        alpha=alpha, beta=beta, gamma=gamma, n=n,
        k_ab=k_ab, k_g=k_g, a=a, b=b,
        delta1=delta1, delta2=delta2, lambda_witness=lam,
        rho1=rho1, rho2=rho2,
        coeff_S=coeff_s, coeff_T=coeff_t, coeff_L_delta=coeff_l,
    )


def split_for_witness(alpha: Composition, beta: Composition) -> Triple:
    """Write two L-equivalent, non-reverse-equivalent compositions as alpha' o gamma, beta' o gamma.

    gamma is the composite of the factors from the last non-palindromic one onward. beta is
    replaced by its reverse when that makes the two factors at that position agree, which
    leaves Psi(beta) unchanged up to isomorphism.
    """
    fa = irreducible_factorization(alpha).factors
    fb = irreducible_factorization(beta).factors
    if len(fa) != len(fb) or any(x != y and x != reverse(y) for x, y in zip(fa, fb)):
        raise HypothesisError(
            'same-symmetry-class',
            f"{format_composition(alpha)} and {format_composition(beta)} have unrelated factorizations",
        )
    asymmetric = [i for i, f in enumerate(fa) if not is_palindrome(f)]
    if not asymmetric:
        raise HypothesisError('not-reverse-equivalent', f"{format_composition(alpha)} is a palindrome")
    last = asymmetric[-1]
    if fb[last] != fa[last]:
        fb = tuple(reverse(f) for f in fb)
    if fa[:last] == fb[:last]:
        raise HypothesisError(
            'not-reverse-equivalent',
            f"{format_composition(alpha)} and {format_composition(beta)} are reverses of each other",
        )
    return recompose(fa[:last]), recompose(fb[:last]), recompose(fa[last:])


def _random_composition(total: int, rng: random.Random, min_part: int = 1) -> Composition:
    while True:
        mask = rng.getrandbits(total - 1) if total > 1 else 0
        parts: List[int] = []
        current = 1
        for i in range(total - 1):
            if mask >> i & 1:
                current += 1
            else:
                parts.append(current)
                current = 1
        parts.append(current)
        if min(parts) >= min_part:
            return tuple(parts)


def sample_triples(count: int, max_size: int = 30, seed: int = 0) -> List[Triple]:
    """Deterministic pseudo-random valid triples with |alpha| * |gamma| <= max_size.

    gamma is proper and not a palindrome; alpha != beta. Triples are not normalized.
    """
    if max_size < 10:
        raise HypothesisError('max-size', f"need max_size >= 10 to fit |alpha| >= 2 and |gamma| >= 5, got {max_size}")
    rng = random.Random(seed)
    triples: List[Triple] = []
    while len(triples) < count:
        gamma = _random_composition(rng.randint(5, max_size // 2), rng, min_part=2)
        if is_palindrome(gamma):
            continue
        m = rng.randint(2, max_size // sum(gamma))
        alpha = _random_composition(m, rng)
        beta = _random_composition(m, rng)
        if alpha == beta:
            continue
        triples.append((alpha, beta, gamma))
    return triples
