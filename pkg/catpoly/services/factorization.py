"""Factorization of compositions under the circ product.

Right factors are found by a deterministic parse. A right factor gamma with at least two
parts must appear at the start of beta, either whole (``beta[:m]``) or with its last part
merged into the next copy (``beta[:m-1] + (beta[m-1] - beta[0],)``). For each such
candidate, beta is read left to right as copies of gamma. Each copy ends either with
``gamma[-1]`` (the run closes) or with ``gamma[-1] + gamma[0]`` (the next copy is
near-concatenated). The two readings never coincide, so each candidate parses in one
pass. Single-part right factors ``(d,)`` are exactly the divisors of ``gcd(beta)``.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product
from math import gcd
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from catpoly.services.compositions import (
    Composition,
    circ,
    enumerate_compositions,
    format_composition,
    is_palindrome,
    reverse,
)

logger = logging.getLogger(__name__)

Factorization = Tuple[Composition, Composition]


@dataclass(frozen=True)
class IrreducibleFactorization:
    """Ordered irreducible factors; composing them left to right under circ gives the original."""
    factors: Tuple[Composition, ...]

    def __iter__(self) -> Iterator[Composition]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def recompose(self) -> Composition:
        return recompose(self.factors)

    def __str__(self) -> str:
        return ' ∘ '.join(f"({format_composition(f)})" for f in self.factors)


def _divisors(k: int) -> List[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


def is_trivial_factorization(beta: Composition, gamma: Composition) -> bool:
    """The three trivial cases: a unit factor, two single parts, or two all-ones factors."""
    if beta == (1,) or gamma == (1,):
        return True
    if len(beta) == 1 and len(gamma) == 1:
        return True
    return all(p == 1 for p in beta) and all(p == 1 for p in gamma)


def _parse_runs(beta: Composition, gamma: Composition) -> Optional[Composition]:
    """Read beta as delta o gamma for a gamma of length >= 2; return delta or None."""
    first, last = gamma[0], gamma[-1]
    middle = gamma[1:-1]
    joint = last + first
    runs = []
    i, end = 0, len(beta)
    while i < end:
        if beta[i] != first:
            return None
        i += 1
        run = 1
        while True:
            for part in middle:
                if i >= end or beta[i] != part:
                    return None
                i += 1
            if i >= end:
                return None
            closing = beta[i]
            i += 1
            if closing == last:
                runs.append(run)
                break
            if closing != joint:
                return None
            run += 1
    return tuple(runs)


def right_factorizations(beta: Composition) -> List[Factorization]:
    """Every pair (delta, gamma) with delta o gamma == beta, trivial ones included."""
    found: Set[Factorization] = set()
    total = sum(beta)
    common = reduce(gcd, beta)
    for d in _divisors(common):
        found.add((tuple(p // d for p in beta), (d,)))
    for m in range(2, len(beta) + 1):
        candidates = [beta[:m]]
        if beta[m - 1] > beta[0]:
            candidates.append(beta[:m - 1] + (beta[m - 1] - beta[0],))
        for gamma in candidates:
            if total % sum(gamma):
                continue
            delta = _parse_runs(beta, gamma)
            if delta is not None:
                found.add((delta, gamma))
    return sorted(found, key=lambda dg: (sum(dg[1]), len(dg[1]), dg[1]))


def nontrivial_factorizations(beta: Composition) -> List[Factorization]:
    return [(d, g) for d, g in right_factorizations(beta) if not is_trivial_factorization(d, g)]


@lru_cache(maxsize=None)
def is_irreducible(beta: Composition) -> bool:
    """True when beta admits only trivial factorizations."""
    return not nontrivial_factorizations(beta)


def recompose(factors) -> Composition:
    """Compose factors left to right under circ."""
    return reduce(circ, factors)


def _merge_trivial_neighbours(factors) -> Tuple[Composition, ...]:
    merged: List[Composition] = []
    for factor in factors:
        if factor == (1,):
            continue
        merged.append(factor)
        while len(merged) >= 2 and is_trivial_factorization(merged[-2], merged[-1]):
            right = merged.pop()
            left = merged.pop()
            merged.append(circ(left, right))
    return tuple(merged) or ((1,),)


@lru_cache(maxsize=None)
def _factor_chain(beta: Composition) -> Tuple[Composition, ...]:
    nontrivial = nontrivial_factorizations(beta)
    if not nontrivial:
        return (beta,)
    # smallest right factor first; recurse on the left side
    delta, gamma = nontrivial[0]
    return _merge_trivial_neighbours(_factor_chain(delta) + _factor_chain(gamma))


def irreducible_factorization(beta: Composition) -> IrreducibleFactorization:
    """The unique irreducible factorization of beta."""
    factors = _factor_chain(tuple(beta))
    reducible = [f for f in factors if not is_irreducible(f)]
    if reducible or recompose(factors) != tuple(beta):
        logger.error(f"Factorization of {format_composition(beta)} is inconsistent: {factors}")
        raise RuntimeError(f"factorization of {format_composition(beta)} failed self-check")
    return IrreducibleFactorization(factors)


def sym_class(beta: Composition) -> FrozenSet[Composition]:
    """All compositions obtained by independently reversing the irreducible factors."""
    factors = irreducible_factorization(beta).factors
    choices = [(f,) if is_palindrome(f) else (f, reverse(f)) for f in factors]
    return frozenset(recompose(pick) for pick in product(*choices))


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

@lru_cache(maxsize=4)
def product_table(max_size: int) -> Dict[Composition, Tuple[Factorization, ...]]:
    """Every delta o gamma with |delta| * |gamma| <= max_size, keyed by the product."""
    table: Dict[Composition, List[Factorization]] = defaultdict(list)
    for total in range(1, max_size + 1):
        for d in _divisors(total):
            for gamma in enumerate_compositions(d):
                for delta in enumerate_compositions(total // d):
                    table[circ(delta, gamma)].append((delta, gamma))
    logger.debug(f"Built circ product table up to size {max_size}: {len(table)} products")
    return {k: tuple(v) for k, v in table.items()}


def all_irreducible_factorizations_bruteforce(beta: Composition, max_size: Optional[int] = None) -> Set[Tuple[Composition, ...]]:
    """Every irreducible factorization of beta, found from the exhaustive product table."""
    table = product_table(max_size or sum(beta))
    memo: Dict[Composition, Set[Tuple[Composition, ...]]] = {}

    def irreducible(c: Composition) -> bool:
        return all(is_trivial_factorization(d, g) for d, g in table[c])

    def search(c: Composition) -> Set[Tuple[Composition, ...]]:
        if c in memo:
            return memo[c]
        results: Set[Tuple[Composition, ...]] = set()
        if irreducible(c):
            results.add((c,))
        for delta, gamma in table[c]:
            if is_trivial_factorization(delta, gamma) or not irreducible(gamma):
                continue
            for head in search(delta):
                if not is_trivial_factorization(head[-1], gamma):
                    results.add(head + (gamma,))
        memo[c] = results
        return results

    return search(tuple(beta))
