"""The algebra of integer compositions.

A composition is stored as a plain tuple of positive ints. Size and length are always
derived (``sum`` and ``len``), never stored.

Conventions worth keeping in mind:

* ``circ(beta, alpha)`` is ``alpha^{odot beta_1} . alpha^{odot beta_2} ... alpha^{odot beta_k}``.
  The *left* argument supplies the exponents, the *right* argument is the repeated block.
* ``is_coarsening(alpha, beta)`` tests ``alpha`` being a coarsening of ``beta``.
* ``coarsenings(beta)`` yields one composition per subset of the ``len(beta) - 1`` gaps in
  increasing binary order: bit ``i`` of the mask set means gap ``i`` (between
  ``beta[i]`` and ``beta[i + 1]``) is merged. Mask 0 is ``beta`` itself.
* ``enumerate_compositions`` yields in lexicographic order.
"""
import logging
import re
from collections import Counter
from itertools import accumulate
from typing import Iterable, Iterator, Sequence, Tuple

from catpoly.exceptions import CompositionError
from catpoly.models.polynomials import Partition, PartitionPolynomial

logger = logging.getLogger(__name__)

Composition = Tuple[int, ...]

_SEPARATORS = re.compile(r'[,\s]+')


def make_composition(parts: Iterable[int]) -> Composition:
    """Validate and freeze a sequence of parts."""
    try:
        beta = tuple(int(p) for p in parts)
    except (TypeError, ValueError) as e:
        raise CompositionError(f"composition parts must be integers: {e}")
    if not beta:
        raise CompositionError("a composition must have at least one part")
    if min(beta) < 1:
        raise CompositionError(f"composition parts must be positive, got {format_composition(beta)}")
    return beta


def parse_composition(text: str) -> Composition:
    """Parse ``"2,5,3"``; brackets, parentheses and whitespace are tolerated."""
    stripped = text.strip().strip('[]()').strip()
    if not stripped:
        raise CompositionError(f"empty composition: {text!r}")
    tokens = [t for t in _SEPARATORS.split(stripped) if t]
    if not all(t.isdigit() for t in tokens):
        raise CompositionError(f"malformed composition {text!r}: expected comma-separated positive integers")
    return make_composition(int(t) for t in tokens)


def format_composition(beta: Sequence[int]) -> str:
    return ','.join(str(p) for p in beta)


def prefix(beta: Composition, k: int) -> Composition:
    """beta_1 ... beta_k."""
    if not 1 <= k <= len(beta):
        raise CompositionError(f"prefix length {k} outside 1..{len(beta)}")
    return beta[:k]


def is_prefix(alpha: Composition, beta: Composition) -> bool:
    """True when beta = alpha . something (or beta = alpha)."""
    return len(alpha) <= len(beta) and beta[:len(alpha)] == alpha


def reverse(beta: Composition) -> Composition:
    return beta[::-1]


def is_palindrome(beta: Composition) -> bool:
    return beta == beta[::-1]


def lex_less(alpha: Composition, beta: Composition) -> bool:
    """Strict lexicographic order with the prefix clause (a proper prefix is smaller)."""
    if alpha == beta:
        raise CompositionError(f"lex_less is strict; both arguments are {format_composition(alpha)}")
    for a, b in zip(alpha, beta):
        if a != b:
            return a < b
    return len(alpha) < len(beta)


def first_difference_index(alpha: Composition, beta: Composition) -> int:
    """1-based index of the first difference.

    When one argument is a proper prefix of the other the index is ``len(shorter) + 1``.
    """
    if alpha == beta:
        raise CompositionError(f"no difference between equal compositions {format_composition(alpha)}")
    for k, (a, b) in enumerate(zip(alpha, beta), start=1):
        if a != b:
            return k
    return min(len(alpha), len(beta)) + 1


def reverse_class_rep(beta: Composition) -> Composition:
    """Lexicographically smaller of beta and its reverse."""
    rev = beta[::-1]
    if rev != beta and lex_less(rev, beta):
        return rev
    return beta


def concat(alpha: Composition, beta: Composition) -> Composition:
    return alpha + beta


def near_concat(alpha: Composition, beta: Composition) -> Composition:
    return alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:]


def odot_power(alpha: Composition, i: int) -> Composition:
    """alpha near-concatenated with itself i times."""
    if i < 1:
        raise CompositionError(f"odot power needs a positive exponent, got {i}")
    if i == 1:
        return alpha
    if len(alpha) == 1:
        return (alpha[0] * i,)
    joint = alpha[-1] + alpha[0]
    inner = alpha[1:-1]
    return alpha[:-1] + ((joint,) + inner) * (i - 1) + (alpha[-1],)


def circ(beta: Composition, alpha: Composition) -> Composition:
    """beta o alpha = alpha^{odot beta_1} . ... . alpha^{odot beta_k}."""
    out: Tuple[int, ...] = ()
    for b in beta:
        out += odot_power(alpha, b)
    return out


def _merge_by_mask(beta: Composition, mask: int) -> Composition:
    parts = []
    current = beta[0]
    for i in range(1, len(beta)):
        if mask >> (i - 1) & 1:
            current += beta[i]
        else:
            parts.append(current)
            current = beta[i]
    parts.append(current)
    return tuple(parts)


def coarsenings(beta: Composition) -> Iterator[Composition]:
    """All 2^(len - 1) coarsenings, in increasing gap-mask order."""
    for mask in range(1 << (len(beta) - 1)):
        yield _merge_by_mask(beta, mask)


def is_coarsening(alpha: Composition, beta: Composition) -> bool:
    """True iff alpha arises from beta by merging runs of consecutive parts."""
    if sum(alpha) != sum(beta):
        return False
    cuts = set(accumulate(beta))
    return all(s in cuts for s in accumulate(alpha))


def partition_type(beta: Sequence[int]) -> Partition:
    return tuple(sorted(beta, reverse=True))


def l_polynomial(beta: Composition) -> PartitionPolynomial:
    """Sum of x_{lambda(alpha)} over every coarsening alpha of beta."""
    counts: Counter = Counter()
    for alpha in coarsenings(beta):
        counts[tuple(sorted(alpha, reverse=True))] += 1
    return PartitionPolynomial(counts)


def _extend(remaining: int, min_part: int, head: Composition) -> Iterator[Composition]:
    if remaining == 0:
        yield head
        return
    for part in range(min_part, remaining + 1):
        rest = remaining - part
        if rest != 0 and rest < min_part:
            continue
        yield from _extend(rest, min_part, head + (part,))


def enumerate_compositions(n: int, min_part: int = 1, start: Sequence[int] = ()) -> Iterator[Composition]:
    """Every composition of n with parts >= min_part, in lexicographic order.

    ``start`` restricts the output to compositions beginning with that prefix, which is
    how callers split the enumeration into independent chunks.
    """
    if n < 1 or min_part < 1:
        raise CompositionError(f"need n >= 1 and min_part >= 1, got n={n}, min_part={min_part}")
    head = tuple(start)
    if any(p < min_part for p in head) or sum(head) > n:
        return
    yield from _extend(n - sum(head), min_part, head)


def leaf_functional(gamma: Composition) -> int:
    """N(gamma) = |gamma| - len(gamma); the leaf count of psi(gamma) for proper gamma."""
    return sum(gamma) - len(gamma)


def is_proper(gamma: Composition) -> bool:
    """Every part at least 2."""
    return min(gamma) >= 2
