"""Brute-force L-classes.

Cost: building the index for n touches all 2^(n-1) compositions of n and, for each,
its 2^(len-1) coarsenings (3^(n-1) partition types in total). Chunks keyed by first part
are independent and merge by concatenating their class lists.
"""
import logging
from collections import defaultdict
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from catpoly.services.compositions import (
    Composition,
    enumerate_compositions,
    l_polynomial,
    reverse,
    reverse_class_rep,
)

logger = logging.getLogger(__name__)

ClassMap = Dict[str, List[Composition]]


def l_class_chunk(n: int, first_part: int, min_part: int = 1) -> ClassMap:
    """Group the compositions of n that start with first_part by their L-polynomial key."""
    classes: ClassMap = defaultdict(list)
    for beta in enumerate_compositions(n, min_part, start=(first_part,)):
        classes[l_polynomial(beta).canonical_key()].append(beta)
    return dict(classes)


def merge_class_maps(maps: Iterable[ClassMap]) -> ClassMap:
    """Associative merge of chunk results; order of appearance is preserved."""
    merged: ClassMap = defaultdict(list)
    for chunk in maps:
        for key, members in chunk.items():
            merged[key].extend(members)
    return dict(merged)


@lru_cache(maxsize=16)
def l_classes(n: int, min_part: int = 1) -> Dict[str, Tuple[Composition, ...]]:
    """Every composition of n grouped by L-polynomial key."""
    merged = merge_class_maps(l_class_chunk(n, first, min_part) for first in range(min_part, n + 1))
    logger.debug(f"L-class index for n={n}: {len(merged)} classes")
    return {key: tuple(sorted(members)) for key, members in merged.items()}


def l_class_bruteforce(beta: Composition) -> FrozenSet[Composition]:
    """All compositions of |beta| sharing beta's L-polynomial, by exhaustive scan."""
    index = l_classes(sum(beta))
    return frozenset(index[l_polynomial(beta).canonical_key()])


def is_l_unique(beta: Composition) -> bool:
    """The L-class is contained in the reverse-class {beta, reverse(beta)}."""
    return l_class_bruteforce(beta) <= {beta, reverse(beta)}


def reverse_classes(compositions: Iterable[Composition]) -> Set[Composition]:
    """Quotient by reversal, one canonical representative per class."""
    return {reverse_class_rep(beta) for beta in compositions}
