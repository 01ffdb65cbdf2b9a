import pytest

from catpoly.services.compositions import enumerate_compositions
from catpoly.services.factorization import sym_class
from catpoly.services.lclass import (
    is_l_unique,
    l_class_bruteforce,
    l_class_chunk,
    l_classes,
    merge_class_maps,
    reverse_classes,
)


def test_l_class_contains_reverse():
    assert l_class_bruteforce((2, 3)) == {(2, 3), (3, 2)}


def test_smallest_nontrivial_l_class():
    assert l_class_bruteforce((1, 2, 1, 3, 2)) == sym_class((1, 2, 1, 3, 2))
    assert not is_l_unique((1, 2, 1, 3, 2))


@pytest.mark.parametrize('n', range(1, 9))
def test_everything_below_nine_is_l_unique(n):
    assert all(is_l_unique(beta) for beta in enumerate_compositions(n))


def test_index_covers_every_composition():
    index = l_classes(7)
    members = [beta for group in index.values() for beta in group]
    assert sorted(members) == sorted(enumerate_compositions(7))


def test_chunks_merge_in_order():
    chunks = [l_class_chunk(6, first) for first in range(1, 7)]
    merged = merge_class_maps(chunks)
    assert {k: tuple(sorted(v)) for k, v in merged.items()} == l_classes(6)


def test_min_part_restricts_the_index():
    index = l_classes(6, min_part=2)
    members = sorted(beta for group in index.values() for beta in group)
    assert members == [(2, 2, 2), (2, 4), (3, 3), (4, 2), (6,)]


def test_reverse_classes():
    assert reverse_classes([(4, 2), (2, 4), (3, 3), (2, 2, 2)]) == {(2, 4), (3, 3), (2, 2, 2)}
