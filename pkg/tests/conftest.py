import os

os.environ['CATPOLY_ENV'] = 'testing'

import pytest
from click.testing import CliRunner
from hypothesis import strategies as st

from catpoly import create_cli
from catpoly.models.tree import Tree


compositions = st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=7).map(tuple)
proper_compositions = st.lists(st.integers(min_value=2, max_value=5), min_size=2, max_size=5).map(tuple)


@pytest.fixture(scope='session')
def cli():
    return create_cli('testing')


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def path4():
    return Tree.from_edges([(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def path5():
    return Tree.from_edges([(0, 1), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def star5():
    return Tree.from_edges([(0, 1), (0, 2), (0, 3), (0, 4)])


@pytest.fixture
def write_edges(tmp_path):
    """Write an edge-list file and return its path."""
    def _write(text, name='tree.txt'):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write
