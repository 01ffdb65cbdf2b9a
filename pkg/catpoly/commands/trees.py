"""Tree commands - U-polynomials, the caterpillar correspondence and enumeration"""
import logging

import click
import networkx as nx

from catpoly.exceptions import TreeError
from catpoly.middleware.error_handlers import handle_domain_errors
from catpoly.services.caterpillars import phi as phi_of, psi as psi_of, u_restricted
from catpoly.services.compositions import format_composition
from catpoly.services.trees import (
    canonical_code,
    chromatic_p_expansion,
    enumerate_free_trees,
    format_tree,
    parse_tree,
    u_polynomial_bruteforce,
    u_polynomial_tree,
)
from catpoly.utils.cli_helpers import COMPOSITION, begin, emit, force_option, format_option

logger = logging.getLogger(__name__)

tree_option = click.option('--tree', 'tree_file', type=click.File('r'), help='Edge-list file, one "u v" per line.')
composition_option = click.option('--composition', type=COMPOSITION, help='Use the caterpillar Psi(COMPOSITION).')


def _load_tree(tree_file, composition):
    if (tree_file is None) == (composition is None):
        raise click.UsageError('give exactly one of --tree or --composition')
    if composition is not None:
        return psi_of(composition), format_composition(composition)
    return parse_tree(tree_file.read()), tree_file.name


def _load_graph(graph_file) -> nx.Graph:
    try:
        return nx.parse_edgelist(graph_file.read().splitlines(), nodetype=int, data=False)
    except (TypeError, ValueError) as e:
        raise TreeError(f"unreadable edge list {graph_file.name}: {e}")


def _tree_payload(tree):
    return {'n': tree.vertex_count, 'edges': [list(e) for e in tree.edges]}


@click.command('upoly')
@tree_option
@composition_option
@click.option('--graph', 'graph_file', type=click.File('r'),
              help='Edge list of any simple graph (brute force, keeps the y variable).')
@click.option('--with-y', is_flag=True, help='Brute-force the two-variable form over all edge subsets.')
@force_option
@format_option
@handle_domain_errors
def upoly(tree_file, composition, graph_file, with_y, force, fmt):
    """Print the U-polynomial of a tree, a caterpillar or a simple graph."""
    if graph_file is not None:
        if tree_file is not None or composition is not None:
            raise click.UsageError('--graph cannot be combined with --tree or --composition')
        invocation = begin('upoly', fmt, [graph_file.name])
        poly = u_polynomial_bruteforce(_load_graph(graph_file), include_y=True, force=force)
    else:
        tree, source = _load_tree(tree_file, composition)
        invocation = begin('upoly', fmt, [source])
        if with_y:
            poly = u_polynomial_bruteforce(tree, include_y=True, force=force)
        else:
            poly = u_polynomial_tree(tree)
    emit(invocation, poly.canonical_key, poly.to_json)


@click.command('ulpoly')
@tree_option
@composition_option
@format_option
@handle_domain_errors
def ulpoly(tree_file, composition, fmt):
    """Print the restricted U^L-polynomial of a caterpillar."""
    tree, source = _load_tree(tree_file, composition)
    invocation = begin('ulpoly', fmt, [source])
    poly = u_restricted(tree)
    emit(invocation, poly.canonical_key, poly.to_json)


@click.command('chromatic')
@tree_option
@composition_option
@format_option
@handle_domain_errors
def chromatic(tree_file, composition, fmt):
    """Print the power-sum expansion of a tree's chromatic symmetric function."""
    tree, source = _load_tree(tree_file, composition)
    invocation = begin('chromatic', fmt, [source])
    poly = chromatic_p_expansion(tree)
    emit(invocation, lambda: poly.canonical_key(symbol='p'), poly.to_json)


@click.command('phi')
@tree_option
@format_option
@handle_domain_errors
def phi(tree_file, fmt):
    """Print the spine composition (reverse-class representative) of a proper caterpillar."""
    if tree_file is None:
        raise click.UsageError('--tree is required')
    tree = parse_tree(tree_file.read())
    invocation = begin('phi', fmt, [tree_file.name])
    beta = phi_of(tree)
    emit(invocation, lambda: format_composition(beta), lambda: {'composition': list(beta)})


@click.command('psi')
@click.argument('beta', type=COMPOSITION)
@format_option
@handle_domain_errors
def psi(beta, fmt):
    """Print the edge list of the proper caterpillar with spine composition BETA."""
    invocation = begin('psi', fmt, [beta])
    tree = psi_of(beta)
    emit(invocation, lambda: format_tree(tree), lambda: _tree_payload(tree))


@click.command('trees')
@click.argument('n', type=click.IntRange(min=1))
@force_option
@format_option
@handle_domain_errors
def trees(n, force, fmt):
    """List one tree per isomorphism class on N vertices, by canonical code."""
    invocation = begin('trees', fmt, n=n)
    found = sorted(((canonical_code(t), t) for t in enumerate_free_trees(n, force=force)), key=lambda ct: ct[0])
    logger.info(f"Enumerated {len(found)} trees on {n} vertices")
    emit(
        invocation,
        lambda: '\n'.join(code for code, _ in found),
        lambda: {'n': n, 'count': len(found), 'trees': [{'code': code, **_tree_payload(t)} for code, t in found]},
    )


tree_commands = [upoly, ulpoly, chromatic, phi, psi, trees]
