"""Composition commands - L-polynomials, factorization, symmetry and L-classes"""
import click

from catpoly.middleware.error_handlers import handle_domain_errors
from catpoly.services.compositions import format_composition, l_polynomial
from catpoly.services.factorization import irreducible_factorization, sym_class
from catpoly.services.lclass import l_class_bruteforce
from catpoly.utils.caps import enforce_cap
from catpoly.utils.cli_helpers import COMPOSITION, begin, emit, force_option, format_option


def _listing(compositions):
    return sorted(compositions)


@click.command('lpoly')
@click.argument('beta', type=COMPOSITION)
@format_option
@handle_domain_errors
def lpoly(beta, fmt):
    """Print the L-polynomial of BETA."""
    invocation = begin('lpoly', fmt, [beta])
    poly = l_polynomial(beta)
    emit(invocation, poly.canonical_key, poly.to_json)


@click.command('factor')
@click.argument('beta', type=COMPOSITION)
@format_option
@handle_domain_errors
def factor(beta, fmt):
    """Print the irreducible factorization of BETA."""
    invocation = begin('factor', fmt, [beta])
    factorization = irreducible_factorization(beta)
    emit(
        invocation,
        lambda: str(factorization),
        lambda: {'composition': list(beta), 'factors': [list(f) for f in factorization]},
    )


@click.command('sym')
@click.argument('beta', type=COMPOSITION)
@format_option
@handle_domain_errors
def sym(beta, fmt):
    """Print the symmetry class of BETA (factors reversed independently)."""
    invocation = begin('sym', fmt, [beta])
    members = _listing(sym_class(beta))
    emit(
        invocation,
        lambda: '\n'.join(format_composition(m) for m in members),
        lambda: {'composition': list(beta), 'class': [list(m) for m in members]},
    )


@click.command('lclass')
@click.argument('beta', type=COMPOSITION)
@click.option('--exhaustive', is_flag=True, help='Scan every composition of |BETA| instead of using factorization.')
@force_option
@format_option
@handle_domain_errors
def lclass(beta, exhaustive, force, fmt):
    """Print the L-class of BETA."""
    invocation = begin('lclass', fmt, [beta])
    if exhaustive:
        n = sum(beta)
        enforce_cap('MAX_COMPOSITION_N', n, f"3^{n - 1} coarsenings", force=force)
        members = _listing(l_class_bruteforce(beta))
    else:
        members = _listing(sym_class(beta))
    emit(
        invocation,
        lambda: '\n'.join(format_composition(m) for m in members),
        lambda: {'composition': list(beta), 'exhaustive': exhaustive, 'class': [list(m) for m in members]},
    )


algebra_commands = [lpoly, factor, sym, lclass]
