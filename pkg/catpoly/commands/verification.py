"""Verification commands - the witness construction and the exhaustive checks"""
import click

from config import get_config
from catpoly.middleware.error_handlers import handle_domain_errors
from catpoly.services.verify import CHECKS, run_check
from catpoly.services.witness import witness_theorem
from catpoly.utils.cli_helpers import COMPOSITION, begin, emit, force_option, format_option


@click.command('witness')
@click.option('--alpha', type=COMPOSITION, required=True)
@click.option('--beta', type=COMPOSITION, required=True)
@click.option('--gamma', type=COMPOSITION, required=True)
@click.option('--normalize', is_flag=True,
              help='Reverse and reorder the triple into the required form instead of rejecting it.')
@format_option
@handle_domain_errors
def witness(alpha, beta, gamma, normalize, fmt):
    """Show the partition separating U(Psi(alpha o gamma)) from U(Psi(beta o gamma))."""
    invocation = begin('witness', fmt, [alpha, beta, gamma])
    data = witness_theorem(alpha, beta, gamma, normalize=normalize)
    emit(invocation, data.to_text, data.to_json)


@click.command('verify')
@click.argument('check', type=click.Choice(list(CHECKS)))
@click.option('--n', 'n', type=click.IntRange(min=1), default=None, help='Size bound (defaults per check).')
@click.option('--jobs', type=click.IntRange(min=1), default=None, help='Worker processes.')
@click.option('--seed', type=int, default=None, help='Seed for randomized checks.')
@click.option('--samples', type=click.IntRange(min=0), default=None, help='Random instances for randomized checks.')
@click.option('--timing', is_flag=True, help='Include elapsed time in the report.')
@force_option
@format_option
@handle_domain_errors
@click.pass_context
def verify(ctx, check, n, jobs, seed, samples, timing, force, fmt):
    """Run CHECK exhaustively; exits with status 1 if any instance fails."""
    jobs = jobs or get_config().DEFAULT_JOBS
    invocation = begin('verify', fmt, [check], jobs=jobs, n=n or CHECKS[check].default_n)
    report = run_check(check, n=invocation.n, jobs=jobs, force=force, samples=samples, seed=seed)
    emit(invocation, lambda: report.to_text(include_timing=timing), lambda: report.to_json(include_timing=timing))
    if not report.passed:
        ctx.exit(1)


verification_commands = [witness, verify]
