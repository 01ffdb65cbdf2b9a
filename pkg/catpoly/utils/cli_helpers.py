"""Shared click plumbing: parameter types, common options and output."""
import json
import logging
from typing import Any, Callable, Optional, Sequence

import click

from catpoly.exceptions import CompositionError
from catpoly.models.invocation import CliInvocation
from catpoly.services.compositions import format_composition, parse_composition
from catpoly.utils.logging_config import current_command

logger = logging.getLogger(__name__)


class CompositionType(click.ParamType):
    """Click parameter accepting "2,5,3" style compositions."""
    name = 'composition'

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return parse_composition(value)
        except CompositionError as e:
            self.fail(str(e), param, ctx)


COMPOSITION = CompositionType()

format_option = click.option(
    '--format', 'fmt', type=click.Choice(['text', 'json']), default='text', show_default=True,
    help='Output format.',
)
force_option = click.option('--force', is_flag=True, help='Ignore configured enumeration caps.')


def begin(subcommand: str, fmt: str = 'text', inputs: Sequence[Any] = (), jobs: int = 1,
          n: Optional[int] = None) -> CliInvocation:
    """Validate the invocation and tag subsequent log records with it."""
    invocation = CliInvocation(
        subcommand=subcommand,
        format=fmt,
        jobs=jobs,
        inputs=[format_composition(i) if isinstance(i, tuple) else str(i) for i in inputs],
        n=n,
    )
    current_command.set(subcommand)
    logger.info(f"Invocation: {invocation.describe()}")
    return invocation


def dumps(data: Any) -> str:
    return json.dumps(data, separators=(',', ':'))


def emit(invocation: CliInvocation, text: Callable[[], str], data: Callable[[], Any]) -> None:
    """Print either the text rendering or compact JSON, as the invocation asks."""
    if invocation.format == 'json':
        payload = data()
        click.echo(payload if isinstance(payload, str) else dumps(payload))
    else:
        click.echo(text())
