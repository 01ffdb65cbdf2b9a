"""CLI factory for catpoly"""
import os
import sys
from typing import Optional, Sequence

import click

from config import get_config

__version__ = '1.0.0'


def create_cli(config_name='default'):
    """Create and configure the command-line interface"""
    cfg = get_config(config_name)
    # services and worker processes resolve caps through CATPOLY_ENV
    os.environ['CATPOLY_ENV'] = config_name

    # Setup logging
    from catpoly.utils.logging_config import setup_logging
    logger = setup_logging(cfg)

    @click.group(context_settings={'help_option_names': ['-h', '--help']})
    @click.version_option(__version__, prog_name='catpoly')
    def cli():
        """Compositions, caterpillars and their U-polynomials."""

    # Register commands
    from catpoly.commands import algebra_commands, tree_commands, verification_commands

    for command in (*algebra_commands, *tree_commands, *verification_commands):
        cli.add_command(command)

    logger.debug(f"CLI ready with {len(cli.commands)} commands ({config_name} config)")
    return cli


def run(args: Optional[Sequence[str]] = None, config_name: Optional[str] = None) -> int:
    """Dispatch one invocation and return its exit status."""
    cli = create_cli(config_name or os.getenv('CATPOLY_ENV', 'production'))
    try:
        status = cli.main(args=list(args) if args is not None else sys.argv[1:], prog_name='catpoly', standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo('Aborted!', err=True)
        return 1
    return status if isinstance(status, int) else 0
