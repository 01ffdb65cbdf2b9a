"""Decorators that turn domain errors into clean CLI exits"""
import logging
from functools import wraps

import click
from pydantic import ValidationError

from catpoly.exceptions import CatpolyError
from catpoly.utils.logging_config import current_command

logger = logging.getLogger(__name__)


def handle_domain_errors(f):
    """Report CatpolyError and invalid invocations as a one-line error with exit status 1"""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        # begin() tags the context with the command name; restore the outer value on exit
        token = current_command.set(current_command.get())
        try:
            return f(*args, **kwargs)
        except CatpolyError as e:
            logger.debug(f"{type(e).__name__} in {f.__name__}: {e}")
            raise click.ClickException(str(e))
        except ValidationError as e:
            raise click.ClickException(f"invalid invocation: {e.errors()[0]['msg']}")
        finally:
            current_command.reset(token)

    return decorated_function
