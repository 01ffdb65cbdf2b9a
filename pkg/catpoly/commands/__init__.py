"""Command exports for the CLI factory"""

from .algebra import algebra_commands
from .trees import tree_commands
from .verification import verification_commands

__all__ = [
    'algebra_commands',
    'tree_commands',
    'verification_commands',
]
