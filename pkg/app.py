"""
catpoly - command-line entry point

Commands:
- algebra: lpoly, factor, sym, lclass
- trees: upoly, ulpoly, chromatic, phi, psi, trees
- verification: witness, verify
"""

import os
from catpoly import create_cli

# Determine environment (default to production)
env = os.getenv('CATPOLY_ENV', 'production')
cli = create_cli(env)

if __name__ == '__main__':
    cli(prog_name='catpoly')
