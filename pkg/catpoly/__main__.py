import sys

from catpoly import run

sys.exit(run())
