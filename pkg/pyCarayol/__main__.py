import sys

from pyCarayol.cli import main

sys.exit( main() )
