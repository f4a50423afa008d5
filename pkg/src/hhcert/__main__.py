"""Entry point for ``python -m hhcert``."""

import sys

from .cli import main

sys.exit(main())
