"""Entry point for running coroot_mcp as a module with python -m coroot_mcp"""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
