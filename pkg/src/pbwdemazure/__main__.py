"""
# pbwdemazure.__main__

Enables `pbwdemazure` to be run as a module via `python -m pbwdemazure`.
Delegates immediately to `cli.main()`, keeping this file a thin entry point with no logic of its own.
"""
import sys
from .cli import main



if __name__ == "__main__":
    sys.exit(main())
