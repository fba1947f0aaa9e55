"""Allow ``python -m cyclepack``."""

from cyclepack.cli import main

if __name__ == "__main__":
    main()
