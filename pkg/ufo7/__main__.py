import sys

from ufo7.cli import main

if __name__ == "__main__":
    sys.exit(main())
