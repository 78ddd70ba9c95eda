import sys

from src.cli.cli import main

sys.exit(main())
