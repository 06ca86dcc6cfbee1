import sys

from tokenham.cli import main

sys.exit(main())
