import sys

from hypack.cli import main

sys.exit(main())
