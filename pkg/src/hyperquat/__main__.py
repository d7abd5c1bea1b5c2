import sys

from hyperquat.cli import main

sys.exit(main())
