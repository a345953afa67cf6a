import sys

from dyncoord.cli import main

sys.exit(main())
