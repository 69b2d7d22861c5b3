import sys

from latmin.cli import main

sys.exit(main())
