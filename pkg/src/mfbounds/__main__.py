import sys

from mfbounds.cli import main

sys.exit(main())
