import sys

from consarith.cli import main

sys.exit(main())
