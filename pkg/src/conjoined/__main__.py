import sys

from conjoined.cli import main

sys.exit(main())
