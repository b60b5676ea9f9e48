import sys

from lpbus.cli import main

sys.exit(main())
