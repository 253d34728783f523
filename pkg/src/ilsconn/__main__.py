import sys

from ilsconn.cli import main

sys.exit(main())
