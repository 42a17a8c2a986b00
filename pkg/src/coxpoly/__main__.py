import sys

from coxpoly.cli import main

sys.exit(main())
