import sys

from dirfuzz.cli import main

sys.exit(main())
