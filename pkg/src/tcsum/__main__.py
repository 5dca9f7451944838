import sys

from tcsum.cli import main

sys.exit(main())
