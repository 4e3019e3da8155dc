import sys

from bvkit.cli import main

sys.exit(main())
