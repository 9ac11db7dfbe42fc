import sys

from comfort_vitals.cli import main


sys.exit(main())
