import sys

from napoleon.main import main

sys.exit(main())
