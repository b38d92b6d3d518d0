import sys

from subcount.main import main

sys.exit(main())
