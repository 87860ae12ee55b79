import sys

from zreorder.main import main

sys.exit(main())
