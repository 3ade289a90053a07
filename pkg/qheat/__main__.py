import sys

from qheat.main import main

sys.exit(main())
