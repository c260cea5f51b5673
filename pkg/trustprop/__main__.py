import sys

from trustprop.app import main

sys.exit(main())
