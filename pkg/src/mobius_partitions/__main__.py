import sys

from mobius_partitions.cli import main

sys.exit(main())
