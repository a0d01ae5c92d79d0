import sys

from LinkCommunity.Cli.LinkCommunityCli import main

sys.exit(main())
