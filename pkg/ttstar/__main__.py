"""Entry point of `python -m ttstar`"""

from ttstar.tools.cli import main


raise SystemExit(main())
