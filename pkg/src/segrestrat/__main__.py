from segrestrat.cli import main

raise SystemExit(main())
