from tropsec.cli import main

raise SystemExit(main())
